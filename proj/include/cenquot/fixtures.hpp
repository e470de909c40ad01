#ifndef CENQUOT_FIXTURES_HPP
#define CENQUOT_FIXTURES_HPP

#include "cenquot/oracle.hpp"
#include "cenquot/parse.hpp"

namespace cenquot {

// F_p[x,y]/<x^2> carries a 2x2 matrix whose centralizer strictly exceeds the
// structural description: the witness commutes but is not in the described
// set, and the classifier cannot certify the matrix.
struct QuotientGapFixture {
    IdealHandle ideal;
    MatrixOverQuotient matrix;
    MatrixOverQuotient witness;
    IMatrixVerdict verdict;
    CentralizerDescription description;
    MembershipResult witness_membership;
    bool witness_commutes = false;
};

inline QuotientGapFixture quotient_gap_fixture(unsigned p = 2) {
    QuotientGapFixture fx;
    auto R = ring_bivariate_fp(p);
    fx.ideal = build_ideal(R, {parse_element("x^2", R)});
    auto el = [&](const char* s) { return project(fx.ideal, parse_element(s, R)); };
    fx.matrix = MatrixOverQuotient::from_rows({{el("x+y"), el("y")}, {el("x"), el("x")}});
    fx.witness = MatrixOverQuotient::from_rows({{el("x"), el("x")}, {el("0"), el("0")}});
    fx.witness_commutes = commutes(fx.witness, fx.matrix);
    fx.verdict = classify(fx.matrix);
    fx.description = describe_centralizer(fx.matrix, fx.verdict);
    fx.witness_membership = decompose(fx.witness, fx.description);
    if (!fx.witness_commutes) throw error("gap fixture: witness must commute");
    if (fx.verdict.certified()) throw error("gap fixture: matrix must not be certified");
    if (fx.witness_membership.kind != MembershipResult::Kind::NotMember)
        throw error("gap fixture: witness must fall outside the described set");
    return fx;
}

// For n >= 3 and any factor ring with zero divisors d*d' = 0, the matrix with
// the 3x3 nilpotent core [[0,d,1],[0,0,1],[0,0,0]] has a commuting witness
// that escapes the image-plus-annihilator-grid sum: every matrix of that sum
// has a zero at position (2,1), the witness has d' there.
struct PropositionGapFixture {
    IdealHandle ideal;
    MatrixOverQuotient matrix;
    MatrixOverQuotient witness;
    std::vector<MatrixOverRing> centralizer_span;  // hard-coded generators of the base centralizer
    AnnBlockGrid grid;
    bool witness_commutes = false;
    bool span_zero_at_21 = false;      // all span generators vanish at (2,1)
    bool grid_rejects_witness = false; // witness entry (2,1) is outside its block
    bool witness_in_sum = true;        // derived conclusion
};

inline PropositionGapFixture proposition_gap_fixture(std::size_t n, const Residue& d, const Residue& dprime) {
    if (n < 3) throw error("the gap needs n >= 3");
    if (d.is_zero() || dprime.is_zero()) throw error("zero-divisor pair must be nonzero");
    if (!(d * dprime).is_zero()) throw error("d * d' must vanish in the quotient");
    PropositionGapFixture fx;
    fx.ideal = d.ideal;
    const IdealHandle& I = fx.ideal;
    const RingDescriptor& R = I->ring;
    const UfdElement zero = UfdElement::zero(R);
    const UfdElement one = UfdElement::one(R);

    MatrixOverRing core(3, zero);
    core.at(0, 1) = d.rep;
    core.at(0, 2) = one;
    core.at(1, 2) = one;

    auto embed = [&](const MatrixOverRing& m) {
        MatrixOverRing out(n, zero);
        for (std::size_t i = 0; i < m.n; ++i)
            for (std::size_t j = 0; j < m.n; ++j) out.at(i, j) = m.at(i, j);
        return out;
    };

    MatrixOverRing b_lift = embed(core);
    fx.matrix = project_matrix(I, b_lift);

    MatrixOverRing w_core(3, zero);
    w_core.at(0, 0) = dprime.rep;
    w_core.at(1, 0) = dprime.rep;
    w_core.at(2, 2) = dprime.rep;
    fx.witness = project_matrix(I, embed(w_core));
    fx.witness_commutes = commutes(fx.witness, fx.matrix);

    // centralizer of the core over the base ring: quotient-field span of
    // [[0,0,d],[0,0,0],[0,0,0]], the core itself, and the identity
    MatrixOverRing nmat(3, zero);
    nmat.at(0, 2) = d.rep;
    MatrixOverRing eye(3, zero);
    for (int i = 0; i < 3; ++i) eye.at(i, i) = one;
    fx.centralizer_span = {embed(nmat), b_lift, embed(eye)};

    fx.span_zero_at_21 = true;
    for (const auto& g : fx.centralizer_span)
        if (!g.at(1, 0).is_zero()) fx.span_zero_at_21 = false;

    fx.grid = prop_grid(fx.matrix);
    fx.grid_rejects_witness = !fx.grid.at(1, 0).member(fx.witness.at(1, 0));
    fx.witness_in_sum = !(fx.span_zero_at_21 && fx.grid_rejects_witness);
    if (!fx.witness_commutes) throw error("proposition gap: witness must commute");
    return fx;
}

}  // namespace cenquot

#endif
