#ifndef CENQUOT_CENTRALIZER_QUOTIENT_HPP
#define CENQUOT_CENTRALIZER_QUOTIENT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cenquot/imatrix.hpp"

namespace cenquot {

// Block layout of the annihilator summand.  The three displays differ only by
// which diagonal corner is pinned to the zero ideal; they describe the same
// set.  CLI ids: 70 = ZeroTopLeft, 71 = ZeroBottomRight, 72 = FreeDiagonal.
enum class BlockVariant { ZeroTopLeft, ZeroBottomRight, FreeDiagonal };

inline BlockVariant variant_from_id(int id) {
    switch (id) {
        case 70: return BlockVariant::ZeroTopLeft;
        case 71: return BlockVariant::ZeroBottomRight;
        case 72: return BlockVariant::FreeDiagonal;
    }
    throw error("unknown block-variant id " + std::to_string(id));
}
inline int variant_id(BlockVariant v) {
    switch (v) {
        case BlockVariant::ZeroTopLeft: return 70;
        case BlockVariant::ZeroBottomRight: return 71;
        case BlockVariant::FreeDiagonal: return 72;
    }
    return 0;
}

struct AnnBlockGrid {
    std::size_t n = 0;
    std::vector<AnnIdealView> blocks;
    AnnIdealView& at(std::size_t i, std::size_t j) { return blocks[i * n + j]; }
    const AnnIdealView& at(std::size_t i, std::size_t j) const { return blocks[i * n + j]; }
};

// Grid of the containment proposition for an n x n matrix:
// A_ij = (inter_{k != j} ann(b_jk)) ∩ (inter_{k != i} ann(b_ki)) ∩ ann(b_ii - b_jj)
inline AnnBlockGrid prop_grid(const MatrixOverQuotient& b) {
    if (b.n == 0) throw error("empty matrix");
    const IdealHandle I = b.e[0].ideal;
    AnnBlockGrid grid;
    grid.n = b.n;
    for (std::size_t i = 0; i < b.n; ++i)
        for (std::size_t j = 0; j < b.n; ++j) {
            AnnIdealView v = annihilator(b.at(i, i) - b.at(j, j));
            for (std::size_t l = 0; l < b.n; ++l) {
                if (l != j) v = intersect(v, annihilator(b.at(j, l)));
                if (l != i) v = intersect(v, annihilator(b.at(l, i)));
            }
            grid.blocks.push_back(std::move(v));
        }
    return grid;
}

// Structural description of Cen(B-hat): the image of the base-ring
// centralizer { w*generator + v*E } plus the annihilator block summand.
struct CentralizerDescription {
    enum class Kind { Full, Structured, ContainmentOnly } kind = Kind::Full;
    MatrixOverQuotient matrix;  // B-hat
    IMatrixVerdict verdict;

    // non-scalar data
    std::optional<ReducedTriple> base;       // canonical-lift corollary data (triple gcd, generator)
    MatrixOverQuotient generator_image;      // image of the corollary generator
    UfdElement decomposition_gcd;            // gcd(e-h, f, g, k)
    std::array<UfdElement, 3> decomposition_triple;  // (e-h, f, g)/decomposition_gcd
    AnnIdealView block_diag;                 // ann(f) ∩ ann(g)
    AnnIdealView block_upper;                // (1,2): ann(g) ∩ ann(e-h)
    AnnIdealView block_lower;                // (2,1): ann(f) ∩ ann(e-h)

    bool full() const { return kind == Kind::Full; }
    bool structured() const { return kind == Kind::Structured; }
};

inline AnnBlockGrid description_grid(const CentralizerDescription& d, BlockVariant variant) {
    const IdealHandle I = d.matrix.e[0].ideal;
    AnnBlockGrid g;
    g.n = 2;
    if (d.full()) {
        g.blocks.assign(4, whole_ring_view(I));
        return g;
    }
    const AnnIdealView zero = zero_ideal_view(I);
    switch (variant) {
        case BlockVariant::ZeroTopLeft:
            g.blocks = {zero, d.block_upper, d.block_lower, d.block_diag};
            break;
        case BlockVariant::ZeroBottomRight:
            g.blocks = {d.block_diag, d.block_upper, d.block_lower, zero};
            break;
        case BlockVariant::FreeDiagonal:
            g.blocks = {d.block_diag, d.block_upper, d.block_lower, d.block_diag};
            break;
    }
    return g;
}

// Build the description: Full for a scalar image, Structured when the
// classifier certified the matrix, ContainmentOnly otherwise (the grid then
// only guarantees the one-sided containment of the proposition).
inline CentralizerDescription describe_centralizer(const MatrixOverQuotient& bhat,
                                                   const IMatrixVerdict& verdict) {
    if (bhat.n != 2) throw error("centralizer descriptions are 2x2 only");
    const IdealHandle I = bhat.e[0].ideal;
    CentralizerDescription d;
    d.matrix = bhat;
    d.verdict = verdict;
    auto triple = commutation_triple(bhat);
    if (triple[0].is_zero() && triple[1].is_zero() && triple[2].is_zero()) {
        d.kind = CentralizerDescription::Kind::Full;
        return d;
    }
    d.kind = verdict.certified() ? CentralizerDescription::Kind::Structured
                                 : CentralizerDescription::Kind::ContainmentOnly;
    std::array<UfdElement, 3> lifts{triple[0].rep, triple[1].rep, triple[2].rep};
    d.base = reduce_triple(lifts);
    d.generator_image = project_matrix(I, d.base->generator);
    d.decomposition_gcd = gcd_many({lifts[0], lifts[1], lifts[2], I->ideal_gcd});
    for (int l = 0; l < 3; ++l) d.decomposition_triple[l] = divide_exact(lifts[l], d.decomposition_gcd);
    AnnIdealView ann_diff = annihilator(triple[0]);
    AnnIdealView ann_f = annihilator(triple[1]);
    AnnIdealView ann_g = annihilator(triple[2]);
    d.block_diag = intersect(ann_f, ann_g);
    d.block_upper = intersect(ann_g, ann_diff);
    d.block_lower = intersect(ann_f, ann_diff);
    return d;
}

// The (v-hat, d-hat, K-hat) witness that A-hat = v-hat*B'' + d-hat*E + K-hat
// with t-hat * K-hat = 0 entrywise and K-hat inside the block grid.
struct DecompositionCertificate {
    Residue v_hat, d_hat;
    MatrixOverQuotient k_hat;
    UfdElement w_lift;       // alpha*b + beta*c on canonical lifts
    UfdElement m_k;          // gcd(e-h, f, g, k)
    UfdElement t;            // certificate t (0 for scalar / fallback paths)
    MatrixOverRing generator_lift;  // the B'' used in the equation
    BlockVariant variant = BlockVariant::ZeroBottomRight;
};

struct MembershipResult {
    enum class Kind { Member, NotMember, Unknown } kind = Kind::Unknown;
    std::optional<DecompositionCertificate> certificate;
    std::string reason;

    bool member() const { return kind == Kind::Member; }
};

inline bool verify_decomposition(const MatrixOverQuotient& a, const DecompositionCertificate& c) {
    const IdealHandle I = a.e[0].ideal;
    MatrixOverQuotient rhs = project_matrix(I, c.generator_lift);
    Residue tbar = project(I, c.t);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Residue want = c.v_hat * rhs.at(i, j) + c.k_hat.at(i, j);
            if (i == j) want = want + c.d_hat;
            if (!(want == a.at(i, j))) return false;
            if (!(tbar * c.k_hat.at(i, j)).is_zero()) return false;
        }
    return true;
}

namespace detail {

// permutation sending the certificate pair to triple slots (1,2)
inline std::array<int, 3> pair_permutation(const std::array<int, 2>& pair) {
    std::array<int, 3> perm{};  // perm[l] = new slot of old slot l
    int rest = 3 - pair[0] - pair[1];
    perm[pair[0]] = 1;
    perm[pair[1]] = 2;
    perm[rest] = 0;
    return perm;
}

inline std::optional<UfdElement> joint_congruence_solve(const IdealHandle& I,
                                                        const std::array<UfdElement, 3>& coeffs,
                                                        const std::array<UfdElement, 3>& targets,
                                                        const std::array<const QuotientIdeal*, 3>& mods,
                                                        unsigned budget);

}  // namespace detail

// Membership of A-hat in the described set.  Structured descriptions run the
// constructive decomposition from the certificate; Full accepts everything;
// containment-only descriptions decide by finite enumeration, a sound
// term-ideal obstruction, or a bounded joint congruence solve (Unknown when
// none of these closes the question).
inline MembershipResult decompose(const MatrixOverQuotient& a, const CentralizerDescription& desc,
                                  BlockVariant variant = BlockVariant::ZeroBottomRight) {
    MembershipResult out;
    if (a.n != 2) throw error("decompose handles 2x2 matrices");
    const IdealHandle I = a.e[0].ideal;
    Residue::require_same_quotient(a.e[0], desc.matrix.e[0]);

    if (!commutes(a, desc.matrix)) {
        out.kind = MembershipResult::Kind::NotMember;
        out.reason = "does not commute with B-hat";
        return out;
    }

    const Residue zero = zero_residue(I);
    if (desc.full()) {
        DecompositionCertificate cert;
        cert.v_hat = zero;
        cert.d_hat = a.at(1, 1);
        cert.k_hat = a;
        cert.k_hat.at(0, 0) = a.at(0, 0) - cert.d_hat;
        cert.k_hat.at(1, 1) = zero;
        cert.w_lift = UfdElement::zero(I->ring);
        cert.m_k = I->ideal_gcd;
        cert.t = UfdElement::zero(I->ring);
        cert.generator_lift = MatrixOverRing(2, UfdElement::zero(I->ring));
        cert.variant = variant;
        if (!verify_decomposition(a, cert)) throw error("scalar decomposition failed");
        out.kind = MembershipResult::Kind::Member;
        out.certificate = std::move(cert);
        return out;
    }

    auto ta_res = commutation_triple(a);
    std::array<UfdElement, 3> la{ta_res[0].rep, ta_res[1].rep, ta_res[2].rep};
    auto tb_res = commutation_triple(desc.matrix);

    if (desc.structured()) {
        const BezoutCertificate& bez = *desc.verdict.certificate;
        const UfdElement& t = bez.t;
        const UfdElement& mk = desc.decomposition_gcd;
        UfdElement w = bez.alpha.rep * la[bez.pair[0]] + bez.beta.rep * la[bez.pair[1]];
        UfdElement v_lift;
        if (t.is_zero()) {
            v_lift = UfdElement::zero(I->ring);
            w = UfdElement::zero(I->ring);
        } else {
            // the commutation congruences force t | (pair lifts) * m_k
            for (int idx : bez.pair)
                if (!divides(t, la[idx] * mk)) throw error("decompose: proof divisibility t | a*m failed");
            v_lift = divide_exact(w * mk, t);
        }
        std::array<UfdElement, 3> ktr;
        for (int l = 0; l < 3; ++l) ktr[l] = la[l] - v_lift * desc.decomposition_triple[l];

        Residue tbar = project(I, t);
        std::array<Residue, 3> khat{project(I, ktr[0]), project(I, ktr[1]), project(I, ktr[2])};
        for (int l = 0; l < 3; ++l) {
            if (!(tbar * khat[l]).is_zero()) {
                out.kind = MembershipResult::Kind::NotMember;
                out.reason = "t-hat does not annihilate the residual matrix";
                return out;
            }
            for (int l2 = 0; l2 < 3; ++l2) {
                if (l2 == l) continue;
                if (!(khat[l] * tb_res[l2]).is_zero()) {
                    out.kind = MembershipResult::Kind::NotMember;
                    out.reason = "residual entry escapes its annihilator block";
                    return out;
                }
            }
        }

        DecompositionCertificate cert;
        cert.m_k = mk;
        cert.t = t;
        cert.w_lift = w;
        cert.variant = variant;
        cert.generator_lift = MatrixOverRing::from_rows(
            {{desc.decomposition_triple[0], desc.decomposition_triple[1]},
             {desc.decomposition_triple[2], UfdElement::zero(I->ring)}});
        cert.v_hat = project(I, v_lift);
        cert.d_hat = a.at(1, 1);
        cert.k_hat = MatrixOverQuotient::from_rows({{khat[0], khat[1]}, {khat[2], zero}});
        if (variant == BlockVariant::ZeroTopLeft) {
            Residue kappa = cert.k_hat.at(0, 0);
            cert.d_hat = cert.d_hat + kappa;
            cert.k_hat.at(0, 0) = zero;
            cert.k_hat.at(1, 1) = -kappa;
        }
        // the variant's grid must hold the adjusted residual
        AnnBlockGrid grid = description_grid(desc, variant);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (!grid.at(i, j).member(cert.k_hat.at(i, j))) {
                    out.kind = MembershipResult::Kind::NotMember;
                    out.reason = "residual entry escapes the selected block layout";
                    return out;
                }
        if (!verify_decomposition(a, cert)) throw error("decompose: reassembly check failed");
        out.kind = MembershipResult::Kind::Member;
        out.certificate = std::move(cert);
        return out;
    }

    // containment-only: decide membership in { w*gen + v*E } + blocks directly
    const ReducedTriple& base = *desc.base;
    std::array<UfdElement, 3> bg{base.generator.at(0, 0), base.generator.at(0, 1), base.generator.at(1, 0)};
    const std::array<const AnnIdealView*, 3> blocks{&desc.block_diag, &desc.block_upper, &desc.block_lower};

    auto witness_member = [&](const Residue& w) -> std::optional<DecompositionCertificate> {
        for (int l = 0; l < 3; ++l)
            if (!blocks[l]->member(ta_res[l] - w * project(I, bg[l]))) return std::nullopt;
        DecompositionCertificate cert;
        cert.v_hat = w;
        cert.d_hat = a.at(1, 1);
        cert.m_k = base.triple_gcd;
        cert.t = UfdElement::zero(I->ring);
        cert.w_lift = w.rep;
        cert.variant = BlockVariant::ZeroBottomRight;
        cert.generator_lift = base.generator;
        MatrixOverQuotient gen_img = project_matrix(I, base.generator);
        cert.k_hat = MatrixOverQuotient::from_rows(
            {{ta_res[0] - w * gen_img.at(0, 0), ta_res[1] - w * gen_img.at(0, 1)},
             {ta_res[2] - w * gen_img.at(1, 0), zero}});
        if (!verify_decomposition(a, cert)) throw error("containment decomposition failed reassembly");
        return cert;
    };

    if (auto size = I->finite_size()) {
        // exhaustive over w
        std::vector<Residue> ring = [&] {
            std::vector<Residue> rs;
            rs.reserve(static_cast<std::size_t>(*size));
            if (I->ring.kind == RingKind::Integers) {
                for (std::uint64_t i = 0; i < *size; ++i) rs.push_back(project(I, Int(i)));
            } else {
                unsigned deg = I->ideal_gcd.degree_x();
                std::vector<unsigned> c(deg, 0);
                while (true) {
                    UfdElement e(I->ring);
                    for (unsigned d = 0; d < deg; ++d) e.add_term({d, 0}, Int(c[d]));
                    rs.push_back(project(I, e));
                    unsigned d = 0;
                    for (; d < deg; ++d) {
                        if (++c[d] < I->ring.p) break;
                        c[d] = 0;
                    }
                    if (d == deg) break;
                }
            }
            return rs;
        }();
        for (const Residue& w : ring)
            if (auto cert = witness_member(w)) {
                out.kind = MembershipResult::Kind::Member;
                out.certificate = std::move(*cert);
                return out;
            }
        out.kind = MembershipResult::Kind::NotMember;
        out.reason = "no scaling of the generator matches modulo the blocks (exhaustive)";
        return out;
    }

    // sound obstruction: condition l alone solvable only if the target lies in
    // <generator entry> + block ideal (a term ideal when the entry is a term)
    for (int l = 0; l < 3; ++l) {
        if (!blocks[l]->closed) continue;
        if (!bg[l].is_term()) continue;
        std::vector<UfdElement> gens = blocks[l]->closed->shown_gens;
        if (!bg[l].is_zero()) gens.push_back(bg[l]);
        QuotientIdeal reach = make_quotient_ideal(I, gens);
        if (!reach.contains_lift(la[l])) {
            out.kind = MembershipResult::Kind::NotMember;
            out.reason = "triple entry " + std::to_string(l) + " is outside every reachable coset";
            return out;
        }
    }

    // bounded joint solve for a shared w
    if (blocks[0]->closed && blocks[1]->closed && blocks[2]->closed) {
        unsigned budget = 2 * (I->stable_from + 8);
        std::array<const QuotientIdeal*, 3> mods{&*blocks[0]->closed, &*blocks[1]->closed,
                                                 &*blocks[2]->closed};
        if (auto w = detail::joint_congruence_solve(I, bg, la, mods, budget)) {
            if (auto cert = witness_member(project(I, *w))) {
                out.kind = MembershipResult::Kind::Member;
                out.certificate = std::move(*cert);
                return out;
            }
        }
    }
    out.kind = MembershipResult::Kind::Unknown;
    out.reason = "membership in the containment-only description undecided within budget";
    return out;
}

namespace detail {

inline std::optional<UfdElement> joint_congruence_solve(const IdealHandle& I,
                                                        const std::array<UfdElement, 3>& coeffs,
                                                        const std::array<UfdElement, 3>& targets,
                                                        const std::array<const QuotientIdeal*, 3>& mods,
                                                        unsigned budget) {
    const RingDescriptor& R = I->ring;
    if (R.kind == RingKind::PolyOverZ) {
        const unsigned D = budget;
        std::vector<std::vector<Int>> M;
        std::vector<Int> t;
        std::size_t cols = D + 1;
        struct Row {
            std::vector<Int> a;
            Int target, modulus;
        };
        std::vector<Row> rows;
        for (int l = 0; l < 3; ++l) {
            unsigned da = coeffs[l].degree_x();
            unsigned top = D + da + std::max(targets[l].degree_x(), mods[l]->preimage->stable_from) + 1;
            for (unsigned n = 0; n <= top; ++n) {
                Row row;
                row.a.assign(D + 1, 0);
                for (unsigned j = 0; j <= D; ++j)
                    if (j <= n && n - j <= da) row.a[j] = coeffs[l].coeff_x(n - j);
                row.target = targets[l].coeff_x(n);
                row.modulus = mods[l]->preimage->modulus_at(n);
                bool trivial = row.modulus != 0 && row.target % row.modulus == 0;
                bool all_zero = true;
                for (const auto& v : row.a)
                    if (v != 0) all_zero = false;
                if (all_zero && trivial) continue;
                if (all_zero && row.modulus == 0 && row.target == 0) continue;
                rows.push_back(std::move(row));
            }
        }
        std::size_t slack = 0;
        for (const auto& r : rows)
            if (r.modulus != 0) ++slack;
        M.assign(rows.size(), std::vector<Int>(cols + slack, 0));
        t.assign(rows.size(), 0);
        std::size_t si = cols;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (unsigned j = 0; j <= D; ++j) M[r][j] = rows[r].a[j];
            if (rows[r].modulus != 0) M[r][si++] = rows[r].modulus;
            t[r] = rows[r].target;
        }
        auto z = solve_integer_system(std::move(M), std::move(t));
        if (!z) return std::nullopt;
        UfdElement w(R);
        for (unsigned j = 0; j <= D; ++j) w.add_term({j, 0}, (*z)[j]);
        return w;
    }
    if (R.kind == RingKind::BivariateOverFp) {
        const Int p(R.p);
        std::vector<Mono> unknowns;
        for (unsigned d = 0; d <= budget; ++d)
            for (unsigned i = 0; i <= d; ++i) unknowns.push_back({d - i, i});
        // rows: for each condition l, monomial coordinates of nf modulo the
        // block; last column is the right-hand side
        std::vector<std::vector<Int>> A;
        std::vector<std::pair<int, Mono>> row_keys;
        auto row_index = [&](int l, const Mono& m) {
            for (std::size_t i = 0; i < row_keys.size(); ++i)
                if (row_keys[i].first == l && row_keys[i].second == m) return i;
            row_keys.push_back({l, m});
            A.emplace_back(unknowns.size() + 1, Int(0));
            return row_keys.size() - 1;
        };
        for (int l = 0; l < 3; ++l) {
            const TermIdeal& J = *mods[l]->preimage;
            UfdElement tgt = J.normal_form_of(targets[l]);
            for (const auto& [m, c] : tgt.terms) A[row_index(l, m)][unknowns.size()] = c;
            for (std::size_t uidx = 0; uidx < unknowns.size(); ++uidx) {
                UfdElement col = J.normal_form_of(coeffs[l] * UfdElement::term(R, 1, unknowns[uidx]));
                for (const auto& [m, c] : col.terms) A[row_index(l, m)][uidx] = c;
            }
        }
        // Gauss mod p
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_cols;
        for (std::size_t c = 0; c < unknowns.size() && rank < A.size(); ++c) {
            std::size_t pr = rank;
            while (pr < A.size() && int_mod(A[pr][c], p) == 0) ++pr;
            if (pr == A.size()) continue;
            std::swap(A[pr], A[rank]);
            Int inv = *int_inverse_mod(A[rank][c], p);
            for (auto& v : A[rank]) v = int_mod(v * inv, p);
            for (std::size_t r2 = 0; r2 < A.size(); ++r2) {
                if (r2 == rank) continue;
                Int f = int_mod(A[r2][c], p);
                if (f == 0) continue;
                for (std::size_t j = 0; j < A[r2].size(); ++j)
                    A[r2][j] = int_mod(A[r2][j] - f * A[rank][j], p);
            }
            pivot_cols.push_back(c);
            ++rank;
        }
        for (std::size_t r = rank; r < A.size(); ++r)
            if (int_mod(A[r].back(), p) != 0) return std::nullopt;
        UfdElement w(R);
        for (std::size_t r = 0; r < rank; ++r) w.add_term(unknowns[pivot_cols[r]], A[r].back());
        return w;
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace cenquot

#endif
