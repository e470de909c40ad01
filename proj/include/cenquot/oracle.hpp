#ifndef CENQUOT_ORACLE_HPP
#define CENQUOT_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cenquot/centralizer_quotient.hpp"

namespace cenquot {

// Exhaustively enumerable factor ring of a PID: Z_n or F_p[x]/<f>.
struct FiniteRingSpec {
    IdealHandle ideal;
    std::uint64_t size = 0;

    static constexpr std::uint64_t kMaxRingSize = 100'000;
    static constexpr std::uint64_t kMaxMatrixCount = 200'000'000;
};

inline FiniteRingSpec finite_ring(const IdealHandle& ideal) {
    FiniteRingSpec spec;
    spec.ideal = ideal;
    auto sz = ideal->finite_size(FiniteRingSpec::kMaxRingSize);
    if (!sz) throw guard_exceeded_error("quotient ring is not finitely enumerable within guard");
    spec.size = *sz;
    return spec;
}

inline FiniteRingSpec finite_ring_zn(std::uint64_t n) {
    auto Z = ring_integers();
    return finite_ring(build_ideal(Z, {UfdElement::constant(Z, Int(n))}));
}

inline FiniteRingSpec finite_ring_fp_power(unsigned p, unsigned m) {
    auto R = ring_poly_fp(p);
    return finite_ring(build_ideal(R, {UfdElement::term(R, 1, {m, 0})}));
}

// canonical lexicographic enumeration of all residues
inline std::vector<Residue> enumerate_residues(const FiniteRingSpec& spec) {
    const IdealHandle& I = spec.ideal;
    std::vector<Residue> out;
    out.reserve(spec.size);
    if (I->ring.kind == RingKind::Integers) {
        for (std::uint64_t i = 0; i < spec.size; ++i) out.push_back(project(I, Int(i)));
        return out;
    }
    unsigned deg = I->ideal_gcd.degree_x();
    std::vector<unsigned> c(deg, 0);
    while (true) {
        UfdElement e(I->ring);
        for (unsigned d = 0; d < deg; ++d) e.add_term({d, 0}, Int(c[d]));
        out.push_back(project(I, e));
        unsigned d = 0;
        for (; d < deg; ++d) {
            if (++c[d] < I->ring.p) break;
            c[d] = 0;
        }
        if (d == deg) break;
    }
    return out;
}

template <class Fn>
void for_each_matrix(const FiniteRingSpec& spec, Fn&& fn) {
    if (spec.size * spec.size > FiniteRingSpec::kMaxMatrixCount / (spec.size * spec.size))
        throw guard_exceeded_error("matrix enumeration guard exceeded");
    std::vector<Residue> ring = enumerate_residues(spec);
    MatrixOverQuotient m(2, zero_residue(spec.ideal));
    for (const Residue& a : ring) {
        m.at(0, 0) = a;
        for (const Residue& b : ring) {
            m.at(0, 1) = b;
            for (const Residue& c : ring) {
                m.at(1, 0) = c;
                for (const Residue& d : ring) {
                    m.at(1, 1) = d;
                    fn(m);
                }
            }
        }
    }
}

// exactly { X : X B == B X }, by direct multiplication over all matrices
inline std::vector<MatrixOverQuotient> enumerate_centralizer(const MatrixOverQuotient& bhat,
                                                             const FiniteRingSpec& spec) {
    std::vector<MatrixOverQuotient> out;
    for_each_matrix(spec, [&](const MatrixOverQuotient& x) {
        if (commutes(x, bhat)) out.push_back(x);
    });
    return out;
}

struct Mismatch {
    MatrixOverQuotient matrix;
    bool enumerated = false;  // commutes by direct multiplication
    bool described = false;   // accepted by decompose
};

struct EnumerationReport {
    std::uint64_t tested = 0;
    std::uint64_t centralizer_size = 0;
    std::vector<Mismatch> mismatches;

    bool exact() const { return mismatches.empty(); }
};

// Every matrix of the finite ring: the enumerated commutation verdict must
// match decompose membership.
inline EnumerationReport compare(const CentralizerDescription& desc, const FiniteRingSpec& spec,
                                 BlockVariant variant = BlockVariant::ZeroBottomRight,
                                 std::size_t max_mismatches = 16) {
    EnumerationReport report;
    for_each_matrix(spec, [&](const MatrixOverQuotient& x) {
        ++report.tested;
        bool wanted = commutes(x, desc.matrix);
        if (wanted) ++report.centralizer_size;
        MembershipResult got = decompose(x, desc, variant);
        if (got.kind == MembershipResult::Kind::Unknown)
            throw error("decompose returned Unknown on a finite PID quotient");
        if (got.member() != wanted && report.mismatches.size() < max_mismatches)
            report.mismatches.push_back({x, wanted, got.member()});
    });
    return report;
}

// ---- seeded sampling ---------------------------------------------------------

class SampleSource {
  public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    Int small_int(int lo, int hi) { return Int(std::uniform_int_distribution<int>(lo, hi)(rng_)); }

    UfdElement element(const RingDescriptor& R, unsigned max_deg, int coeff_box) {
        UfdElement e(R);
        switch (R.kind) {
            case RingKind::Integers:
                e.add_term({0, 0}, small_int(-coeff_box, coeff_box));
                break;
            case RingKind::PolyOverFp:
            case RingKind::PolyOverZ:
                for (unsigned d = 0; d <= max_deg; ++d)
                    if (chance(2)) e.add_term({d, 0}, small_int(-coeff_box, coeff_box));
                break;
            case RingKind::BivariateOverFp:
                for (unsigned dx = 0; dx <= max_deg; ++dx)
                    for (unsigned dy = 0; dx + dy <= max_deg; ++dy)
                        if (chance(3)) e.add_term({dx, dy}, small_int(-coeff_box, coeff_box));
                break;
        }
        return e;
    }

    Residue residue(const IdealHandle& I, unsigned max_deg = 6, int coeff_box = 24) {
        return project(I, element(I->ring, max_deg, coeff_box));
    }

    // random element of a closed-form quotient ideal
    Residue ideal_element(const AnnIdealView& view) {
        const IdealHandle& I = view.ambient;
        if (!view.closed) throw undecidable_error("sampling needs a closed form");
        UfdElement acc = UfdElement::zero(I->ring);
        for (const auto& g : view.closed->shown_gens)
            acc = acc + g * element(I->ring, 2, 6);
        return project(I, acc);
    }

    bool chance(unsigned one_in) { return std::uniform_int_distribution<unsigned>(0, one_in - 1)(rng_) == 0; }
    std::uint64_t raw() { return rng_(); }

  private:
    std::mt19937_64 rng_;
};

// Deterministic stream from { w*gen + v*E + K }; every matrix is re-verified
// to commute before it is emitted.
inline std::vector<MatrixOverQuotient> sample_commuting(const CentralizerDescription& desc,
                                                        std::size_t count, std::uint64_t seed) {
    const IdealHandle I = desc.matrix.e[0].ideal;
    SampleSource src(seed);
    std::vector<MatrixOverQuotient> out;
    out.reserve(count);
    AnnBlockGrid grid = description_grid(desc, BlockVariant::FreeDiagonal);
    for (std::size_t i = 0; i < count; ++i) {
        Residue w = src.residue(I);
        Residue v = src.residue(I);
        MatrixOverQuotient m(2, zero_residue(I));
        if (!desc.full()) {
            const MatrixOverQuotient& gen = desc.generator_image;
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) m.at(r, c) = w * gen.at(r, c);
        }
        m.at(0, 0) = m.at(0, 0) + v;
        m.at(1, 1) = m.at(1, 1) + v;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                const AnnIdealView& blk = grid.at(r, c);
                if (blk.closed) m.at(r, c) = m.at(r, c) + src.ideal_element(blk);
            }
        if (!commutes(m, desc.matrix)) throw error("sampled matrix fails to commute");
        out.push_back(std::move(m));
    }
    return out;
}

// Sampled one-sided containment for n x n: polynomials in B-hat plus grid
// elements must commute.
inline std::vector<MatrixOverQuotient> sample_prop_grid_commuting(const MatrixOverQuotient& bhat,
                                                                  const AnnBlockGrid& grid,
                                                                  std::size_t count, std::uint64_t seed) {
    const IdealHandle I = bhat.e[0].ideal;
    SampleSource src(seed);
    std::vector<MatrixOverQuotient> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // random polynomial in B-hat of degree <= n+1
        MatrixOverQuotient acc(bhat.n, zero_residue(I));
        MatrixOverQuotient power(bhat.n, zero_residue(I));
        for (std::size_t d = 0; d < bhat.n; ++d) power.at(d, d) = one_residue(I);
        for (unsigned d = 0; d <= bhat.n + 1; ++d) {
            Residue coeff = src.residue(I, 4, 12);
            for (std::size_t r = 0; r < bhat.n; ++r)
                for (std::size_t c = 0; c < bhat.n; ++c) acc.at(r, c) = acc.at(r, c) + coeff * power.at(r, c);
            power = power * bhat;
        }
        for (std::size_t r = 0; r < bhat.n; ++r)
            for (std::size_t c = 0; c < bhat.n; ++c)
                if (grid.at(r, c).closed) acc.at(r, c) = acc.at(r, c) + src.ideal_element(grid.at(r, c));
        if (!commutes(acc, bhat)) throw error("proposition sample fails to commute");
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace cenquot

#endif
