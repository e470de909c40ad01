#ifndef CENQUOT_ANNIHILATOR_HPP
#define CENQUOT_ANNIHILATOR_HPP

#include <optional>
#include <vector>

#include "cenquot/invert.hpp"

namespace cenquot {

// View of an annihilator (or an intersection of annihilators) in R/I.  The
// membership predicate s -> (s*w in I for every witness w) is always exact;
// a closed form as an ideal of R/I is attached whenever one is computable.
class AnnIdealView {
  public:
    IdealHandle ambient;
    std::optional<std::vector<UfdElement>> witnesses;  // lifts r with this = ann of their residues
    std::optional<QuotientIdeal> closed;

    bool member(const Residue& s) const {
        if (closed) return closed->contains(s);
        if (!witnesses) throw undecidable_error("annihilator view with neither closed form nor predicate");
        return predicate(s);
    }
    bool predicate(const Residue& s) const {
        if (!witnesses) throw undecidable_error("annihilator view without witnesses");
        for (const auto& w : *witnesses)
            if (!ambient->contains(s.rep * w)) return false;
        return true;
    }
    bool is_zero_ideal() const { return closed && closed->is_zero_ideal(); }
    bool is_whole_ring() const { return closed && closed->is_whole_ring(); }
};

inline AnnIdealView whole_ring_view(const IdealHandle& I) {
    AnnIdealView v;
    v.ambient = I;
    v.closed = make_quotient_ideal(I, {UfdElement::one(I->ring)});
    return v;
}

inline AnnIdealView zero_ideal_view(const IdealHandle& I) {
    AnnIdealView v;
    v.ambient = I;
    v.closed = zero_quotient_ideal(I);
    return v;
}

namespace detail {

// ann of the residue of a term c*x^d in Z[x]/I, via the coefficient chain:
// s_j must satisfy (g_{j+d}/gcd(c, g_{j+d})) | s_j, with g_{j+d} = 0 forcing 0.
inline QuotientIdeal ann_term_chain(const IdealHandle& I, const Int& c, unsigned d) {
    unsigned len = I->stable_from >= d ? I->stable_from - d + 1 : 1;
    std::vector<Int> h(len, 0);
    for (unsigned j = 0; j < len; ++j) {
        const Int& g = I->modulus_at(j + d);
        h[j] = g == 0 ? Int(0) : g / int_gcd(c, g);
    }
    IdealHandle ann_ideal = ideal_from_chain(I->ring, h);
    return make_quotient_ideal(I, ann_ideal->gens);
}

// monomial colon ideal (I : m)
inline QuotientIdeal ann_term_monomial(const IdealHandle& I, const Mono& m) {
    std::vector<UfdElement> gens;
    for (const auto& gm : I->monomials) gens.push_back(UfdElement::term(I->ring, 1, gm / Mono::gcd(gm, m)));
    return make_quotient_ideal(I, gens);
}

}  // namespace detail

// ann(r-hat).  Closed forms: PID quotients; term representatives in Z[x] and
// F_p[x,y]; representatives u*delta with u-hat invertible (then ann = ann of
// the divisor term).  Everything else stays predicate-only.
inline AnnIdealView annihilator(const Residue& r) {
    const IdealHandle& I = r.ideal;
    const RingDescriptor& R = I->ring;
    AnnIdealView v;
    v.ambient = I;
    v.witnesses = std::vector<UfdElement>{r.rep};
    if (r.is_zero()) return whole_ring_view(I);

    switch (R.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverFp: {
            UfdElement g = gcd(r.rep, I->ideal_gcd);
            v.closed = make_quotient_ideal(I, {divide_exact(I->ideal_gcd, g)});
            return v;
        }
        case RingKind::PolyOverZ:
        case RingKind::BivariateOverFp: {
            UfdElement target = r.rep;
            if (!target.is_term()) {
                // try the invertible-cofactor reduction rep = u * delta
                UfdElement delta = gcd(r.rep, I->ideal_gcd);
                UfdElement u = divide_exact(r.rep, delta);
                if (!delta.is_term()) return v;  // gcd with the term k is a term; defensive
                InverseOutcome inv = try_inverse(project(I, u));
                if (!inv.found()) return v;  // predicate-only
                target = delta;
            }
            const auto& [m, c] = target.terms[0];
            if (R.kind == RingKind::PolyOverZ)
                v.closed = detail::ann_term_chain(I, c, m.dx);
            else
                v.closed = detail::ann_term_monomial(I, m);
            return v;
        }
    }
    throw error("unreachable");
}

// Intersection of views: witness lists concatenate (predicate stays exact);
// closed forms combine per ring when both sides have them.
inline AnnIdealView intersect(const AnnIdealView& a, const AnnIdealView& b) {
    AnnIdealView v;
    v.ambient = a.ambient;
    if (a.witnesses && b.witnesses) {
        v.witnesses = *a.witnesses;
        v.witnesses->insert(v.witnesses->end(), b.witnesses->begin(), b.witnesses->end());
    }
    if (!a.closed || !b.closed) return v;
    const IdealHandle& I = a.ambient;
    const RingDescriptor& R = I->ring;
    switch (R.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverFp: {
            const UfdElement& ga = a.closed->preimage->ideal_gcd;
            const UfdElement& gb = b.closed->preimage->ideal_gcd;
            UfdElement g = gcd(ga, gb);
            UfdElement l = canonical_associate(divide_exact(ga * gb, g));
            v.closed = make_quotient_ideal(I, {l});
            break;
        }
        case RingKind::PolyOverZ: {
            const TermIdeal& A = *a.closed->preimage;
            const TermIdeal& B = *b.closed->preimage;
            unsigned len = std::max(A.stable_from, B.stable_from) + 1;
            std::vector<Int> h(len, 0);
            for (unsigned j = 0; j < len; ++j) {
                const Int& x = A.modulus_at(j);
                const Int& y = B.modulus_at(j);
                h[j] = (x == 0 || y == 0) ? Int(0) : int_lcm(x, y);
            }
            IdealHandle inter = ideal_from_chain(R, h);
            v.closed = make_quotient_ideal(I, inter->gens);
            break;
        }
        case RingKind::BivariateOverFp: {
            std::vector<UfdElement> gens;
            for (const auto& ma : a.closed->preimage->monomials)
                for (const auto& mb : b.closed->preimage->monomials)
                    gens.push_back(UfdElement::term(R, 1, Mono::lcm(ma, mb)));
            v.closed = make_quotient_ideal(I, gens);
            break;
        }
    }
    return v;
}

}  // namespace cenquot

#endif
