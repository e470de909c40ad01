#ifndef CENQUOT_TERM_IDEAL_HPP
#define CENQUOT_TERM_IDEAL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "cenquot/ring.hpp"

namespace cenquot {

// Finitely generated ideal I of one of the supported UFDs, restricted to
// classes with decidable membership:
//   Z, F_p[x]     : any generators (collapsed to the single generator gcd)
//   Z[x], F_p[x,y]: term generators c*x^a(*y^b)
// For Z[x] the degreewise coefficient moduli g_n = gcd{c_i : d_i <= n} are
// precomputed; g_n = 0 encodes "coefficient forced to vanish".
class TermIdeal {
  public:
    RingDescriptor ring;
    std::vector<UfdElement> gens;   // as given (zero generators dropped)
    UfdElement ideal_gcd;           // k = gcd(I), canonical associate, nonzero

    // Z[x] only: moduli for degrees 0..stable_from, constant afterwards
    std::vector<Int> chain;
    unsigned stable_from = 0;

    // F_p[x,y] only: minimal monomial generating set
    std::vector<Mono> monomials;

    const Int& modulus_at(unsigned degree) const {
        return chain[degree < stable_from ? degree : stable_from];
    }

    bool contains(const UfdElement& e) const {
        if (!(e.ring == ring)) throw ring_mismatch_error("membership across rings");
        switch (ring.kind) {
            case RingKind::Integers:
            case RingKind::PolyOverFp:
                return divides(ideal_gcd, e);
            case RingKind::PolyOverZ:
                for (const auto& [m, c] : e.terms) {
                    const Int& g = modulus_at(m.dx);
                    if (g == 0 || c % g != 0) return false;
                }
                return true;
            case RingKind::BivariateOverFp:
                for (const auto& [m, c] : e.terms) {
                    bool covered = false;
                    for (const auto& gm : monomials)
                        if (gm.divides(m)) {
                            covered = true;
                            break;
                        }
                    if (!covered) return false;
                }
                return true;
        }
        throw error("unreachable");
    }

    UfdElement normal_form_of(const UfdElement& e) const {
        if (!(e.ring == ring)) throw ring_mismatch_error("normal form across rings");
        switch (ring.kind) {
            case RingKind::Integers:
                return e.is_zero() ? e : UfdElement::constant(ring, int_mod(e.terms[0].second, ideal_gcd.terms[0].second));
            case RingKind::PolyOverFp: {
                UfdElement r = e;
                unsigned dk = ideal_gcd.degree_x();
                const Int p(ring.p);
                while (!r.is_zero() && r.degree_x() >= dk) {
                    Int c = int_mod(r.leading_coeff(), p);  // ideal_gcd is monic
                    r = r - UfdElement::term(ring, c, {r.degree_x() - dk, 0}) * ideal_gcd;
                }
                return r;
            }
            case RingKind::PolyOverZ: {
                UfdElement out(ring);
                for (const auto& [m, c] : e.terms) {
                    const Int& g = modulus_at(m.dx);
                    out.add_term(m, g == 0 ? c : int_mod(c, g));
                }
                return out;
            }
            case RingKind::BivariateOverFp: {
                UfdElement out(ring);
                for (const auto& [m, c] : e.terms) {
                    bool drop = false;
                    for (const auto& gm : monomials)
                        if (gm.divides(m)) {
                            drop = true;
                            break;
                        }
                    if (!drop) out.add_term(m, c);
                }
                return out;
            }
        }
        throw error("unreachable");
    }

    // number of residues, when finite and small enough to enumerate
    std::optional<std::uint64_t> finite_size(std::uint64_t cap = 2'000'000) const {
        if (ring.kind == RingKind::Integers) {
            const Int& k = ideal_gcd.terms[0].second;
            if (k > Int(cap)) return std::nullopt;
            return static_cast<std::uint64_t>(k);
        }
        if (ring.kind == RingKind::PolyOverFp) {
            std::uint64_t n = 1;
            for (unsigned i = 0; i < ideal_gcd.degree_x(); ++i) {
                n *= ring.p;
                if (n > cap) return std::nullopt;
            }
            return n;
        }
        return std::nullopt;  // the term-ideal quotients handled here are infinite
    }
};

using IdealHandle = std::shared_ptr<const TermIdeal>;

inline TermIdeal make_term_ideal(const RingDescriptor& ring, const std::vector<UfdElement>& gens_in) {
    TermIdeal I;
    I.ring = ring;
    for (const auto& g : gens_in) {
        if (!(g.ring == ring)) throw ring_mismatch_error("ideal generator from a different ring");
        if (!g.is_zero()) I.gens.push_back(g);
    }
    if (I.gens.empty()) throw unsupported_ideal_error("ideal needs a nonzero generator");
    I.ideal_gcd = gcd_many(I.gens);

    switch (ring.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverFp:
            break;  // single-generator semantics via ideal_gcd
        case RingKind::PolyOverZ: {
            unsigned maxdeg = 0;
            for (const auto& g : I.gens) {
                if (!g.is_term())
                    throw unsupported_ideal_error("Z[x] ideals must be generated by terms c*x^d, got " +
                                                  to_string(g));
                maxdeg = std::max(maxdeg, g.terms[0].first.dx);
            }
            I.stable_from = maxdeg;
            I.chain.assign(maxdeg + 1, 0);
            for (unsigned n = 0; n <= maxdeg; ++n) {
                Int g = 0;
                for (const auto& t : I.gens)
                    if (t.terms[0].first.dx <= n) g = int_gcd(g, t.terms[0].second);
                I.chain[n] = g;
            }
            break;
        }
        case RingKind::BivariateOverFp: {
            std::vector<Mono> monos;
            for (const auto& g : I.gens) {
                if (!g.is_term())
                    throw unsupported_ideal_error(ring.name() + " ideals must be generated by terms, got " +
                                                  to_string(g));
                monos.push_back(g.terms[0].first);
            }
            // minimalize under divisibility
            std::sort(monos.begin(), monos.end());
            for (const auto& m : monos) {
                bool redundant = false;
                for (const auto& kept : I.monomials)
                    if (kept.divides(m)) {
                        redundant = true;
                        break;
                    }
                if (!redundant) I.monomials.push_back(m);
            }
            break;
        }
    }
    return I;
}

inline IdealHandle build_ideal(const RingDescriptor& ring, const std::vector<UfdElement>& gens) {
    return std::make_shared<const TermIdeal>(make_term_ideal(ring, gens));
}

// the ideal generated by {g/delta}; delta must divide k (hence every generator)
inline IdealHandle ideal_scale_down(const TermIdeal& I, const UfdElement& delta) {
    if (delta.is_zero() || !divides(delta, I.ideal_gcd))
        throw error("scale-down divisor " + to_string(delta) + " does not divide gcd " + to_string(I.ideal_gcd));
    std::vector<UfdElement> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) gens.push_back(divide_exact(g, delta));
    return build_ideal(I.ring, gens);
}

// Z[x] ideal whose membership condition is exactly the given coefficient
// chain (moduli[j] for degree j, last entry repeating; 0 = forced zero).
// Requires a divisibility-nonincreasing chain with nonzero tail.
inline IdealHandle ideal_from_chain(const RingDescriptor& ring, const std::vector<Int>& moduli) {
    if (ring.kind != RingKind::PolyOverZ) throw error("chains only describe Z[x] ideals");
    if (moduli.empty() || moduli.back() == 0) throw unsupported_ideal_error("chain tail must be nonzero");
    std::vector<UfdElement> gens;
    Int prev = 0;
    for (unsigned j = 0; j < moduli.size(); ++j) {
        const Int& m = moduli[j];
        if (m == 0) {
            if (prev != 0) throw error("chain gains a forced-zero level after a finite one");
            continue;
        }
        if (prev == 0 || m != prev) {
            if (prev != 0 && prev % m != 0) throw error("chain is not divisibility-nonincreasing");
            gens.push_back(UfdElement::term(ring, m, {j, 0}));
            prev = m;
        }
    }
    return build_ideal(ring, gens);
}

// ---- residues --------------------------------------------------------------

class Residue {
  public:
    IdealHandle ideal;
    UfdElement rep;  // canonical normal form

    Residue() = default;
    Residue(IdealHandle i, UfdElement r) : ideal(std::move(i)), rep(std::move(r)) {}

    bool is_zero() const { return rep.is_zero(); }
    bool is_one() const { return rep.is_one(); }
    bool operator==(const Residue& o) const {
        require_same_quotient(*this, o);
        return rep == o.rep;
    }
    bool operator!=(const Residue& o) const { return !(*this == o); }

    static void require_same_quotient(const Residue& a, const Residue& b) {
        if (a.ideal == b.ideal) return;
        if (!a.ideal || !b.ideal) throw ring_mismatch_error("residue without a quotient ring");
        if (!(a.ideal->ring == b.ideal->ring) || !(a.ideal->gens == b.ideal->gens))
            throw ring_mismatch_error("residues from different quotient rings");
    }
};

inline Residue project(const IdealHandle& I, const UfdElement& e) { return {I, I->normal_form_of(e)}; }
inline Residue project(const IdealHandle& I, Int c) {
    return project(I, UfdElement::constant(I->ring, std::move(c)));
}
inline Residue zero_residue(const IdealHandle& I) { return {I, UfdElement::zero(I->ring)}; }
inline Residue one_residue(const IdealHandle& I) { return project(I, UfdElement::one(I->ring)); }

inline Residue operator+(const Residue& a, const Residue& b) {
    Residue::require_same_quotient(a, b);
    return project(a.ideal, a.rep + b.rep);
}
inline Residue operator-(const Residue& a, const Residue& b) {
    Residue::require_same_quotient(a, b);
    return project(a.ideal, a.rep - b.rep);
}
inline Residue operator-(const Residue& a) { return project(a.ideal, -a.rep); }
inline Residue operator*(const Residue& a, const Residue& b) {
    Residue::require_same_quotient(a, b);
    return project(a.ideal, a.rep * b.rep);
}

inline std::string to_string(const Residue& r) { return to_string(r.rep); }

// ---- ideals of the quotient ring R/I ---------------------------------------

// Represented by the full preimage ideal J + I of R (a term ideal again), so
// membership and equality stay decidable.
class QuotientIdeal {
  public:
    IdealHandle ambient;
    std::vector<UfdElement> shown_gens;  // generators modulo I, for display
    std::shared_ptr<const TermIdeal> preimage;

    bool contains(const Residue& r) const {
        if (!(r.ideal->gens == ambient->gens)) throw ring_mismatch_error("residue from another quotient");
        return preimage->contains(r.rep);
    }
    bool contains_lift(const UfdElement& e) const { return preimage->contains(e); }

    bool is_zero_ideal() const {
        for (const auto& g : shown_gens)
            if (!ambient->contains(g)) return false;
        return true;
    }
    bool is_whole_ring() const { return preimage->contains(UfdElement::one(ambient->ring)); }
};

inline QuotientIdeal make_quotient_ideal(const IdealHandle& ambient, std::vector<UfdElement> gens) {
    QuotientIdeal q;
    q.ambient = ambient;
    q.shown_gens = std::move(gens);
    std::vector<UfdElement> all = q.shown_gens;
    for (const auto& g : ambient->gens) all.push_back(g);
    q.preimage = build_ideal(ambient->ring, all);
    return q;
}

inline QuotientIdeal zero_quotient_ideal(const IdealHandle& ambient) {
    return make_quotient_ideal(ambient, {});
}

// mutual generator membership
inline bool ideal_equals(const QuotientIdeal& A, const QuotientIdeal& B) {
    if (!(A.ambient->gens == B.ambient->gens)) throw ring_mismatch_error("ideals of different quotients");
    for (const auto& g : A.shown_gens)
        if (!B.contains_lift(g)) return false;
    for (const auto& g : B.shown_gens)
        if (!A.contains_lift(g)) return false;
    return true;
}

}  // namespace cenquot

#endif
