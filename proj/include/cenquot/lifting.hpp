#ifndef CENQUOT_LIFTING_HPP
#define CENQUOT_LIFTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "cenquot/factor.hpp"
#include "cenquot/term_ideal.hpp"

namespace cenquot {

struct PreImageStep {
    UfdElement prime;
    unsigned q = 0, m = 0;
    std::optional<std::size_t> gen_index;  // generator supplying the cofactor, when adjusted
    UfdElement cofactor;                   // a' with p not dividing a'
};

// A lift r*delta of a residue with gcd(r,k) a unit and (delta = 0 or delta | k).
struct IPreImage {
    UfdElement relative_prime_part;  // r
    UfdElement divisor_part;         // delta
    std::vector<PreImageStep> trace;
};

inline UfdElement divisor_part(const Residue& b) {
    if (b.is_zero()) return UfdElement::zero(b.ideal->ring);
    return gcd(b.rep, b.ideal->ideal_gcd);
}

// Constructive pre-image of the residue of `lift` (the construction works on
// the lift as given), following the per-prime substitution
// p^q -> p^m * (p^(q-m) + a'*(k/p^m)) whenever q exceeds k's exponent m.
inline IPreImage preimage_of_lift(const IdealHandle& I, const UfdElement& lift) {
    const RingDescriptor& R = I->ring;
    const UfdElement& k = I->ideal_gcd;
    UfdElement rep = I->normal_form_of(lift);
    IPreImage out;
    if (rep.is_zero()) {
        out.relative_prime_part = UfdElement::one(R);
        out.divisor_part = UfdElement::zero(R);
        return out;
    }
    if (k.is_unit()) {
        out.relative_prime_part = lift;
        out.divisor_part = UfdElement::one(R);
        return out;
    }
    PrimeFactorization kf = factor(k);
    UfdElement r = lift;
    UfdElement delta = UfdElement::one(R);
    for (const auto& [p, m] : kf.factors) {
        unsigned q = multiplicity(p, lift);
        PreImageStep step{p, q, m, std::nullopt, UfdElement::zero(R)};
        if (q <= m) {
            delta = delta * pow(p, q);
            r = divide_exact(r, pow(p, q));
        } else {
            // gcd of the cofactors gens/k is 1, so one of them avoids p
            std::optional<std::size_t> pick;
            UfdElement cof(R);
            for (std::size_t j = 0; j < I->gens.size(); ++j) {
                UfdElement c = divide_exact(I->gens[j], k);
                if (!divides(p, c)) {
                    pick = j;
                    cof = c;
                    break;
                }
            }
            if (!pick) throw error("no generator cofactor avoids prime " + to_string(p));
            delta = delta * pow(p, m);
            UfdElement adjusted = pow(p, q - m) + cof * divide_exact(k, pow(p, m));
            r = divide_exact(r, pow(p, q)) * adjusted;
            step.gen_index = pick;
            step.cofactor = cof;
        }
        out.trace.push_back(std::move(step));
    }
    // canonicalize delta, folding its unit into r so r*delta is unchanged
    out.divisor_part = canonical_associate(delta);
    out.relative_prime_part = r * unit_of(delta);
    if (!gcd(out.relative_prime_part, k).is_unit())
        throw error("pre-image postcondition failed: gcd(r,k) not a unit");
    if (!divides(out.divisor_part, k)) throw error("pre-image postcondition failed: delta does not divide k");
    if (!(I->normal_form_of(out.relative_prime_part * out.divisor_part) == rep))
        throw error("pre-image postcondition failed: r*delta is not a lift");
    return out;
}

inline IPreImage i_preimage(const Residue& b) { return preimage_of_lift(b.ideal, b.rep); }

struct PrincipalityReport {
    std::vector<std::pair<UfdElement, unsigned>> delta_exponents;  // (p_i, q_i)
    std::vector<std::pair<UfdElement, unsigned>> k_exponents;      // (p_i, m_i)
    bool principal = false;    // q_i < m_i for all i
    bool q_principal = false;  // q_i >= 1 for all i
    bool k_is_unit = false;    // vacuous case, flagged distinctly
};

inline PrincipalityReport classify_principality(const Residue& b) {
    if (b.is_zero()) throw error("principality of the zero residue is undefined");
    PrincipalityReport rep;
    const UfdElement& k = b.ideal->ideal_gcd;
    if (k.is_unit()) {
        rep.k_is_unit = true;
        rep.principal = true;
        rep.q_principal = true;
        return rep;
    }
    UfdElement delta = divisor_part(b);
    PrimeFactorization kf = factor(k);
    rep.principal = true;
    rep.q_principal = true;
    for (const auto& [p, m] : kf.factors) {
        unsigned q = multiplicity(p, delta);
        rep.k_exponents.emplace_back(p, m);
        rep.delta_exponents.emplace_back(p, q);
        if (q >= m) rep.principal = false;
        if (q < 1) rep.q_principal = false;
    }
    return rep;
}

// Telescoping-product inverse certificate: (1+n)(1-n)(1+n^2)...(1+n^(2^(l-1)))
// collapses to 1 - n^(2^l), with the tail shown to lie in the ideal.
struct InverseCertificate {
    Residue base;
    Residue inverse;
    unsigned doublings = 0;             // l
    std::vector<UfdElement> factors;    // the multiplied lifts
    UfdElement residual;                // in I
};

inline bool verify_inverse_certificate(const InverseCertificate& c) {
    const IdealHandle& I = c.base.ideal;
    UfdElement prod = c.base.rep;
    for (const auto& f : c.factors) prod = prod * f;
    if (!(prod == UfdElement::one(I->ring) - c.residual)) return false;
    if (!I->contains(c.residual)) return false;
    Residue check = c.base * c.inverse;
    return check.is_one();
}

// Requires rep = n + 1 with the residue of n q-principal and n*k in I; the
// doubling count is minimal with (2^l - 1) * q_i >= m_i at every prime of k.
inline std::optional<InverseCertificate> geometric_inverse(const Residue& b, std::string* why = nullptr) {
    const IdealHandle& I = b.ideal;
    const RingDescriptor& R = I->ring;
    const UfdElement& k = I->ideal_gcd;
    auto fail = [&](const std::string& msg) -> std::optional<InverseCertificate> {
        if (why) *why = msg;
        return std::nullopt;
    };
    UfdElement n = b.rep - UfdElement::one(R);
    InverseCertificate cert;
    cert.base = b;
    if (n.is_zero()) {
        cert.inverse = one_residue(I);
        cert.residual = UfdElement::zero(R);
        return cert;
    }
    if (k.is_unit()) return fail("gcd of the ideal is a unit");
    if (!I->contains(n * k)) return fail("n*k is not in the ideal");
    UfdElement delta = gcd(n, k);
    PrimeFactorization kf = factor(k);
    unsigned l = 0;
    for (const auto& [p, m] : kf.factors) {
        unsigned q = multiplicity(p, delta);
        if (q < 1) return fail("n is not q-principal (prime " + to_string(p) + " missing)");
        unsigned li = 0;
        while (((1ull << li) - 1) * q < m) {
            ++li;
            if (li > 32) return fail("doubling cap exceeded");
        }
        l = std::max(l, li);
    }
    cert.doublings = l;
    cert.factors.push_back(UfdElement::one(R) - n);
    UfdElement npow = n;
    for (unsigned j = 1; j < l; ++j) {
        npow = npow * npow;
        cert.factors.push_back(UfdElement::one(R) + npow);
    }
    cert.residual = npow * npow;  // n^(2^l)
    UfdElement inv_lift = UfdElement::one(R);
    for (const auto& f : cert.factors) inv_lift = inv_lift * f;
    cert.inverse = project(I, inv_lift);
    if (!verify_inverse_certificate(cert)) throw error("geometric certificate failed verification");
    return cert;
}

}  // namespace cenquot

#endif
