#ifndef CENQUOT_IMATRIX_HPP
#define CENQUOT_IMATRIX_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cenquot/annihilator.hpp"
#include "cenquot/matrix.hpp"

namespace cenquot {

// Witness that the pair of commutation-triple entries generates the principal
// residue ideal of t, with t dividing k: alpha*first + beta*second = t-hat.
// Degenerate certificates (scalar image / all-zero pair fallback) carry t = 0.
struct BezoutCertificate {
    std::array<int, 2> pair{1, 2};  // indices into (e-h, f, g)
    UfdElement t;
    Residue alpha, beta;
};

inline bool verify_bezout(const BezoutCertificate& c, const std::array<Residue, 3>& triple,
                          const IdealHandle& I) {
    const Residue& first = triple[c.pair[0]];
    const Residue& second = triple[c.pair[1]];
    if (!(c.alpha * first + c.beta * second == project(I, c.t))) return false;
    if (c.t.is_zero()) return first.is_zero() && second.is_zero();
    if (!divides(c.t, I->ideal_gcd)) return false;
    if (!divides(c.t, first.rep) || !divides(c.t, second.rep)) return false;
    return true;
}

struct IMatrixVerdict {
    enum class Kind { Certified, Refuted, Unknown } kind = Kind::Unknown;
    std::optional<BezoutCertificate> certificate;
    std::vector<std::string> audit;
    std::string reason;

    bool certified() const { return kind == Kind::Certified; }
    bool refuted() const { return kind == Kind::Refuted; }
};

inline BezoutCertificate bezout_certificate(const IMatrixVerdict& v) {
    if (!v.certified()) throw error("no Bezout certificate on a non-certified verdict");
    return *v.certificate;
}

namespace detail {

// route B: refute t-hat in <u-hat, v-hat> through a collapse into a PID
inline std::optional<std::string> refute_pair_ideal(const IdealHandle& I, const UfdElement& t,
                                                    const UfdElement& u, const UfdElement& v) {
    for (const Collapse& phi : collapses_for(I->ring)) {
        std::vector<UfdElement> gens = {phi.apply(u), phi.apply(v)};
        for (const auto& g : I->gens) gens.push_back(phi.apply(g));
        UfdElement d = gcd_many(gens);
        UfdElement ti = phi.apply(t);
        bool member = d.is_zero() ? ti.is_zero() : divides(d, ti);
        if (!member) return "collapse " + phi.label + " leaves t outside the pair ideal";
    }
    return std::nullopt;
}

struct PairOutcome {
    enum class Kind { Certified, Refuted, Unknown } kind = Kind::Unknown;
    std::optional<BezoutCertificate> cert;
};

}  // namespace detail

// Two-stage test per pair in the order (f,g), (e-h,f), (e-h,g): stage (i)
// solves c*alpha = divisor-part(alpha); stage (ii) repeats in R/<delta> for a
// remaining entry.  A pair with stage (i) solved and stage (ii) refuted is
// refuted outright (the reduction lemma is an equivalence); pairs with both
// stage (i) routes refuted fall back to the direct collapse refutation of
// t = gcd(u, v, k).
inline IMatrixVerdict classify(const MatrixOverQuotient& bhat) {
    if (bhat.n != 2) throw error("I-matrix classification is defined for 2x2 matrices");
    const IdealHandle I = bhat.e[0].ideal;
    const RingDescriptor& R = I->ring;
    const UfdElement& k = I->ideal_gcd;
    std::array<Residue, 3> triple = commutation_triple(bhat);
    IMatrixVerdict out;

    auto certify = [&](BezoutCertificate cert, std::string note) {
        if (!verify_bezout(cert, triple, I)) throw error("Bezout certificate failed verification");
        out.kind = IMatrixVerdict::Kind::Certified;
        out.certificate = std::move(cert);
        out.audit.push_back(std::move(note));
        return out;
    };

    if (triple[0].is_zero() && triple[1].is_zero() && triple[2].is_zero()) {
        BezoutCertificate cert;
        cert.pair = {1, 2};
        cert.t = UfdElement::zero(R);
        cert.alpha = zero_residue(I);
        cert.beta = zero_residue(I);
        return certify(std::move(cert), "scalar image: centralizer is the full matrix ring");
    }

    const std::array<std::array<int, 2>, 3> pair_order{{{1, 2}, {0, 1}, {0, 2}}};
    bool saw_zero_pair = false;
    bool all_nonzero_pairs_refuted = true;
    bool any_unknown = false;

    for (const auto& pr : pair_order) {
        const Residue& u = triple[pr[0]];
        const Residue& v = triple[pr[1]];
        std::string tag = "pair(" + std::to_string(pr[0]) + "," + std::to_string(pr[1]) + ")";

        if (u.is_zero() && v.is_zero()) {
            saw_zero_pair = true;
            if (project(I, k).is_zero()) {
                BezoutCertificate cert;
                cert.pair = pr;
                cert.t = k;
                cert.alpha = zero_residue(I);
                cert.beta = zero_residue(I);
                return certify(std::move(cert), tag + ": both entries zero and k lies in the ideal (t = k)");
            }
            out.audit.push_back(tag + ": both entries zero, deferred (k not in the ideal)");
            continue;
        }

        UfdElement t = gcd_many({u.rep.is_zero() ? k : u.rep, v.rep.is_zero() ? k : v.rep, k});
        bool pair_refuted = false;

        for (int which = 0; which < 2 && !pair_refuted; ++which) {
            const Residue& alpha = which == 0 ? u : v;
            const Residue& beta = which == 0 ? v : u;
            if (alpha.is_zero()) {
                out.audit.push_back(tag + ": stage (i) skips the zero entry");
                continue;
            }
            SemiDivisorResult s1 = semi_divisor_solve(alpha);
            if (s1.certainty == SemiDivisorResult::Certainty::Refuted) {
                out.audit.push_back(tag + ": stage (i) refuted for " + to_string(alpha.rep));
                continue;
            }
            if (s1.certainty == SemiDivisorResult::Certainty::Unknown) {
                any_unknown = true;
                out.audit.push_back(tag + ": stage (i) undecided for " + to_string(alpha.rep));
                continue;
            }
            const UfdElement& delta = s1.divisor;
            const Residue& c = *s1.cofactor;

            if (delta.is_unit()) {
                BezoutCertificate cert;
                cert.pair = pr;
                cert.t = canonical_associate(delta);  // = 1
                Residue coeff_alpha = project(I, unit_inverse(delta)) * c;
                Residue coeff_beta = zero_residue(I);
                cert.alpha = which == 0 ? coeff_alpha : coeff_beta;
                cert.beta = which == 0 ? coeff_beta : coeff_alpha;
                return certify(std::move(cert), tag + ": stage (i) divisor part is a unit");
            }

            IdealHandle Jdelta = build_ideal(R, {delta});
            Residue beta_delta = project(Jdelta, beta.rep);
            if (beta_delta.is_zero()) {
                // beta lies in <delta>, so the pair ideal is <delta-hat> itself
                if (!(canonical_associate(t) == canonical_associate(delta)))
                    throw error("stage (ii) degenerate case disagrees with gcd(a,b,k)");
                BezoutCertificate cert;
                cert.pair = pr;
                cert.t = delta;
                Residue coeff_alpha = c;
                Residue coeff_beta = zero_residue(I);
                cert.alpha = which == 0 ? coeff_alpha : coeff_beta;
                cert.beta = which == 0 ? coeff_beta : coeff_alpha;
                return certify(std::move(cert), tag + ": remaining entry vanishes mod the divisor part");
            }
            SemiDivisorResult s2 = semi_divisor_solve(beta_delta);
            if (s2.certainty == SemiDivisorResult::Certainty::Found) {
                const UfdElement& gamma = s2.divisor;  // gcd(beta, delta) = t up to units
                if (!(canonical_associate(gamma) == t))
                    throw error("stage (ii) divisor part disagrees with gcd(a,b,k)");
                const UfdElement d_lift = s2.cofactor->rep;
                UfdElement e_lift = divide_exact(d_lift * beta.rep - gamma, delta);
                BezoutCertificate cert;
                cert.pair = pr;
                cert.t = gamma;
                Residue coeff_beta = project(I, d_lift);
                Residue coeff_alpha = project(I, -e_lift) * c;
                cert.alpha = which == 0 ? coeff_alpha : coeff_beta;
                cert.beta = which == 0 ? coeff_beta : coeff_alpha;
                return certify(std::move(cert), tag + ": two-stage witnesses assembled");
            }
            if (s2.certainty == SemiDivisorResult::Certainty::Refuted) {
                // reduction lemma: no d in R/<delta> means the pair ideal is not <t>
                pair_refuted = true;
                out.audit.push_back(tag + ": stage (ii) refuted in R/<" + to_string(delta) +
                                    ">, pair closed by the reduction lemma");
            } else {
                any_unknown = true;
                out.audit.push_back(tag + ": stage (ii) undecided");
            }
        }

        if (!pair_refuted) {
            if (auto why = detail::refute_pair_ideal(I, t, u.rep, v.rep)) {
                pair_refuted = true;
                out.audit.push_back(tag + ": " + *why);
            }
        }
        if (!pair_refuted) all_nonzero_pairs_refuted = false;
    }

    if (saw_zero_pair && all_nonzero_pairs_refuted && !any_unknown) {
        // spec fallback: a zero pair certifies with t = 0 once every other
        // route has failed; the pair ideal is trivially the zero ideal
        for (const auto& pr : pair_order) {
            if (triple[pr[0]].is_zero() && triple[pr[1]].is_zero()) {
                BezoutCertificate cert;
                cert.pair = pr;
                cert.t = UfdElement::zero(R);
                cert.alpha = zero_residue(I);
                cert.beta = zero_residue(I);
                return certify(std::move(cert), "zero pair fallback: t = 0");
            }
        }
    }
    if (all_nonzero_pairs_refuted && !any_unknown && !saw_zero_pair) {
        out.kind = IMatrixVerdict::Kind::Refuted;
        out.reason = "every pair refuted decisively";
        return out;
    }
    out.kind = IMatrixVerdict::Kind::Unknown;
    out.reason = "some pair analysis did not terminate decisively";
    return out;
}

}  // namespace cenquot

#endif
