#ifndef CENQUOT_INVERT_HPP
#define CENQUOT_INVERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cenquot/lifting.hpp"

namespace cenquot {

// ---- extended Euclid in the PID kinds --------------------------------------

// s*a + t*b = g (canonical associate)
inline UfdElement poly_fp_egcd(const UfdElement& a, const UfdElement& b, UfdElement& s, UfdElement& t) {
    const RingDescriptor& R = a.ring;
    const Int p(R.p);
    UfdElement old_r = a, r = b;
    UfdElement old_s = UfdElement::one(R), cur_s = UfdElement::zero(R);
    UfdElement old_t = UfdElement::zero(R), cur_t = UfdElement::one(R);
    while (!r.is_zero()) {
        // quotient of old_r by r
        UfdElement q(R), rem = old_r;
        unsigned dr = r.degree_x();
        Int inv = *int_inverse_mod(r.leading_coeff(), p);
        while (!rem.is_zero() && rem.degree_x() >= dr) {
            UfdElement piece = UfdElement::term(R, int_mod(rem.leading_coeff() * inv, p), {rem.degree_x() - dr, 0});
            q = q + piece;
            rem = rem - piece * r;
        }
        old_r = r;
        r = rem;
        UfdElement ns = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = ns;
        UfdElement nt = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = nt;
    }
    UfdElement u = unit_of(old_r);
    UfdElement ui = unit_inverse(u);
    s = old_s * ui;
    t = old_t * ui;
    return old_r * ui;
}

// ---- integer linear systems (Z[x] congruence solving) ----------------------

namespace detail {

// One solution of M z = t over the integers via column Hermite reduction,
// or nullopt when none exists.
inline std::optional<std::vector<Int>> solve_integer_system(std::vector<std::vector<Int>> M,
                                                            std::vector<Int> t) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    std::vector<std::vector<Int>> U(cols, std::vector<Int>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) U[j][j] = 1;

    auto col_at = [&](std::size_t r, std::size_t j) -> Int& { return M[r][j]; };
    std::vector<std::ptrdiff_t> pivot_col_of_row(rows, -1);

    std::size_t c = 0;
    for (std::size_t r = 0; r < rows && c < cols; ++r) {
        std::size_t j = c;
        while (j < cols && col_at(r, j) == 0) ++j;
        if (j == cols) continue;
        if (j != c) {
            for (std::size_t rr = 0; rr < rows; ++rr) std::swap(M[rr][j], M[rr][c]);
            for (std::size_t rr = 0; rr < cols; ++rr) std::swap(U[rr][j], U[rr][c]);
        }
        for (std::size_t j2 = c + 1; j2 < cols; ++j2) {
            if (col_at(r, j2) == 0) continue;
            Int x, y;
            Int g = int_egcd(M[r][c], M[r][j2], x, y);
            Int a = M[r][c] / g, b = M[r][j2] / g;
            for (std::size_t rr = 0; rr < rows; ++rr) {
                Int nc = x * M[rr][c] + y * M[rr][j2];
                Int nj = b * M[rr][c] - a * M[rr][j2];
                M[rr][c] = nc;
                M[rr][j2] = nj;
            }
            for (std::size_t rr = 0; rr < cols; ++rr) {
                Int nc = x * U[rr][c] + y * U[rr][j2];
                Int nj = b * U[rr][c] - a * U[rr][j2];
                U[rr][c] = nc;
                U[rr][j2] = nj;
            }
        }
        pivot_col_of_row[r] = static_cast<std::ptrdiff_t>(c);
        ++c;
    }

    std::vector<Int> y(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        Int residual = t[r];
        for (std::size_t j = 0; j < cols; ++j) {
            if (pivot_col_of_row[r] == static_cast<std::ptrdiff_t>(j)) continue;
            if (M[r][j] != 0) residual -= M[r][j] * y[j];
        }
        if (pivot_col_of_row[r] < 0) {
            if (residual != 0) return std::nullopt;
            continue;
        }
        std::size_t pc = static_cast<std::size_t>(pivot_col_of_row[r]);
        if (residual % M[r][pc] != 0) return std::nullopt;
        y[pc] = residual / M[r][pc];
    }
    std::vector<Int> z(cols, 0);
    for (std::size_t i = 0; i < cols; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < cols; ++j)
            if (U[i][j] != 0 && y[j] != 0) acc += U[i][j] * y[j];
        z[i] = acc;
    }
    return z;
}

}  // namespace detail

// Solve a*v == target (mod I) for v of bounded degree; exact yes-with-witness,
// nullopt means "no bounded-degree solution" (not a refutation in general).
inline std::optional<UfdElement> solve_linear_congruence(const IdealHandle& I, const UfdElement& a,
                                                         const UfdElement& target, unsigned degree_budget) {
    const RingDescriptor& R = I->ring;
    switch (R.kind) {
        case RingKind::Integers: {
            const Int& k = I->ideal_gcd.terms[0].second;
            Int av = a.is_zero() ? Int(0) : a.terms[0].second;
            Int tv = target.is_zero() ? Int(0) : target.terms[0].second;
            Int x, y;
            Int g = int_egcd(av, k, x, y);
            if (g == 0) return tv == 0 ? std::optional<UfdElement>(UfdElement::zero(R)) : std::nullopt;
            if (tv % g != 0) return std::nullopt;
            Int v = int_mod(x * (tv / g), k);
            return UfdElement::constant(R, v);
        }
        case RingKind::PolyOverFp: {
            UfdElement s(R), t(R);
            UfdElement g = poly_fp_egcd(a, I->ideal_gcd, s, t);
            if (g.is_zero()) return target.is_zero() ? std::optional<UfdElement>(UfdElement::zero(R)) : std::nullopt;
            auto q = try_divide_exact(target, g);
            if (!q) return std::nullopt;
            return I->normal_form_of(s * *q);
        }
        case RingKind::PolyOverZ: {
            const unsigned D = degree_budget;
            unsigned da = a.degree_x();
            unsigned nrows = D + da + 1;
            std::vector<std::size_t> slack_col(nrows, SIZE_MAX);
            std::size_t cols = D + 1;
            for (unsigned n = 0; n < nrows; ++n)
                if (I->modulus_at(n) != 0) slack_col[n] = cols++;
            std::vector<std::vector<Int>> M(nrows, std::vector<Int>(cols, 0));
            std::vector<Int> t(nrows, 0);
            for (unsigned n = 0; n < nrows; ++n) {
                for (unsigned j = 0; j <= D; ++j) {
                    if (j > n || n - j > da) continue;
                    Int c = a.coeff_x(n - j);
                    if (c != 0) M[n][j] = c;
                }
                if (slack_col[n] != SIZE_MAX) M[n][slack_col[n]] = I->modulus_at(n);
                t[n] = target.coeff_x(n);
            }
            auto z = detail::solve_integer_system(std::move(M), std::move(t));
            if (!z) return std::nullopt;
            UfdElement v(R);
            for (unsigned j = 0; j <= D; ++j) v.add_term({j, 0}, (*z)[j]);
            UfdElement check = I->normal_form_of(a * v - target);
            if (!check.is_zero()) throw error("congruence solver produced a bad witness");
            return I->normal_form_of(v);
        }
        case RingKind::BivariateOverFp: {
            // Gaussian elimination over F_p; unknowns are coefficients of the
            // monomials of total degree <= budget that survive normal form.
            const Int p(R.p);
            std::vector<Mono> unknowns;
            for (unsigned d = 0; d <= degree_budget; ++d)
                for (unsigned i = 0; i <= d; ++i) {
                    Mono m{d - i, i};
                    if (!I->normal_form_of(UfdElement::term(R, 1, m)).is_zero()) unknowns.push_back(m);
                }
            std::vector<UfdElement> cols;
            cols.reserve(unknowns.size());
            std::vector<Mono> row_monos;
            auto note_rows = [&](const UfdElement& e) {
                for (const auto& [m, c] : e.terms)
                    if (std::find(row_monos.begin(), row_monos.end(), m) == row_monos.end())
                        row_monos.push_back(m);
            };
            UfdElement tgt = I->normal_form_of(target);
            note_rows(tgt);
            for (const auto& m : unknowns) {
                UfdElement col = I->normal_form_of(a * UfdElement::term(R, 1, m));
                note_rows(col);
                cols.push_back(col);
            }
            std::sort(row_monos.begin(), row_monos.end());
            const std::size_t R_ = row_monos.size(), C_ = cols.size();
            std::vector<std::vector<Int>> A(R_, std::vector<Int>(C_ + 1, 0));
            for (std::size_t r = 0; r < R_; ++r) {
                for (std::size_t cidx = 0; cidx < C_; ++cidx) A[r][cidx] = cols[cidx].coeff(row_monos[r]);
                A[r][C_] = tgt.coeff(row_monos[r]);
            }
            std::size_t rank = 0;
            std::vector<std::size_t> pivot_of_row;
            for (std::size_t cidx = 0; cidx < C_ && rank < R_; ++cidx) {
                std::size_t pr = rank;
                while (pr < R_ && A[pr][cidx] % p == 0) ++pr;
                if (pr == R_) continue;
                std::swap(A[pr], A[rank]);
                Int inv = *int_inverse_mod(A[rank][cidx], p);
                for (auto& v : A[rank]) v = int_mod(v * inv, p);
                for (std::size_t r = 0; r < R_; ++r) {
                    if (r == rank || A[r][cidx] == 0) continue;
                    Int f = A[r][cidx];
                    for (std::size_t j2 = 0; j2 <= C_; ++j2) A[r][j2] = int_mod(A[r][j2] - f * A[rank][j2], p);
                }
                pivot_of_row.push_back(cidx);
                ++rank;
            }
            for (std::size_t r = rank; r < R_; ++r)
                if (A[r][C_] % p != 0) return std::nullopt;
            UfdElement v(R);
            for (std::size_t r = 0; r < rank; ++r) v.add_term(unknowns[pivot_of_row[r]], A[r][C_]);
            UfdElement check = I->normal_form_of(a * v - target);
            if (!check.is_zero()) throw error("congruence solver produced a bad witness");
            return I->normal_form_of(v);
        }
    }
    throw error("unreachable");
}

// ---- invertibility ----------------------------------------------------------

enum class InverseTag { EuclidCertificate, GeometricCertificate, LinearSolve, RefutedByQuotient, Unknown };

inline const char* to_string(InverseTag t) {
    switch (t) {
        case InverseTag::EuclidCertificate: return "EuclidCertificate";
        case InverseTag::GeometricCertificate: return "GeometricCertificate";
        case InverseTag::LinearSolve: return "LinearSolve";
        case InverseTag::RefutedByQuotient: return "RefutedByQuotient";
        case InverseTag::Unknown: return "Unknown";
    }
    return "?";
}

struct InverseOutcome {
    enum class Status { Found, Refuted, Unknown } status = Status::Unknown;
    std::optional<Residue> inverse;
    InverseTag tag = InverseTag::Unknown;
    std::optional<InverseCertificate> certificate;  // geometric path only
    std::string note;

    bool found() const { return status == Status::Found; }
    bool refuted() const { return status == Status::Refuted; }
};

// Does some unit of the PID D lie in the coset base + modulus*D?
// units(Z) = {1,-1}; units(F_p[x]) = nonzero constants.
inline bool coset_contains_unit(const UfdElement& base, const UfdElement& modulus) {
    const RingDescriptor& D = base.ring;
    if (D.kind == RingKind::Integers) {
        if (modulus.is_zero()) return base.is_unit();
        const Int& m = modulus.terms[0].second;
        Int b = base.is_zero() ? Int(0) : base.terms[0].second;
        return int_mod(b - 1, m < 0 ? Int(-m) : m) == 0 || int_mod(b + 1, m < 0 ? Int(-m) : m) == 0;
    }
    if (D.kind == RingKind::PolyOverFp) {
        if (modulus.is_zero()) return base.is_unit();
        for (unsigned c = 1; c < D.p; ++c)
            if (divides(modulus, base - UfdElement::constant(D, c))) return true;
        return false;
    }
    throw error("coset_contains_unit expects a PID image");
}

// Sound proof that the residue is NOT invertible: some collapse into a PID
// image makes it a nonunit modulo the collapsed ideal.
inline std::optional<std::string> refute_invertible(const Residue& b) {
    const TermIdeal& I = *b.ideal;
    for (const Collapse& phi : collapses_for(I.ring)) {
        std::vector<UfdElement> imgs;
        imgs.reserve(I.gens.size());
        for (const auto& g : I.gens) imgs.push_back(phi.apply(g));
        UfdElement mu = gcd_many(imgs);
        UfdElement img = phi.apply(b.rep);
        bool invertible;
        if (mu.is_zero())
            invertible = img.is_unit();
        else
            invertible = gcd(img, mu).is_unit();
        if (!invertible) return "collapse " + phi.label + " sends it to a nonunit of " + phi.target.name();
    }
    return std::nullopt;
}

// Strategy order: PID extended Euclid, then the unit-plus-q-principal
// telescoping construction, then a bounded-degree linear solve over the chain
// moduli (budget doubled once), then domain-quotient refutation.  Any inverse
// returned has been re-verified by residue multiplication.
inline InverseOutcome try_inverse(const Residue& b, std::optional<unsigned> budget = std::nullopt) {
    const IdealHandle& I = b.ideal;
    const RingDescriptor& R = I->ring;
    InverseOutcome out;
    auto accept = [&](Residue inv, InverseTag tag) {
        if (!(b * inv).is_one()) throw error("inverse failed re-verification");
        out.status = InverseOutcome::Status::Found;
        out.inverse = std::move(inv);
        out.tag = tag;
        return out;
    };

    if (one_residue(I).is_zero()) return accept(b, InverseTag::EuclidCertificate);  // trivial quotient
    if (b.is_zero()) {
        out.status = InverseOutcome::Status::Refuted;
        out.tag = InverseTag::RefutedByQuotient;
        out.note = "zero is not invertible in a nontrivial ring";
        return out;
    }
    if (b.is_one()) return accept(b, InverseTag::EuclidCertificate);

    if (is_pid(R.kind)) {
        auto v = solve_linear_congruence(I, b.rep, UfdElement::one(R), 0);
        if (v) return accept(project(I, *v), InverseTag::EuclidCertificate);
        out.status = InverseOutcome::Status::Refuted;
        out.tag = InverseTag::RefutedByQuotient;
        out.note = "gcd(" + to_string(b.rep) + ", " + to_string(I->ideal_gcd) + ") is not a unit";
        return out;
    }

    std::string why;
    if (auto cert = geometric_inverse(b, &why)) {
        out.certificate = cert;
        return accept(cert->inverse, InverseTag::GeometricCertificate);
    }

    unsigned base_budget = budget.value_or(b.rep.total_degree() + I->stable_from +
                                           (R.kind == RingKind::BivariateOverFp && !I->monomials.empty()
                                                ? I->monomials.back().total()
                                                : 0) +
                                           8);
    for (unsigned attempt = 0; attempt < 2; ++attempt) {
        unsigned D = base_budget << attempt;
        if (auto v = solve_linear_congruence(I, b.rep, UfdElement::one(R), D))
            return accept(project(I, *v), InverseTag::LinearSolve);
    }

    if (auto reason = refute_invertible(b)) {
        out.status = InverseOutcome::Status::Refuted;
        out.tag = InverseTag::RefutedByQuotient;
        out.note = *reason;
        return out;
    }
    out.status = InverseOutcome::Status::Unknown;
    out.tag = InverseTag::Unknown;
    out.note = "no inverse within budget, no refuting collapse";
    return out;
}

// ---- c*b = divisor part ------------------------------------------------------

struct SemiDivisorResult {
    enum class Certainty { Found, Refuted, Unknown } certainty = Certainty::Unknown;
    std::optional<Residue> cofactor;  // c with c*b = divisor part (projected)
    UfdElement divisor;               // delta
    InverseOutcome scaled;            // the invertibility query in R/(delta^-1 I)

    bool found() const { return certainty == Certainty::Found; }
};

// Solve c*b = delta-hat by inverting b/delta in R/(delta^-1 I) and lifting.
inline SemiDivisorResult semi_divisor_solve(const Residue& b) {
    if (b.is_zero()) throw error("semi_divisor_solve needs a nonzero residue");
    const IdealHandle& I = b.ideal;
    SemiDivisorResult out;
    out.divisor = divisor_part(b);
    IdealHandle scaled_ideal = ideal_scale_down(*I, out.divisor);
    Residue scaled_b = project(scaled_ideal, divide_exact(b.rep, out.divisor));
    out.scaled = try_inverse(scaled_b);
    switch (out.scaled.status) {
        case InverseOutcome::Status::Found: {
            Residue c = project(I, out.scaled.inverse->rep);
            if (!(c * b == project(I, out.divisor))) throw error("semi-divisor witness failed verification");
            out.cofactor = c;
            out.certainty = SemiDivisorResult::Certainty::Found;
            break;
        }
        case InverseOutcome::Status::Refuted:
            out.certainty = SemiDivisorResult::Certainty::Refuted;
            break;
        case InverseOutcome::Status::Unknown:
            out.certainty = SemiDivisorResult::Certainty::Unknown;
            break;
    }
    return out;
}

// ---- I-invertibility ---------------------------------------------------------

struct IInvertibilityVerdict {
    enum class Kind { Yes, No, Unknown } kind = Kind::Unknown;
    std::optional<IPreImage> witness;        // pre-image whose r was inverted (Yes)
    std::optional<InverseOutcome> inverse;   // how r-hat was inverted / refuted
    std::string reason;

    bool yes() const { return kind == Kind::Yes; }
    bool no() const { return kind == Kind::No; }
};

// Sound refutation covering every I-pre-image at once: each candidate relative
// prime part has the shape u^-1 (b/delta + sum c_i g_i/delta); a collapse that
// leaves no unit in that family's image refutes them all.
inline std::optional<std::string> refute_all_relative_prime_parts(const Residue& b) {
    const TermIdeal& I = *b.ideal;
    UfdElement delta = divisor_part(b);
    UfdElement beta = divide_exact(b.rep, delta);
    for (const Collapse& phi : collapses_for(I.ring)) {
        std::vector<UfdElement> gen_imgs, scaled_imgs;
        for (const auto& g : I.gens) {
            gen_imgs.push_back(phi.apply(g));
            scaled_imgs.push_back(phi.apply(divide_exact(g, delta)));
        }
        UfdElement mu = gcd_many(gen_imgs);
        UfdElement nu = gcd_many(scaled_imgs);
        UfdElement B = phi.apply(beta);
        if (mu.is_zero()) {
            if (!coset_contains_unit(B, nu))
                return "collapse " + phi.label + ": no candidate relative prime part maps to a unit";
        } else {
            // invertibility mod mu fails for the whole family exactly when a
            // prime of mu divides both nu and B
            if (!gcd(gcd(mu, nu), B).is_unit())
                return "collapse " + phi.label + ": every candidate shares a factor with the collapsed ideal";
        }
    }
    return std::nullopt;
}

inline IInvertibilityVerdict is_i_invertible(const Residue& b) {
    const IdealHandle& I = b.ideal;
    IInvertibilityVerdict out;
    if (b.is_zero()) {
        // 1 * 0 is an I-pre-image of zero with invertible relative prime part
        out.kind = IInvertibilityVerdict::Kind::Yes;
        IPreImage pre;
        pre.relative_prime_part = UfdElement::one(I->ring);
        pre.divisor_part = UfdElement::zero(I->ring);
        out.witness = pre;
        out.inverse = try_inverse(one_residue(I));
        out.reason = "zero residue: definition clause delta := 0";
        return out;
    }
    UfdElement delta = divisor_part(b);
    if (delta.is_unit()) {
        // gcd(b,k) = 1: I-invertible iff plainly invertible
        InverseOutcome inv = try_inverse(b);
        out.inverse = inv;
        if (inv.found()) {
            out.kind = IInvertibilityVerdict::Kind::Yes;
            out.witness = i_preimage(b);
        } else if (inv.refuted()) {
            out.kind = IInvertibilityVerdict::Kind::No;
            out.reason = "gcd(b,k)=1 and b-hat is not invertible: " + inv.note;
        } else {
            out.kind = IInvertibilityVerdict::Kind::Unknown;
            out.reason = inv.note;
        }
        return out;
    }
    PrincipalityReport pr = classify_principality(b);
    IPreImage pre = i_preimage(b);
    InverseOutcome inv = try_inverse(project(I, pre.relative_prime_part));
    if (inv.found()) {
        out.kind = IInvertibilityVerdict::Kind::Yes;
        out.witness = pre;
        out.inverse = inv;
        return out;
    }
    if (pr.principal) {
        // a single test decides for principal residues
        out.inverse = inv;
        if (inv.refuted()) {
            out.kind = IInvertibilityVerdict::Kind::No;
            out.reason = "principal residue: one relative prime part refuted decides all (" + inv.note + ")";
        } else {
            out.kind = IInvertibilityVerdict::Kind::Unknown;
            out.reason = inv.note;
        }
        return out;
    }
    // non-principal: try a spread of alternative lifts, then a family refutation
    std::vector<UfdElement> lifts;
    for (std::size_t i = 0; i < I->gens.size(); ++i) {
        lifts.push_back(b.rep + I->gens[i]);
        lifts.push_back(b.rep - I->gens[i]);
        lifts.push_back(b.rep + I->gens[i] + I->gens[i]);
        for (std::size_t j = i + 1; j < I->gens.size(); ++j) lifts.push_back(b.rep + I->gens[i] + I->gens[j]);
    }
    for (const auto& lift : lifts) {
        IPreImage alt = preimage_of_lift(I, lift);
        InverseOutcome alt_inv = try_inverse(project(I, alt.relative_prime_part));
        if (alt_inv.found()) {
            out.kind = IInvertibilityVerdict::Kind::Yes;
            out.witness = alt;
            out.inverse = alt_inv;
            return out;
        }
    }
    if (auto reason = refute_all_relative_prime_parts(b)) {
        out.kind = IInvertibilityVerdict::Kind::No;
        out.reason = *reason;
        return out;
    }
    out.kind = IInvertibilityVerdict::Kind::Unknown;
    out.reason = "no invertible relative prime part found; no collapse refutes all candidates";
    return out;
}

}  // namespace cenquot

#endif
