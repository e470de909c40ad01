#ifndef CENQUOT_FACTOR_HPP
#define CENQUOT_FACTOR_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "cenquot/ring.hpp"

namespace cenquot {

struct PrimeFactorization {
    UfdElement unit;
    std::vector<std::pair<UfdElement, unsigned>> factors;  // (prime, exponent), primes canonical

    UfdElement expand() const {
        UfdElement out = unit;
        for (const auto& [p, m] : factors) out = out * pow(p, m);
        return out;
    }
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

namespace detail {

inline void factor_int_into(Int n, std::map<Int, unsigned>& out, std::uint64_t trial_bound) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (std::uint64_t d = 2; d <= trial_bound && Int(d) * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            ++out[Int(d)];
            n /= d;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_int_into(d, out, trial_bound);
    factor_int_into(n / d, out, trial_bound);
}

// monic irreducibles over F_p of degree <= max_deg, by trial division against
// the smaller ones
inline std::vector<UfdElement> monic_irreducibles(const RingDescriptor& R, unsigned max_deg) {
    std::vector<UfdElement> irr;
    const unsigned p = R.p;
    for (unsigned d = 1; d <= max_deg; ++d) {
        // enumerate monic polynomials of degree d: p^d coefficient tuples
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) {
            count *= p;
            if (count > 4'000'000) throw unsupported_factorization_error("irreducible table too large");
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            UfdElement f = UfdElement::term(R, 1, {d, 0});
            std::uint64_t t = idx;
            for (unsigned i = 0; i < d; ++i) {
                f.add_term({i, 0}, Int(t % p));
                t /= p;
            }
            bool red = false;
            for (const auto& q : irr) {
                if (2 * q.degree_x() > d) break;
                if (divides(q, f)) {
                    red = true;
                    break;
                }
            }
            if (!red) irr.push_back(f);
        }
        std::sort(irr.begin(), irr.end(),
                  [](const UfdElement& a, const UfdElement& b) { return UfdElement::compare(a, b) < 0; });
    }
    return irr;
}

}  // namespace detail

// Supported classes: arbitrary integers (trial division then rho); terms
// c*x^a*y^b in the polynomial rings; univariate polynomials over F_p of
// degree <= 8.  Anything else fails loudly rather than guessing.
inline PrimeFactorization factor(const UfdElement& e, std::uint64_t trial_bound = kDefaultTrialBound) {
    if (e.is_zero()) throw error("factor(0) is undefined");
    const RingDescriptor& R = e.ring;
    PrimeFactorization out;
    out.unit = UfdElement::one(R);

    auto push_int_factors = [&](const Int& c) {
        std::map<Int, unsigned> fs;
        detail::factor_int_into(c, fs, trial_bound);
        for (const auto& [q, m] : fs) out.factors.emplace_back(UfdElement::constant(R, q), m);
    };

    switch (R.kind) {
        case RingKind::Integers: {
            const Int& c = e.terms[0].second;
            if (c < 0) out.unit = UfdElement::constant(R, -1);
            push_int_factors(c);
            break;
        }
        case RingKind::PolyOverZ: {
            if (!e.is_term())
                throw unsupported_factorization_error("only terms c*x^a are factorable in Z[x]");
            const auto& [m, c] = e.terms[0];
            if (c < 0) out.unit = UfdElement::constant(R, -1);
            push_int_factors(c);
            if (m.dx > 0) out.factors.emplace_back(UfdElement::variable_x(R), m.dx);
            break;
        }
        case RingKind::BivariateOverFp: {
            if (!e.is_term())
                throw unsupported_factorization_error("only terms c*x^a*y^b are factorable in " + R.name());
            const auto& [m, c] = e.terms[0];
            out.unit = UfdElement::constant(R, c);
            if (m.dx > 0) out.factors.emplace_back(UfdElement::variable_x(R), m.dx);
            if (m.dy > 0) out.factors.emplace_back(UfdElement::variable_y(R), m.dy);
            break;
        }
        case RingKind::PolyOverFp: {
            UfdElement f = canonical_associate(e);
            out.unit = unit_of(e);
            if (f.is_one()) break;
            unsigned d = f.degree_x();
            if (e.is_term()) {
                out.factors.emplace_back(UfdElement::variable_x(R), d);
                break;
            }
            if (d > 8) throw unsupported_factorization_error("F_p[x] factorization limited to degree <= 8");
            auto irr = detail::monic_irreducibles(R, std::max(1u, d / 2));
            std::map<unsigned, unsigned> hits;  // index in irr -> multiplicity
            for (size_t i = 0; i < irr.size() && f.degree_x() > 0; ++i) {
                while (divides(irr[i], f)) {
                    ++hits[static_cast<unsigned>(i)];
                    f = divide_exact(f, irr[i]);
                }
            }
            for (const auto& [i, m] : hits) out.factors.emplace_back(irr[i], m);
            if (f.degree_x() > 0) out.factors.emplace_back(f, 1);  // leftover is irreducible
            break;
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return UfdElement::compare(a.first, b.first) < 0;
    });
    if (out.expand() != e) throw error("factorization self-check failed for " + to_string(e));
    return out;
}

// largest n with p^n | e, by repeated exact division
inline unsigned multiplicity(const UfdElement& p, const UfdElement& e) {
    if (e.is_zero()) throw error("multiplicity in zero");
    if (p.is_zero() || p.is_unit()) throw error("multiplicity of a non-prime");
    unsigned n = 0;
    UfdElement cur = e;
    while (true) {
        auto q = try_divide_exact(cur, p);
        if (!q) return n;
        cur = *q;
        ++n;
        if (n > 4096) throw error("multiplicity runaway");
    }
}

}  // namespace cenquot

#endif
