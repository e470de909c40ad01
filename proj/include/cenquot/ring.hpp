#ifndef CENQUOT_RING_HPP
#define CENQUOT_RING_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cenquot/basics.hpp"

namespace cenquot {

enum class RingKind {
    Integers,           // Z
    PolyOverFp,         // F_p[x]
    PolyOverZ,          // Z[x]
    BivariateOverFp,    // F_p[x,y]
};

inline bool is_pid(RingKind k) { return k == RingKind::Integers || k == RingKind::PolyOverFp; }

struct RingDescriptor {
    RingKind kind = RingKind::Integers;
    unsigned p = 0;  // prime characteristic for the F_p kinds, 0 otherwise

    bool operator==(const RingDescriptor&) const = default;

    bool mod_p() const { return kind == RingKind::PolyOverFp || kind == RingKind::BivariateOverFp; }
    bool bivariate() const { return kind == RingKind::BivariateOverFp; }

    std::string name() const {
        switch (kind) {
            case RingKind::Integers: return "Z";
            case RingKind::PolyOverFp: return "F" + std::to_string(p) + "[x]";
            case RingKind::PolyOverZ: return "Z[x]";
            case RingKind::BivariateOverFp: return "F" + std::to_string(p) + "[x,y]";
        }
        return "?";
    }
};

inline bool small_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline RingDescriptor ring_integers() { return {RingKind::Integers, 0}; }
inline RingDescriptor ring_poly_z() { return {RingKind::PolyOverZ, 0}; }
inline RingDescriptor ring_poly_fp(unsigned p) {
    if (!small_prime(p)) throw error("characteristic " + std::to_string(p) + " is not prime");
    return {RingKind::PolyOverFp, p};
}
inline RingDescriptor ring_bivariate_fp(unsigned p) {
    if (!small_prime(p)) throw error("characteristic " + std::to_string(p) + " is not prime");
    return {RingKind::BivariateOverFp, p};
}

// Exponent vector.  Univariate kinds only ever use dx.
struct Mono {
    unsigned dx = 0, dy = 0;

    unsigned total() const { return dx + dy; }
    bool divides(const Mono& m) const { return dx <= m.dx && dy <= m.dy; }
    Mono operator*(const Mono& m) const { return {dx + m.dx, dy + m.dy}; }
    Mono operator/(const Mono& m) const {
        assert(m.divides(*this));
        return {dx - m.dx, dy - m.dy};
    }
    static Mono gcd(const Mono& a, const Mono& b) { return {std::min(a.dx, b.dx), std::min(a.dy, b.dy)}; }
    static Mono lcm(const Mono& a, const Mono& b) { return {std::max(a.dx, b.dx), std::max(a.dy, b.dy)}; }

    bool operator==(const Mono&) const = default;
    // graded lexicographic with x > y
    std::strong_ordering operator<=>(const Mono& m) const {
        if (auto c = total() <=> m.total(); c != 0) return c;
        return dx <=> m.dx;
    }
};

// Sparse exact element of one of the four supported UFDs.  Terms are kept
// sorted ascending in grlex order with no zero coefficients; coefficients
// of the F_p kinds live in [0, p).
class UfdElement {
  public:
    RingDescriptor ring;
    std::vector<std::pair<Mono, Int>> terms;

    UfdElement() = default;
    explicit UfdElement(RingDescriptor r) : ring(r) {}

    static UfdElement zero(const RingDescriptor& r) { return UfdElement(r); }
    static UfdElement constant(const RingDescriptor& r, Int c) {
        UfdElement e(r);
        e.add_term({0, 0}, std::move(c));
        return e;
    }
    static UfdElement one(const RingDescriptor& r) { return constant(r, 1); }
    static UfdElement term(const RingDescriptor& r, Int c, Mono m) {
        UfdElement e(r);
        e.add_term(m, std::move(c));
        return e;
    }
    static UfdElement variable_x(const RingDescriptor& r) { return term(r, 1, {1, 0}); }
    static UfdElement variable_y(const RingDescriptor& r) { return term(r, 1, {0, 1}); }

    bool is_zero() const { return terms.empty(); }
    bool is_term() const { return terms.size() <= 1; }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first == Mono{0, 0}); }
    bool is_one() const { return terms.size() == 1 && terms[0].first == Mono{0, 0} && terms[0].second == 1; }

    // units: Z, Z[x]: +-1; F_p kinds: nonzero constants
    bool is_unit() const {
        if (!is_constant() || is_zero()) return false;
        if (ring.mod_p()) return true;
        const Int& c = terms[0].second;
        return c == 1 || c == -1;
    }

    const Mono& leading_mono() const {
        if (is_zero()) throw error("leading term of zero");
        return terms.back().first;
    }
    const Int& leading_coeff() const {
        if (is_zero()) throw error("leading term of zero");
        return terms.back().second;
    }
    unsigned degree_x() const { return is_zero() ? 0 : max_of([](const Mono& m) { return m.dx; }); }
    unsigned degree_y() const { return is_zero() ? 0 : max_of([](const Mono& m) { return m.dy; }); }
    unsigned total_degree() const { return is_zero() ? 0 : terms.back().first.total(); }

    Int coeff(const Mono& m) const {
        auto it = std::lower_bound(terms.begin(), terms.end(), m,
                                   [](const auto& t, const Mono& k) { return t.first < k; });
        if (it != terms.end() && it->first == m) return it->second;
        return 0;
    }
    Int coeff_x(unsigned d) const { return coeff({d, 0}); }

    void add_term(const Mono& m, Int c) {
        if (ring.mod_p()) c = int_mod(c, Int(ring.p));
        if (c == 0) return;
        auto it = std::lower_bound(terms.begin(), terms.end(), m,
                                   [](const auto& t, const Mono& k) { return t.first < k; });
        if (it != terms.end() && it->first == m) {
            it->second += c;
            if (ring.mod_p()) it->second = int_mod(it->second, Int(ring.p));
            if (it->second == 0) terms.erase(it);
        } else {
            terms.insert(it, {m, std::move(c)});
        }
    }

    bool operator==(const UfdElement& o) const { return ring == o.ring && terms == o.terms; }
    bool operator!=(const UfdElement& o) const { return !(*this == o); }

    // total order used for deterministic sorting of factor lists etc.
    static int compare(const UfdElement& a, const UfdElement& b) {
        size_t n = std::min(a.terms.size(), b.terms.size());
        for (size_t i = 0; i < n; ++i) {
            size_t ia = a.terms.size() - 1 - i, ib = b.terms.size() - 1 - i;
            if (a.terms[ia].first != b.terms[ib].first)
                return a.terms[ia].first < b.terms[ib].first ? -1 : 1;
            if (a.terms[ia].second != b.terms[ib].second)
                return a.terms[ia].second < b.terms[ib].second ? -1 : 1;
        }
        if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
        return 0;
    }

  private:
    template <class F>
    unsigned max_of(F f) const {
        unsigned m = 0;
        for (const auto& t : terms) m = std::max(m, f(t.first));
        return m;
    }
};

inline void require_same_ring(const UfdElement& a, const UfdElement& b) {
    if (!(a.ring == b.ring))
        throw ring_mismatch_error("ring mismatch: " + a.ring.name() + " vs " + b.ring.name());
}

inline UfdElement operator+(const UfdElement& a, const UfdElement& b) {
    require_same_ring(a, b);
    UfdElement out = a;
    for (const auto& t : b.terms) out.add_term(t.first, t.second);
    return out;
}

inline UfdElement operator-(const UfdElement& a) {
    UfdElement out(a.ring);
    for (const auto& t : a.terms) out.add_term(t.first, -t.second);
    return out;
}

inline UfdElement operator-(const UfdElement& a, const UfdElement& b) {
    require_same_ring(a, b);
    UfdElement out = a;
    for (const auto& t : b.terms) out.add_term(t.first, -t.second);
    return out;
}

inline UfdElement operator*(const UfdElement& a, const UfdElement& b) {
    require_same_ring(a, b);
    UfdElement out(a.ring);
    if (a.is_zero() || b.is_zero()) return out;
    std::map<Mono, Int> acc;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) acc[ta.first * tb.first] += ta.second * tb.second;
    const Int p = a.ring.mod_p() ? Int(a.ring.p) : Int(0);
    out.terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        Int v = p != 0 ? int_mod(c, p) : c;
        if (v != 0) out.terms.emplace_back(m, std::move(v));
    }
    return out;
}

inline UfdElement operator*(const UfdElement& a, const Int& c) {
    UfdElement out(a.ring);
    for (const auto& t : a.terms) out.add_term(t.first, t.second * c);
    return out;
}

inline UfdElement pow(const UfdElement& a, unsigned e) {
    UfdElement out = UfdElement::one(a.ring);
    UfdElement base = a;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

// q with q*b == a, if it exists.  Leading-term elimination; exactness of every
// coefficient step is what certifies divisibility.
inline std::optional<UfdElement> try_divide_exact(const UfdElement& a, const UfdElement& b) {
    require_same_ring(a, b);
    if (b.is_zero()) return std::nullopt;
    UfdElement rem = a;
    UfdElement q(a.ring);
    const bool modp = a.ring.mod_p();
    const Int p = modp ? Int(a.ring.p) : Int(0);
    while (!rem.is_zero()) {
        const Mono& lm = rem.leading_mono();
        const Mono& bm = b.leading_mono();
        if (!bm.divides(lm)) return std::nullopt;
        Int c;
        if (modp) {
            auto inv = int_inverse_mod(b.leading_coeff(), p);
            c = int_mod(rem.leading_coeff() * *inv, p);
        } else {
            if (rem.leading_coeff() % b.leading_coeff() != 0) return std::nullopt;
            c = rem.leading_coeff() / b.leading_coeff();
        }
        UfdElement piece = UfdElement::term(a.ring, c, lm / bm);
        q = q + piece;
        rem = rem - piece * b;
    }
    return q;
}

inline UfdElement divide_exact(const UfdElement& a, const UfdElement& b) {
    auto q = try_divide_exact(a, b);
    if (!q)
        throw exact_division_error("exact division failed in " + a.ring.name());
    return *q;
}

inline bool divides(const UfdElement& d, const UfdElement& a) {
    if (d.is_zero()) return a.is_zero();
    return try_divide_exact(a, d).has_value();
}

// ---- canonical associates ------------------------------------------------
// Z: nonnegative.  F_p kinds: grlex-leading coefficient 1.  Z[x]: positive
// leading coefficient.

inline UfdElement canonical_associate(const UfdElement& e) {
    if (e.is_zero()) return e;
    if (e.ring.mod_p()) {
        Int lc = e.leading_coeff();
        if (lc == 1) return e;
        auto inv = int_inverse_mod(lc, Int(e.ring.p));
        UfdElement out(e.ring);
        for (const auto& t : e.terms) out.add_term(t.first, t.second * *inv);
        return out;
    }
    if (e.leading_coeff() < 0) return -e;
    return e;
}

// unit u with canonical_associate(e) * u == e
inline UfdElement unit_of(const UfdElement& e) {
    if (e.is_zero()) return UfdElement::one(e.ring);
    if (e.ring.mod_p()) return UfdElement::constant(e.ring, e.leading_coeff());
    return UfdElement::constant(e.ring, e.leading_coeff() < 0 ? -1 : 1);
}

inline UfdElement unit_inverse(const UfdElement& u) {
    if (!u.is_unit()) throw error("unit_inverse of nonunit");
    if (u.ring.mod_p()) {
        auto inv = int_inverse_mod(u.terms[0].second, Int(u.ring.p));
        return UfdElement::constant(u.ring, *inv);
    }
    return u;  // +-1 are self-inverse
}

// ---- univariate view in x (coefficients in the y-only / constant subring) --

inline unsigned degree_in_x(const UfdElement& e) { return e.degree_x(); }

inline UfdElement coeff_of_x(const UfdElement& e, unsigned d) {
    UfdElement out(e.ring);
    for (const auto& t : e.terms)
        if (t.first.dx == d) out.add_term({0, t.first.dy}, t.second);
    return out;
}

inline UfdElement times_x_power(const UfdElement& e, unsigned d) {
    UfdElement out(e.ring);
    for (const auto& t : e.terms) out.add_term({t.first.dx + d, t.first.dy}, t.second);
    return out;
}

inline UfdElement lead_coeff_x(const UfdElement& e) { return coeff_of_x(e, degree_in_x(e)); }

// gcd in the coefficient subring: integers for Z[x], univariate F_p[y]
// polynomials (as dx == 0 elements) for F_p[x,y].
UfdElement gcd(const UfdElement& a, const UfdElement& b);

inline UfdElement coeff_content_x(const UfdElement& e) {
    UfdElement g(e.ring);
    for (unsigned d = 0; d <= degree_in_x(e); ++d) {
        UfdElement c = coeff_of_x(e, d);
        if (!c.is_zero()) g = g.is_zero() ? canonical_associate(c) : gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// pseudo-remainder of a by b in the main variable x: lc(b)^(da-db+1) * a mod b
inline UfdElement pseudo_rem_x(UfdElement a, const UfdElement& b) {
    unsigned db = degree_in_x(b);
    UfdElement lb = lead_coeff_x(b);
    while (!a.is_zero() && degree_in_x(a) >= db) {
        unsigned da = degree_in_x(a);
        UfdElement la = lead_coeff_x(a);
        a = a * lb - times_x_power(la, da - db) * b;
        if (!a.is_zero() && degree_in_x(a) == da) throw error("pseudo_rem_x failed to reduce degree");
    }
    return a;
}

namespace detail {

// univariate Euclid over F_p; exponent accessors abstract whether the
// variable is x or y
template <class Deg, class Make>
UfdElement fp_euclid(UfdElement a, UfdElement b, Deg deg, Make make_term) {
    const Int p(a.ring.p);
    while (!b.is_zero()) {
        UfdElement r = a;
        unsigned db = deg(b);
        Int inv = *int_inverse_mod(b.leading_coeff(), p);
        while (!r.is_zero() && deg(r) >= db) {
            Int c = int_mod(r.leading_coeff() * inv, p);
            r = r - make_term(c, deg(r) - db) * b;
        }
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

// subresultant PRS on primitive parts; both inputs nonzero with positive
// x-degree somewhere between them, main variable x
inline UfdElement prs_gcd_x(UfdElement a, UfdElement b) {
    if (degree_in_x(a) < degree_in_x(b)) std::swap(a, b);
    UfdElement ca = coeff_content_x(a), cb = coeff_content_x(b);
    UfdElement cont = gcd(ca, cb);
    a = divide_exact(a, ca);
    b = divide_exact(b, cb);
    UfdElement g = UfdElement::one(a.ring);
    UfdElement h = UfdElement::one(a.ring);
    while (degree_in_x(b) > 0) {
        unsigned delta = degree_in_x(a) - degree_in_x(b);
        UfdElement r = pseudo_rem_x(a, b);
        if (r.is_zero()) {
            UfdElement pp = divide_exact(b, coeff_content_x(b));
            return cont * pp;
        }
        if (degree_in_x(r) == 0) return cont;  // primitive parts are coprime
        UfdElement divisor = g * pow(h, delta);
        a = b;
        auto reduced = try_divide_exact(r, divisor);
        b = reduced ? *reduced : divide_exact(r, coeff_content_x(r));
        g = lead_coeff_x(a);
        if (delta >= 1) {
            UfdElement num = pow(g, delta);
            auto hn = delta == 1 ? num : try_divide_exact(num, pow(h, delta - 1));
            h = hn ? *hn : UfdElement::one(a.ring);
        }
    }
    // b constant in x: a was reduced to a coefficient-ring element, so the
    // primitive parts share no x-dependent factor
    return cont;
}

}  // namespace detail

inline UfdElement gcd(const UfdElement& a, const UfdElement& b) {
    require_same_ring(a, b);
    if (a.is_zero()) return canonical_associate(b);
    if (b.is_zero()) return canonical_associate(a);
    const RingDescriptor& R = a.ring;
    switch (R.kind) {
        case RingKind::Integers:
            return UfdElement::constant(R, int_gcd(a.terms[0].second, b.terms[0].second));
        case RingKind::PolyOverFp:
            return detail::fp_euclid(
                a, b, [](const UfdElement& e) { return e.degree_x(); },
                [&R](Int c, unsigned d) { return UfdElement::term(R, std::move(c), {d, 0}); });
        case RingKind::PolyOverZ:
        case RingKind::BivariateOverFp: {
            // operands inside the coefficient subring reduce there directly
            if (a.degree_x() == 0 && b.degree_x() == 0) {
                if (R.kind == RingKind::PolyOverZ)
                    return UfdElement::constant(R, int_gcd(a.terms[0].second, b.terms[0].second));
                return detail::fp_euclid(
                    a, b, [](const UfdElement& e) { return e.degree_y(); },
                    [&R](Int c, unsigned d) { return UfdElement::term(R, std::move(c), {0, d}); });
            }
            return canonical_associate(detail::prs_gcd_x(a, b));
        }
    }
    throw error("unreachable");
}

inline UfdElement gcd_many(const std::vector<UfdElement>& elems) {
    if (elems.empty()) throw error("gcd_many of empty list");
    UfdElement g = UfdElement::zero(elems[0].ring);
    for (const auto& e : elems) {
        require_same_ring(elems[0], e);
        g = g.is_zero() ? canonical_associate(e) : gcd(g, e);
        if (g.is_one()) break;
    }
    return g;
}

// ---- collapse maps into PID images (used for sound refutations) -----------

// Ring homomorphism that kills a subset of the variables; the target is Z,
// F_p[x] (possibly after renaming y to the only surviving variable), or the
// constants of F_p[x].
struct Collapse {
    RingDescriptor source, target;
    bool kill_x = false, kill_y = false;
    std::string label;

    UfdElement apply(const UfdElement& e) const {
        UfdElement out(target);
        for (const auto& t : e.terms) {
            if (kill_x && t.first.dx > 0) continue;
            if (kill_y && t.first.dy > 0) continue;
            Mono m = t.first;
            if (kill_x && !kill_y) m = {m.dy, 0};  // survivor y becomes the variable
            out.add_term({m.dx, 0}, t.second);
        }
        return out;
    }
};

inline std::vector<Collapse> collapses_for(const RingDescriptor& r) {
    std::vector<Collapse> out;
    switch (r.kind) {
        case RingKind::Integers:
        case RingKind::PolyOverFp:
            break;  // PIDs decide directly
        case RingKind::PolyOverZ:
            out.push_back({r, ring_integers(), true, false, "x->0"});
            break;
        case RingKind::BivariateOverFp:
            out.push_back({r, ring_poly_fp(r.p), false, true, "y->0"});
            out.push_back({r, ring_poly_fp(r.p), true, false, "x->0"});
            out.push_back({r, ring_poly_fp(r.p), true, true, "x,y->0"});
            break;
    }
    return out;
}

// ---- printing --------------------------------------------------------------

inline std::string to_string(const UfdElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
        Int c = it->second;
        const Mono& m = it->first;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        first = false;
        bool has_var = m.dx > 0 || m.dy > 0;
        if (c != 1 || !has_var) os << c.str();
        if (m.dx > 0) {
            os << 'x';
            if (m.dx > 1) os << '^' << m.dx;
        }
        if (m.dy > 0) {
            os << 'y';
            if (m.dy > 1) os << '^' << m.dy;
        }
    }
    return os.str();
}

}  // namespace cenquot

#endif
