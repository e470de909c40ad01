#ifndef CENQUOT_BASICS_HPP
#define CENQUOT_BASICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cenquot {

using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ring_mismatch_error : error {
    using error::error;
};
struct parse_error : error {
    parse_error(const std::string& what, std::size_t column)
        : error(what + " (column " + std::to_string(column + 1) + ")"), column(column) {}
    std::size_t column;
};
struct exact_division_error : error {
    using error::error;
};
struct unsupported_ideal_error : error {
    using error::error;
};
struct unsupported_factorization_error : error {
    using error::error;
};
struct guard_exceeded_error : error {
    using error::error;
};
struct undecidable_error : error {
    using error::error;
};

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? Int(-l) : l;
}

// g = gcd(a,b) with x*a + y*b = g, g >= 0.
inline Int int_egcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = t;
        t = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

// Nonnegative remainder of a mod m, m > 0.
inline Int int_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::optional<Int> int_inverse_mod(const Int& a, const Int& m) {
    Int x, y;
    Int g = int_egcd(a, m, x, y);
    if (g != 1) return std::nullopt;
    return int_mod(x, m);
}

inline Int int_pow(Int base, unsigned e) {
    Int out = 1;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

inline Int pow_mod(Int base, Int e, const Int& m) {
    Int out = 1;
    base = int_mod(base, m);
    while (e > 0) {
        if ((e & 1) != 0) out = out * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return out;
}

// Miller-Rabin, deterministic for anything reachable at this project's scale
// and probabilistically safe far beyond it.
inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent-style rho; n must be odd composite, > 1.
inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1; c < 64; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = int_gcd(x - y, n);
        }
        if (d != n) return d;
    }
    throw unsupported_factorization_error("rho failed to split " + n.str());
}

inline bool is_prime_u64(std::uint64_t n) { return is_probable_prime(Int(n)); }

}  // namespace cenquot

#endif
