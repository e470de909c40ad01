#include <catch_amalgamated.hpp>

#include <random>

#include "cenquot/factor.hpp"
#include "cenquot/parse.hpp"

using namespace cenquot;

namespace {
const RingDescriptor Z = ring_integers();
const RingDescriptor Zx = ring_poly_z();
const RingDescriptor F5x = ring_poly_fp(5);
const RingDescriptor F2xy = ring_bivariate_fp(2);

UfdElement el(const char* s, const RingDescriptor& r) { return parse_element(s, r); }

UfdElement random_element(std::mt19937_64& rng, const RingDescriptor& R, unsigned max_deg, int box) {
    std::uniform_int_distribution<int> coeff(-box, box);
    std::uniform_int_distribution<unsigned> pick(0, 2);
    UfdElement e(R);
    switch (R.kind) {
        case RingKind::Integers:
            e.add_term({0, 0}, coeff(rng));
            break;
        case RingKind::PolyOverFp:
        case RingKind::PolyOverZ:
            for (unsigned d = 0; d <= max_deg; ++d)
                if (pick(rng) == 0) e.add_term({d, 0}, coeff(rng));
            break;
        case RingKind::BivariateOverFp:
            for (unsigned dx = 0; dx <= max_deg; ++dx)
                for (unsigned dy = 0; dx + dy <= max_deg; ++dy)
                    if (pick(rng) == 0) e.add_term({dx, dy}, coeff(rng));
            break;
    }
    return e;
}
}  // namespace

TEST_CASE("polynomial grammar") {
    CHECK(to_string(el("24x^5+8x^4+4x^2", Zx)) == "24x^5+8x^4+4x^2");
    CHECK(to_string(el("40x^3", Zx)) == "40x^3");
    CHECK(to_string(el("-7", Zx)) == "-7");
    CHECK(to_string(el(" 2*x ^ 2 - x + 1 ", Zx)) == "2x^2-x+1");
    CHECK(el("x^2+x^2", Zx) == el("2x^2", Zx));
    CHECK(el("3x - 3x", Zx).is_zero());
    CHECK(to_string(el("x^2y^3+xy", F2xy)) == "x^2y^3+xy");

    CHECK_THROWS_AS(el("", Zx), parse_error);
    CHECK_THROWS_AS(el("4 +", Zx), parse_error);
    CHECK_THROWS_AS(el("y", Zx), parse_error);
    CHECK_THROWS_AS(el("x", Z), parse_error);
    CHECK_THROWS_AS(el("2^", Zx), parse_error);
    try {
        el("5x^2 + @", Zx);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.column == 7);
    }
}

TEST_CASE("gcd_many on the worked instances") {
    CHECK(gcd_many({el("6", Z), el("3", Z), el("6", Z)}) == el("3", Z));
    CHECK(gcd_many({el("40x^3", Zx), el("16x^4", Zx)}) == el("8x^3", Zx));
    CHECK(gcd_many({UfdElement::zero(Zx), el("-4x", Zx)}) == el("4x", Zx));
    CHECK(gcd_many({UfdElement::zero(Z), UfdElement::zero(Z)}).is_zero());
    CHECK_THROWS_AS(gcd(el("3", Z), el("x", Zx)), ring_mismatch_error);
}

TEST_CASE("gcd beyond terms uses content and primitive parts") {
    // (x+1)(2x+3) and 5(x+1)
    CHECK(gcd(el("2x^2+5x+3", Zx), el("5x+5", Zx)) == el("x+1", Zx));
    CHECK(gcd(el("7x^2", Zx), el("14x", Zx)) == el("7x", Zx));
    CHECK(gcd(el("7x^2", Zx), el("24x^5+8x^4+4x^2", Zx)) == el("x^2", Zx));
    // the worked centralizer scaling gcd
    CHECK(gcd_many({el("7x^2", Zx), el("24x^5+8x^4+4x^2", Zx), el("14x", Zx)}) == el("x", Zx));
    // bivariate over F2
    CHECK(gcd(el("x^2+xy", F2xy), el("xy+y^2", F2xy)) == el("x+y", F2xy));
    CHECK(gcd_many({el("y", F2xy), el("y", F2xy), el("x", F2xy)}).is_one());
    // univariate over F5 is monic Euclid
    CHECK(gcd(el("x^2+4", F5x), el("x+2", F5x)) == el("x+2", F5x));
    CHECK(gcd(el("2x^2+3", F5x), el("3", F5x)).is_one());
}

TEST_CASE("gcd properties on random samples") {
    std::mt19937_64 rng(0x5eed0001);
    for (const auto& R : {Z, Zx, F5x, F2xy}) {
        int done = 0;
        while (done < 60) {
            UfdElement a = random_element(rng, R, 3, 9);
            UfdElement b = random_element(rng, R, 3, 9);
            if (a.is_zero() || b.is_zero()) continue;
            ++done;
            UfdElement g = gcd(a, b);
            REQUIRE_FALSE(g.is_zero());
            CHECK(divides(g, a));
            CHECK(divides(g, b));
            // a*b / g is a common multiple of both
            UfdElement l = divide_exact(a * b, g);
            CHECK(divides(a, l));
            CHECK(divides(b, l));
            CHECK(canonical_associate(canonical_associate(a)) == canonical_associate(a));
        }
    }
}

TEST_CASE("exact division") {
    CHECK(divide_exact(el("40x^3", Zx), el("8x^3", Zx)) == el("5", Zx));
    CHECK(divide_exact(el("24x^5+8x^4+4x^2", Zx), el("4x^2", Zx)) == el("6x^3+2x^2+1", Zx));
    CHECK_THROWS_AS(divide_exact(el("3", Z), el("2", Z)), exact_division_error);
    CHECK_THROWS_AS(divide_exact(el("x^2+1", Zx), el("x+1", Zx)), exact_division_error);
    CHECK(divide_exact(el("x^2+y^2", F2xy), el("x+y", F2xy)) == el("x+y", F2xy));
}

TEST_CASE("factor on the pinned instances") {
    PrimeFactorization f12 = factor(el("12", Z));
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.unit.is_one());
    CHECK(f12.factors[0].first == el("2", Z));
    CHECK(f12.factors[0].second == 2);
    CHECK(f12.factors[1].first == el("3", Z));
    CHECK(f12.factors[1].second == 1);

    PrimeFactorization f8x3 = factor(el("8x^3", Zx));
    REQUIRE(f8x3.factors.size() == 2);
    CHECK(f8x3.factors[0].first == el("2", Zx));
    CHECK(f8x3.factors[0].second == 3);
    CHECK(f8x3.factors[1].first == el("x", Zx));
    CHECK(f8x3.factors[1].second == 3);

    PrimeFactorization f1 = factor(el("1", Z));
    CHECK(f1.unit.is_one());
    CHECK(f1.factors.empty());

    CHECK_THROWS_AS(factor(el("x^2+1", Zx)), unsupported_factorization_error);
    CHECK_THROWS_AS(factor(UfdElement::zero(Z)), error);
}

TEST_CASE("factor round-trips on random inputs") {
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_int_distribution<int> small_n(2, 4000);
    for (int i = 0; i < 200; ++i) {
        Int n = small_n(rng);
        if (rng() & 1) n = -n;
        PrimeFactorization f = factor(UfdElement::constant(Z, n));
        CHECK(f.expand() == UfdElement::constant(Z, n));
        for (const auto& [p, m] : f.factors) {
            CHECK(m >= 1);
            CHECK(is_probable_prime(p.terms[0].second));
        }
    }
    // rho fallback past the trial bound
    Int big = Int(1000003) * 1000033;
    PrimeFactorization f = factor(UfdElement::constant(Z, big));
    CHECK(f.expand() == UfdElement::constant(Z, big));
    CHECK(f.factors.size() == 2);
    // F5[x] by exhaustive irreducibles
    UfdElement poly = el("x^2+4x+4", F5x) * el("2", F5x);  // 2 (x+2)^2
    PrimeFactorization fp = factor(poly);
    CHECK(fp.expand() == poly);
    REQUIRE(fp.factors.size() == 1);
    CHECK(fp.factors[0].first == el("x+2", F5x));
    CHECK(fp.factors[0].second == 2);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(el("2", Z), el("24", Z)) == 3);
    CHECK(multiplicity(el("3", Z), el("8", Z)) == 0);
    UfdElement f = el("24x^5+8x^4+4x^2", Zx);
    // independent oracle: the x-multiplicity is the least exponent present
    unsigned trailing = 99;
    for (const auto& [m, c] : f.terms) trailing = std::min(trailing, m.dx);
    CHECK(trailing == 2);
    CHECK(multiplicity(el("x", Zx), f) == trailing);

    std::mt19937_64 rng(0x5eed0003);
    std::uniform_int_distribution<unsigned> exp(0, 8);
    for (int i = 0; i < 100; ++i) {
        unsigned n = exp(rng);
        UfdElement r = random_element(rng, Zx, 2, 7);
        if (r.is_zero() || divides(el("x", Zx), r)) continue;
        CHECK(multiplicity(el("x", Zx), pow(el("x", Zx), n) * r) == n);
    }
}

TEST_CASE("canonical associates per ring") {
    CHECK(canonical_associate(el("-6", Z)) == el("6", Z));
    CHECK(canonical_associate(el("-3x^2+x", Zx)) == el("3x^2-x", Zx));
    CHECK(canonical_associate(el("3x+1", F5x)) == el("x+2", F5x));  // 3^-1 = 2 mod 5
    CHECK(unit_of(el("-6", Z)) == el("-1", Z));
    CHECK(canonical_associate(el("x", F2xy)) == el("x", F2xy));
}
