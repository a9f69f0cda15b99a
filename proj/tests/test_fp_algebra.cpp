#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringcover/errors.hpp"
#include "ringcover/integer.hpp"
#include "ringcover/poly_int.hpp"
#include "ringcover/poly_mod_p.hpp"

using namespace ringcover;

namespace {

const char* kExamplePoly = "x^6+x^5+x^4-x^3+x^2+x+6";

PolyModP pmp(long p, std::vector<long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return PolyModP(Int(p), std::move(c));
}

} // namespace

TEST_CASE("integer polynomial parsing and printing") {
    const PolyInt g = PolyInt::parse(kExamplePoly);
    CHECK(g.degree() == 6);
    CHECK(g.is_monic());
    CHECK(g.coeff(0) == 6);
    CHECK(g.coeff(3) == -1);
    CHECK(g.to_string() == kExamplePoly);
    CHECK(PolyInt::parse(g.to_coeff_string()) == g);

    CHECK(PolyInt::parse("x^2-5").coeff(0) == -5);
    CHECK(PolyInt::parse("x").degree() == 1);
    CHECK(PolyInt::parse("-3").coeff(0) == -3);
    CHECK(PolyInt::parse("2*x^2 + x") == PolyInt({Int(0), Int(1), Int(2)}));
    CHECK(PolyInt::parse("1,0,-5") == PolyInt::parse("x^2-5"));

    CHECK_THROWS_AS(PolyInt::parse("x^"), PolyParseError);
    CHECK_THROWS_AS(PolyInt::parse(""), PolyParseError);
    CHECK_THROWS_AS(PolyInt::parse("x^2++1"), PolyParseError);
    CHECK_THROWS_AS(PolyInt::parse("y^2"), PolyParseError);
}

TEST_CASE("integer polynomial arithmetic") {
    const PolyInt f = PolyInt::parse("x^2-5");
    const PolyInt d = f.derivative();
    CHECK(d == PolyInt::parse("2*x"));
    CHECK(f.evaluate(3) == 4);
    CHECK((f * f).degree() == 4);

    PolyInt q, r;
    PolyInt::divmod_monic(PolyInt::parse("x^3+1"), PolyInt::parse("x^2+1"), q, r);
    CHECK(q == PolyInt::parse("x"));
    CHECK(r == PolyInt::parse("-x+1"));

    CHECK(discriminant(PolyInt::parse("x^2-5")) == 20);
    CHECK(discriminant(PolyInt::parse("x^2+1")) == -4);
    CHECK(discriminant(PolyInt::parse("x^3-x^2-2*x-8")) == -2012); // -4 * 503
    CHECK(resultant(PolyInt::parse("x^2+1"), PolyInt::parse("x-2")) == 5);
}

TEST_CASE("fixed divisor of integer values") {
    CHECK(fixed_divisor(PolyInt::parse("x^2+x")) == 2);
    CHECK(fixed_divisor(PolyInt::parse("x")) == 1);
    CHECK(fixed_divisor(PolyInt::parse("x^3-x")) == 6);
    CHECK(fixed_divisor(PolyInt::parse(kExamplePoly)) == 2);
    CHECK(fixed_divisor(PolyInt::constant(6)) == 6);
    CHECK_THROWS_AS(fixed_divisor(PolyInt()), ZeroPolynomialError);
}

TEST_CASE("arithmetic in F_p[x]") {
    const PolyModP a = pmp(5, {1, 2, 3});
    const PolyModP b = pmp(5, {4, 1});
    CHECK((a + b).coeff(0) == 0);
    CHECK((a * b).degree() == 3);
    CHECK(a.mod(b).degree() < b.degree());
    CHECK(poly_gcd(a * b, b) == b.monic());

    const PolyModP m = pmp(2, {1, 1, 1}); // x^2+x+1
    const PolyModP x = PolyModP::x(2);
    CHECK(poly_pow_mod(x, Int(4), m) == x); // Frobenius squared fixes F_4
    CHECK(m.is_irreducible());
    CHECK_FALSE(pmp(2, {1, 0, 1}).is_irreducible()); // x^2+1 = (x+1)^2 mod 2
    CHECK(pmp(3, {1, 0, 1}).is_irreducible());
    CHECK_FALSE(pmp(5, {1, 0, 1}).is_irreducible());
}

TEST_CASE("factorization mod p of the running example") {
    const PolyInt g = PolyInt::parse(kExamplePoly);

    const FactorizationModP f2 = factor_mod_p(g, 2);
    REQUIRE(f2.factors.size() == 3);
    CHECK(f2.factors[0].first == pmp(2, {0, 1})); // x
    CHECK(f2.factors[0].second == 1);
    CHECK(f2.factors[1].first == pmp(2, {1, 1})); // x+1
    CHECK(f2.factors[1].second == 1);
    CHECK(f2.factors[2].first == pmp(2, {1, 1, 1})); // x^2+x+1
    CHECK(f2.factors[2].second == 2);
    CHECK(f2.expand() == PolyModP::from_int_poly(g, 2));

    const FactorizationModP f5 = factor_mod_p(g, 5);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == pmp(5, {4, 1})); // x - 1
    CHECK(f5.factors[0].second == 2);
    CHECK(f5.factors[1].first.degree() == 4);
    CHECK(f5.factors[1].second == 1);
    CHECK(f5.expand() == PolyModP::from_int_poly(g, 5));
}

TEST_CASE("factorization round-trips on random inputs") {
    std::mt19937 rng(11);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 120; ++trial) {
        const long p = primes[trial % 6];
        const int deg = 1 + static_cast<int>(rng() % 6);
        std::vector<Int> c(deg + 1);
        for (Int& v : c) v = static_cast<long>(rng() % p);
        c[deg] = 1;
        const PolyModP f(Int(p), std::move(c));
        const FactorizationModP fac = factor_mod_p(f);
        CHECK(fac.expand() == f);
        for (size_t i = 0; i < fac.factors.size(); ++i) {
            CHECK(fac.factors[i].first.is_irreducible());
            CHECK(fac.factors[i].first.leading() == 1);
            if (i + 1 < fac.factors.size())
                CHECK(poly_order_less(fac.factors[i].first, fac.factors[i + 1].first));
        }
    }
}

TEST_CASE("factorization error cases") {
    CHECK_THROWS_AS(factor_mod_p(PolyInt::parse("x^2+1"), 4), CompositeModulusError);
    CHECK_THROWS_AS(factor_mod_p(PolyInt::parse("2*x^2+2"), 2), ZeroPolynomialError);
}

TEST_CASE("counting monic irreducible polynomials") {
    CHECK(count_monic_irreducible(2, 1) == 2);
    CHECK(count_monic_irreducible(2, 2) == 1);
    CHECK(count_monic_irreducible(2, 3) == 2);
    CHECK(count_monic_irreducible(2, 4) == 3);
    CHECK(count_monic_irreducible(3, 2) == 3);
    CHECK(count_monic_irreducible(3, 3) == 8);
    CHECK(count_monic_irreducible(5, 2) == 10);

    // sum over divisors of d * N_p(d) rebuilds p^f
    for (long p : {2L, 3L, 5L, 7L}) {
        for (unsigned f = 1; f <= 6; ++f) {
            Int total = 0;
            for (unsigned d = 1; d <= f; ++d)
                if (f % d == 0) total += Int(d) * count_monic_irreducible(p, d);
            CHECK(total == int_pow(Int(p), f));
        }
    }
}

TEST_CASE("covering thresholds") {
    CHECK(covering_threshold(2, 1) == 2);
    CHECK(covering_threshold(3, 1) == 3);
    CHECK(covering_threshold(5, 1) == 5);
    CHECK(covering_threshold(2, 2) == 2);
    CHECK(covering_threshold(2, 3) == 3);
    CHECK(covering_threshold(3, 2) == 4);
    CHECK(covering_threshold(5, 2) == 11);
}

TEST_CASE("maximal subring count of a finite field") {
    CHECK(count_maximal_subrings_of_field(1) == 1); // the zero subring
    CHECK(count_maximal_subrings_of_field(2) == 1);
    CHECK(count_maximal_subrings_of_field(4) == 1); // only F_{p^2}
    CHECK(count_maximal_subrings_of_field(6) == 2);
    CHECK(count_maximal_subrings_of_field(12) == 2);
    CHECK(count_maximal_subrings_of_field(30) == 3);
    CHECK(distinct_prime_factor_count(1) == 0);
    CHECK(distinct_prime_factor_count(12) == 2);
}

TEST_CASE("least irreducible polynomials are canonical") {
    CHECK(least_irreducible(2, 1) == pmp(2, {0, 1}));       // x
    CHECK(least_irreducible(2, 2) == pmp(2, {1, 1, 1}));    // x^2+x+1
    CHECK(least_irreducible(2, 3) == pmp(2, {1, 1, 0, 1})); // x^3+x+1
    CHECK(least_irreducible(3, 1) == pmp(3, {0, 1}));
    for (long p : {2L, 3L, 5L}) {
        for (unsigned f = 1; f <= 4; ++f) {
            const PolyModP m = least_irreducible(p, f);
            CHECK(m.degree() == static_cast<int>(f));
            CHECK(m.is_irreducible());
            CHECK(m.leading() == 1);
        }
    }
}

TEST_CASE("integer utilities") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(13)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(91)));
    CHECK(int_pow(Int(3), 4) == 81);
    CHECK(p_valuation(Int(48), Int(2)) == 4);
    CHECK(p_valuation(Int(-20), Int(5)) == 1);
    CHECK(mod_floor(Int(-3), Int(5)) == 2);
    CHECK(mod_inverse(Int(3), Int(7)) == 5);
    CHECK(primes_upto(13) == std::vector<long>({2, 3, 5, 7, 11, 13}));
    CHECK(distinct_prime_divisors(12) == std::vector<long>({2, 3}));
    CHECK(distinct_prime_divisors(1).empty());
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(11, 0) == 1);
}

TEST_CASE("deterministic rng is reproducible") {
    DetRng a, b;
    for (int i = 0; i < 10; ++i) CHECK(a.below(Int(1000)) == b.below(Int(1000)));
    DetRng c;
    const Int v = c.below(Int(5));
    CHECK(v >= 0);
    CHECK(v < 5);
}
