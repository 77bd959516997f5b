#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace fpsocle;
using testutil::random_monomial;

TEST_CASE("prime field arithmetic") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 31u}) {
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
                REQUIRE(fp_add(a, b, p) == (a + b) % p);
                REQUIRE(fp_sub(fp_add(a, b, p), b, p) == a);
                REQUIRE(fp_mul(a, b, p) == (a * b) % p);
            }
            if (a) {
                REQUIRE(fp_mul(a, fp_inv(a, p), p) == 1);
                REQUIRE(fp_pow(a, p - 1, p) == 1);  // Fermat
            }
        }
    }
    // 64-bit intermediates near the 31-bit cap
    std::uint32_t p = 2147483647;  // 2^31 - 1, prime
    REQUIRE(is_prime(p));
    std::uint32_t big = p - 1;
    REQUIRE(fp_mul(big, big, p) == 1);  // (-1)^2
}

TEST_CASE("is_prime basics") {
    REQUIRE_FALSE(is_prime(0));
    REQUIRE_FALSE(is_prime(1));
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(3));
    REQUIRE_FALSE(is_prime(4));
    REQUIRE(is_prime(5));
    REQUIRE_FALSE(is_prime(91));  // 7 * 13
    REQUIRE(is_prime(97));
}

TEST_CASE("ring validation") {
    REQUIRE_THROWS_AS(make_ring(4, {{"x", 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_ring(2, {{"x", 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_ring(2, {{"x", 1}, {"x", 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_ring(2, {{"", 1}}), std::invalid_argument);
    RingPtr r = make_ring(5, {{"x", 1}, {"y", 2}});
    REQUIRE(r->nvars() == 2);
    REQUIRE(r->weight_sum() == 3);
}

TEST_CASE("monomial degree cache and operations") {
    RingPtr r = make_ring(2, {{"x", 1}, {"y", 2}});
    Monomial m = make_monomial(*r, {3, 2});
    REQUIRE(m.deg == 3 * 1 + 2 * 2);
    Monomial u = make_monomial(*r, {1, 1});
    Monomial prod = mono_mul(m, u);
    REQUIRE(prod.exps == std::vector<std::uint32_t>{4, 3});
    REQUIRE(prod.deg == m.deg + u.deg);
    REQUIRE(mono_divides(u, m));
    REQUIRE_FALSE(mono_divides(m, u));
    Monomial q = mono_div(m, u);
    REQUIRE(q.exps == std::vector<std::uint32_t>{2, 1});
    REQUIRE(q.deg == m.deg - u.deg);
    Monomial l = mono_lcm(*r, make_monomial(*r, {3, 0}), make_monomial(*r, {1, 2}));
    REQUIRE(l.exps == std::vector<std::uint32_t>{3, 2});
    REQUIRE(mono_coprime(make_monomial(*r, {2, 0}), make_monomial(*r, {0, 3})));
    REQUIRE_FALSE(mono_coprime(m, u));
    REQUIRE_THROWS_AS(mono_pow(m, 1ull << 33), std::overflow_error);
}

TEST_CASE("graded revlex agrees with known comparisons") {
    RingPtr r = testutil::ring_xy();
    auto m = [&](std::uint32_t a, std::uint32_t b) { return make_monomial(*r, {a, b}); };
    // degree first
    REQUIRE(mono_cmp(*r, m(2, 0), m(1, 0)) > 0);
    // revlex tie-break: x^2 > x*y > y^2
    REQUIRE(mono_cmp(*r, m(2, 0), m(1, 1)) > 0);
    REQUIRE(mono_cmp(*r, m(1, 1), m(0, 2)) > 0);
    REQUIRE(mono_cmp(*r, m(0, 0), m(0, 1)) < 0);  // 1 is minimal

    RingPtr w = make_ring(2, {{"x", 1}, {"y", 2}});
    // weighted degree dominates: |xy| = 3 > |x^2| = 2
    REQUIRE(mono_cmp(*w, make_monomial(*w, {1, 1}), make_monomial(*w, {2, 0})) > 0);
}

TEST_CASE("block elimination order puts the first block on top") {
    RingPtr r = make_ring(2, {{"t", 1}, {"x", 1}, {"y", 1}}, MonomialOrder{OrderKind::BlockElim, 1});
    auto m = [&](std::uint32_t t, std::uint32_t x, std::uint32_t y) {
        return make_monomial(*r, {t, x, y});
    };
    // any power of t beats any t-free monomial
    REQUIRE(mono_cmp(*r, m(1, 0, 0), m(0, 5, 5)) > 0);
    REQUIRE(mono_cmp(*r, m(2, 0, 0), m(1, 9, 9)) > 0);
    // t-free monomials compare by graded revlex on the tail
    REQUIRE(mono_cmp(*r, m(0, 2, 0), m(0, 1, 1)) > 0);
}

TEST_CASE("monomial order laws on random triples") {
    for (auto kind : {OrderKind::GradedRevlex, OrderKind::BlockElim}) {
        RingPtr r = make_ring(3, {{"x", 1}, {"y", 2}, {"z", 1}},
                              MonomialOrder{kind, kind == OrderKind::BlockElim ? 1u : 0u});
        Rng rng(2024);
        Monomial one = monomial_one(*r);
        for (int iter = 0; iter < 1000; ++iter) {
            Monomial a = random_monomial(rng, *r, 5);
            Monomial b = random_monomial(rng, *r, 5);
            Monomial c = random_monomial(rng, *r, 5);
            int ab = mono_cmp(*r, a, b);
            int ba = mono_cmp(*r, b, a);
            // totality + antisymmetry
            REQUIRE(ab == -ba);
            REQUIRE((ab == 0) == (a.exps == b.exps));
            // transitivity
            if (ab >= 0 && mono_cmp(*r, b, c) >= 0) REQUIRE(mono_cmp(*r, a, c) >= 0);
            // multiplicativity: a < b => a*c < b*c
            if (ab < 0) REQUIRE(mono_cmp(*r, mono_mul(a, c), mono_mul(b, c)) < 0);
            // 1 is the minimum
            if (!(a == one)) REQUIRE(mono_cmp(*r, a, one) > 0);
        }
    }
}
