#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace fpsocle;
using testutil::P;
using testutil::ideal_of;

namespace {

std::vector<std::string> gb_strings(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.elements) out.push_back(to_string(g));
    return out;
}

} // namespace

TEST_CASE("buchberger on worked examples") {
    RingPtr r = testutil::ring_xy(2);

    // monomial ideals are their own reduced basis
    GroebnerBasis g1 = buchberger({P("x", r), P("y", r)}, r);
    REQUIRE(gb_strings(g1) == std::vector<std::string>{"x", "y"});

    // both S-pairs reduce to zero: S(x^2+xy, y^2) = xy^3 -> 0 by y^2
    GroebnerBasis g2 = buchberger({P("x^2+x*y", r), P("y^2", r)}, r);
    REQUIRE(gb_strings(g2) == std::vector<std::string>{"x^2 + x*y", "y^2"});

    // row reduction
    GroebnerBasis g3 = buchberger({P("x", r), P("x+y", r)}, r);
    REQUIRE(gb_strings(g3) == std::vector<std::string>{"x", "y"});

    // empty input is the zero ideal
    REQUIRE(buchberger({}, r).elements.empty());

    // a unit collapses everything
    GroebnerBasis g4 = buchberger({P("x+1", r), P("x", r)}, r);
    REQUIRE(gb_strings(g4) == std::vector<std::string>{"1"});
    REQUIRE(g4.is_trivial_unit());
}

TEST_CASE("normal form examples") {
    RingPtr r = testutil::ring_xy(2);
    GroebnerBasis gb = buchberger({P("x^2+x*y", r), P("y^2", r)}, r);
    REQUIRE(to_string(normal_form(P("x^2", r), gb)) == "x*y");

    GroebnerBasis sq = buchberger({P("x^2", r), P("y^2", r)}, r);
    REQUIRE(normal_form(P("x^2*y", r), sq).is_zero());
    REQUIRE(to_string(normal_form(P("x+y", r), sq)) == "x + y");

    // f - NF(f) lies in the ideal
    Polynomial f = P("x^3 + x*y^2 + y", r);
    Polynomial nf = normal_form(f, sq);
    Ideal I(r, {P("x^2", r), P("y^2", r)});
    REQUIRE(ideal_member(f - nf, I));
}

TEST_CASE("membership examples") {
    RingPtr r = testutil::ring_xy(2);
    Ideal I(r, {P("x^2", r), P("y^2", r)});
    REQUIRE(ideal_member(P("x^2*y", r), I));
    REQUIRE_FALSE(ideal_member(P("x", r), I));

    Ideal J(r, {P("x+y", r)});
    REQUIRE(ideal_member(P("x^2+y^2", r), J));  // (x+y)^2 in char 2
}

TEST_CASE("ideal equality examples") {
    RingPtr r = testutil::ring_xy(2);
    REQUIRE(ideal_equal(ideal_of(r, {"x", "y"}), ideal_of(r, {"y", "x+y"})));
    REQUIRE_FALSE(ideal_equal(ideal_of(r, {"x^2", "y^2"}), ideal_of(r, {"x^2", "x*y", "y^2"})));
    REQUIRE(ideal_equal(Ideal(r), Ideal(r)));
    RingPtr r3 = testutil::ring_xy(3);
    REQUIRE_THROWS_AS(ideal_equal(ideal_of(r, {"x"}), ideal_of(r3, {"x"})), std::invalid_argument);
}

namespace {

// random generating-set transformations that keep the ideal fixed
std::vector<Polynomial> scramble_gens(Rng& rng, const RingPtr& ring,
                                      std::vector<Polynomial> gens) {
    if (gens.empty()) return gens;
    for (int round = 0; round < 4; ++round) {
        std::size_t i = rng.below(gens.size());
        switch (rng.below(3)) {
            case 0: {  // g_i += h * g_j
                std::size_t j = rng.below(gens.size());
                if (j == i) break;
                Polynomial h = testutil::random_poly(rng, ring, 2, 2);
                gens[i] = gens[i] + h * gens[j];
                break;
            }
            case 1: {  // scale by a unit
                std::uint32_t c = static_cast<std::uint32_t>(1 + rng.below(ring->p - 1));
                gens[i] = gens[i].scaled(c);
                break;
            }
            case 2: {  // append a redundant combination
                Polynomial h = testutil::random_poly(rng, ring, 2, 2);
                gens.push_back(h * gens[i]);
                break;
            }
        }
    }
    return gens;
}

} // namespace

TEST_CASE("groebner properties on random ideals") {
    Rng rng(99);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        RingPtr r = make_ring(p, {{"x", 1}, {"y", 1}, {"z", 1}});
        for (int iter = 0; iter < 35; ++iter) {
            std::vector<Polynomial> gens;
            std::size_t k = 1 + rng.below(4);
            for (std::size_t g = 0; g < k; ++g)
                gens.push_back(testutil::random_poly(rng, r, 3, 4));
            GroebnerBasis gb = buchberger(gens, r);

            // generators reduce to zero
            for (const auto& g : gens) REQUIRE(normal_form(g, gb).is_zero());

            // every S-pair of the basis reduces to zero
            for (std::size_t i = 0; i < gb.elements.size(); ++i)
                for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
                    REQUIRE(normal_form(s_polynomial(gb.elements[i], gb.elements[j]), gb)
                                .is_zero());

            // idempotence
            GroebnerBasis again = buchberger(gb.elements, r);
            REQUIRE(again.elements == gb.elements);

            // normal form is linear
            Polynomial f = testutil::random_poly(rng, r, 3, 3);
            Polynomial g = testutil::random_poly(rng, r, 3, 3);
            REQUIRE(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));

            // the reduced basis only depends on the ideal
            GroebnerBasis scrambled = buchberger(scramble_gens(rng, r, gens), r);
            REQUIRE(scrambled.elements == gb.elements);
        }
    }
}

TEST_CASE("exact division") {
    RingPtr r = testutil::ring_xy(5);
    Polynomial f = P("x^2*y + 2*x*y^2", r);
    Polynomial g = P("x*y", r);
    auto q = exact_divide(f, g);
    REQUIRE(q.has_value());
    REQUIRE(*q * g == f);
    REQUIRE_FALSE(exact_divide(P("x+1", r), P("y", r)).has_value());
    REQUIRE_THROWS_AS(exact_divide(f, Polynomial::zero(r)), std::invalid_argument);
}
