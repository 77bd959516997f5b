#pragma once

// Shared fixtures for the test suite: ring shortcuts, deterministic random
// generators, and converters between library ideals and the oracle.

#include <string>
#include <vector>

#include <fpsocle/fpsocle.hpp>

#include "oracle.hpp"

namespace testutil {

using namespace fpsocle;

inline RingPtr ring_xy(std::uint32_t p = 2) { return make_ring(p, {{"x", 1}, {"y", 1}}); }
inline RingPtr ring_xyz(std::uint32_t p = 2) {
    return make_ring(p, {{"x", 1}, {"y", 1}, {"z", 1}});
}

inline Polynomial P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

inline Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_poly(s, r));
    return Ideal(r, std::move(ps));
}

// ---- randomness (library Rng: deterministic and platform-stable) ----

inline Monomial random_monomial(Rng& rng, const RingSpec& ring, std::uint32_t emax) {
    std::vector<std::uint32_t> e(ring.nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(emax + 1));
    return make_monomial(ring, std::move(e));
}

inline Polynomial random_poly(Rng& rng, const RingPtr& ring, std::size_t max_terms,
                              std::uint32_t emax) {
    std::vector<Term> ts;
    std::size_t k = rng.below(max_terms + 1);
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t c = static_cast<std::uint32_t>(rng.below(ring->p));
        ts.push_back({c, random_monomial(rng, *ring, emax)});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

inline Polynomial random_homog_poly(Rng& rng, const RingPtr& ring, std::int64_t deg,
                                    std::size_t max_terms) {
    std::vector<Monomial> ms = detail::monomials_of_degree(*ring, deg);
    std::vector<Term> ts;
    if (ms.empty()) return Polynomial::zero(ring);
    std::size_t k = 1 + rng.below(std::min(max_terms, ms.size()));
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t c = static_cast<std::uint32_t>(1 + rng.below(ring->p - 1));
        ts.push_back({c, rng.pick(ms)});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

// random monomial ideal with a few generators (possibly not artinian)
inline oracle::MonIdeal random_mon_ideal(Rng& rng, std::size_t n, std::uint32_t emax,
                                         std::size_t max_gens) {
    std::vector<oracle::Expv> gens;
    std::size_t k = 1 + rng.below(max_gens);
    for (std::size_t g = 0; g < k; ++g) {
        oracle::Expv e(n);
        bool nonzero = false;
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(rng.below(emax + 1));
            nonzero = nonzero || x;
        }
        if (nonzero) gens.push_back(std::move(e));
    }
    if (gens.empty()) gens.push_back([&] {
        oracle::Expv e(n, 0);
        e[0] = 1;
        return e;
    }());
    return oracle::minimalize(n, std::move(gens));
}

// artinian monomial ideal: pure powers of every variable plus extras
inline oracle::MonIdeal random_artinian_mon_ideal(Rng& rng, std::size_t n, std::uint32_t emax,
                                                  std::size_t extras) {
    std::vector<oracle::Expv> gens;
    for (std::size_t i = 0; i < n; ++i) {
        oracle::Expv e(n, 0);
        e[i] = static_cast<std::uint32_t>(1 + rng.below(emax));
        gens.push_back(std::move(e));
    }
    std::size_t k = rng.below(extras + 1);
    for (std::size_t g = 0; g < k; ++g) {
        oracle::Expv e(n);
        bool nonzero = false;
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(rng.below(emax));
            nonzero = nonzero || x;
        }
        if (nonzero) gens.push_back(std::move(e));
    }
    return oracle::minimalize(n, std::move(gens));
}

// ---- conversions between oracle ideals and library ideals ----

inline Ideal to_ideal(const oracle::MonIdeal& a, const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (const auto& e : a.gens)
        gens.push_back(Polynomial::monomial_term(ring, 1, make_monomial(*ring, e)));
    return Ideal(ring, std::move(gens));
}

// Reads the minimal monomial generators back off the reduced Groebner basis;
// for a monomial ideal those coincide.
inline oracle::MonIdeal from_ideal_gb(const Ideal& I) {
    std::vector<oracle::Expv> gens;
    for (const auto& g : I.groebner().elements) {
        if (g.terms().size() != 1)
            throw std::logic_error("from_ideal_gb: basis is not monomial");
        gens.push_back(g.leading_monomial().exps);
    }
    return oracle::minimalize(I.ring()->nvars(), std::move(gens));
}

inline std::vector<std::int64_t> ring_weights(const RingSpec& r) {
    std::vector<std::int64_t> w;
    for (const auto& v : r.vars) w.push_back(v.weight);
    return w;
}

} // namespace testutil
