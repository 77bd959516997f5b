#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace fpsocle {

// Reduced Groebner basis: monic, auto-reduced (no term of any element is
// divisible by the leading monomial of another), sorted by leading monomial
// descending. Unique for a given ideal and order, which is what makes
// ideal equality a plain element-wise comparison.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;

    bool is_trivial_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

namespace detail {

// Division remainder against an arbitrary list of nonzero divisors.
// Reducer tie-break: smallest index, for determinism.
inline Polynomial nf_against(const Polynomial& f, const std::vector<Polynomial>& divisors,
                             const RingPtr& ring) {
    Polynomial rem = Polynomial::zero(ring);
    Polynomial h = f;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (const auto& g : divisors) {
            const Monomial& gm = g.leading_monomial();
            if (!mono_divides(gm, lt.mono)) continue;
            std::uint32_t c = fp_mul(lt.coeff, fp_inv(g.leading_term().coeff, ring->p), ring->p);
            h = h - g.times_term(c, mono_div(lt.mono, gm));
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial lead = Polynomial::monomial_term(ring, lt.coeff, lt.mono);
            rem = rem + lead;
            h = h - lead;
        }
    }
    return rem;
}

} // namespace detail

// Remainder of multivariate division of f by the basis. No term of the
// result is divisible by any leading monomial of gb; f minus the result
// lies in the ideal spanned by gb.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!f.is_zero() && !same_ring(f.ring(), gb.ring))
        throw std::invalid_argument("normal_form: ring mismatch");
    return detail::nf_against(f, gb.elements, gb.ring);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const RingPtr& R = f.ring();
    Monomial l = mono_lcm(*R, f.leading_monomial(), g.leading_monomial());
    // both inputs monic in Buchberger; handle general inputs anyway
    std::uint32_t cf = fp_inv(f.leading_term().coeff, R->p);
    std::uint32_t cg = fp_inv(g.leading_term().coeff, R->p);
    return f.times_term(cf, mono_div(l, f.leading_monomial())) -
           g.times_term(cg, mono_div(l, g.leading_monomial()));
}

namespace detail {

struct PairKey {
    std::int64_t lcm_deg;
    std::vector<std::uint32_t> lcm_exps;
    std::size_t i, j;

    bool operator<(const PairKey& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (lcm_exps != o.lcm_exps) return lcm_exps < o.lcm_exps;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace detail

// Buchberger's algorithm with normal (minimal lcm-degree) pair selection and
// the product and chain criteria, followed by minimization and tail
// reduction. Deterministic for identical input.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, RingPtr ring) {
    for (const auto& g : gens)
        if (!g.is_zero() && !same_ring(g.ring(), ring))
            throw std::invalid_argument("buchberger: ring mismatch");

    const RingSpec& R = *ring;
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());

    std::set<detail::PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_ij;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = mono_lcm(R, basis[i].leading_monomial(), basis[j].leading_monomial());
        pending.insert({l.deg, l.exps, i, j});
        pending_ij.insert({i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!pending.empty()) {
        auto key = *pending.begin();
        pending.erase(pending.begin());
        pending_ij.erase({key.i, key.j});
        const Polynomial& fi = basis[key.i];
        const Polynomial& fj = basis[key.j];

        if (mono_coprime(fi.leading_monomial(), fj.leading_monomial())) continue;

        // chain criterion: some k with LM_k | lcm and both sub-pairs settled
        Monomial l = mono_lcm(R, fi.leading_monomial(), fj.leading_monomial());
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j) continue;
            if (!mono_divides(basis[k].leading_monomial(), l)) continue;
            auto sub1 = std::minmax(key.i, k);
            auto sub2 = std::minmax(key.j, k);
            if (!pending_ij.count({sub1.first, sub1.second}) &&
                !pending_ij.count({sub2.first, sub2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial rem = detail::nf_against(s_polynomial(fi, fj), basis, ring);
        if (rem.is_zero()) continue;
        basis.push_back(rem.monic());
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // minimize: drop elements whose LM is divisible by another surviving LM
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mono_divides(mj, mi) && !(mi == mj && j > i)) keep[i] = 0;
        }
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(detail::nf_against(minimal[i], others, ring).monic());
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(R, a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return GroebnerBasis{ring, std::move(reduced)};
}

// Exact division f / g; nullopt when g does not divide f.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    const RingPtr& R = g.ring();
    Polynomial q = Polynomial::zero(R);
    Polynomial h = f;
    const std::uint32_t lc_inv = fp_inv(g.leading_term().coeff, R->p);
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        if (!mono_divides(g.leading_monomial(), lt.mono)) return std::nullopt;
        std::uint32_t c = fp_mul(lt.coeff, lc_inv, R->p);
        Monomial shift = mono_div(lt.mono, g.leading_monomial());
        q = q + Polynomial::monomial_term(R, c, shift);
        h = h - g.times_term(c, shift);
    }
    return q;
}

} // namespace fpsocle
