#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "theorem.hpp"

namespace fpsocle {

// SplitMix64. The standard <random> distributions are not bit-stable across
// implementations, and fuzz reports must be byte-identical for a given seed,
// so the generator and all sampling helpers are spelled out here.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(unsigned percent) { return below(100) < percent; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master + 0x9E3779B97F4A7C15ull * (index + 1));
    return r.next();
}

enum class FuzzProfile { Ci, Explore };

struct FuzzInstance {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    RingPtr ring;
    std::vector<Polynomial> C_gens;
    std::vector<Polynomial> I_gens;
    std::int64_t e = 1;
};

namespace detail {

inline std::vector<Monomial> monomials_of_degree(const RingSpec& ring, std::int64_t d) {
    std::vector<Monomial> out;
    walk_monomials_of_degree(ring, d,
                             [&](const std::vector<std::uint32_t>& e) { out.push_back(make_monomial(ring, e)); });
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return mono_cmp(ring, a, b) > 0; });
    return out;
}

inline Polynomial random_binomial_of_degree(Rng& rng, const RingPtr& ring, std::int64_t d) {
    std::vector<Monomial> ms = monomials_of_degree(*ring, d);
    if (ms.size() < 2) return Polynomial::zero(ring);
    std::size_t a = rng.below(ms.size());
    std::size_t b = rng.below(ms.size() - 1);
    if (b >= a) ++b;
    std::uint32_t c = static_cast<std::uint32_t>(1 + rng.below(ring->p - 1));
    std::vector<Term> ts{{1, ms[a]}, {c, ms[b]}};
    return Polynomial::from_terms(ring, std::move(ts));
}

inline Polynomial pure_power(const RingPtr& ring, std::size_t var, std::uint32_t a) {
    std::vector<std::uint32_t> e(ring->nvars(), 0);
    e[var] = a;
    return Polynomial::monomial_term(ring, 1, make_monomial(*ring, std::move(e)));
}

inline Polynomial random_monomial_gen(Rng& rng, const RingPtr& ring, std::int64_t dmax) {
    std::int64_t d = rng.range(1, dmax);
    std::vector<Monomial> ms = monomials_of_degree(*ring, d);
    if (ms.empty()) return Polynomial::zero(ring);
    return Polynomial::monomial_term(ring, 1, rng.pick(ms));
}

} // namespace detail

// Random complete-intersection instance: p in {2,3,5}, 2 or 3 variables
// (weight 2 on the last variable occasionally), C a regular sequence of
// 0..n generators, I artinian. 60% all-monomial, 30% binomial C, 10% mixed.
inline FuzzInstance gen_ci_instance(std::uint64_t master, std::size_t index) {
    Rng rng(derive_seed(master, index));
    FuzzInstance inst;
    inst.index = index;
    inst.seed = derive_seed(master, index);

    const std::uint32_t primes[] = {2, 3, 5};
    std::uint32_t p = primes[rng.below(3)];
    std::size_t n = 2 + rng.below(2);
    std::vector<Variable> vars;
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) vars.push_back({names[i], 1});
    if (rng.chance(20)) vars[n - 1].weight = 2;
    RingPtr ring = make_ring(p, std::move(vars));

    unsigned flavor_roll = static_cast<unsigned>(rng.below(100));
    bool binomial_C = flavor_roll >= 60;                  // 30% + 10% mixed
    bool binomial_I = flavor_roll >= 90;                  // 10% mixed

    std::size_t c = rng.below(n + 1);
    // distinct variables carrying the regular sequence
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    for (int attempt = 0;; ++attempt) {
        std::vector<Polynomial> C_gens;
        for (std::size_t k = 0; k < c; ++k) {
            std::uint32_t a = static_cast<std::uint32_t>(rng.range(1, 3));
            Polynomial f = detail::pure_power(ring, order[k], a);
            if (binomial_C && attempt < 20 && rng.chance(60)) {
                Polynomial b =
                    detail::random_binomial_of_degree(rng, ring, *weighted_degree(f));
                if (!b.is_zero()) f = b;
            }
            C_gens.push_back(std::move(f));
        }
        if (is_regular_sequence(ring, C_gens)) {
            inst.C_gens = std::move(C_gens);
            break;
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        inst.I_gens.push_back(detail::pure_power(ring, i, static_cast<std::uint32_t>(rng.range(1, 3))));
    std::size_t extras = rng.below(3);
    for (std::size_t k = 0; k < extras; ++k) {
        Polynomial g = binomial_I && rng.chance(50)
                           ? detail::random_binomial_of_degree(rng, ring, rng.range(2, 4))
                           : detail::random_monomial_gen(rng, ring, 4);
        if (!g.is_zero()) inst.I_gens.push_back(std::move(g));
    }
    if (rng.chance(25))  // exercise lifts that contain C
        inst.I_gens.insert(inst.I_gens.end(), inst.C_gens.begin(), inst.C_gens.end());

    inst.e = rng.chance(50) ? 1 : 2;
    std::int64_t q = 1;
    for (std::int64_t k = 0; k < inst.e; ++k) q *= p;
    if (q > 9) inst.e = 1;

    inst.ring = std::move(ring);
    return inst;
}

// Random Gorenstein-but-not-complete-intersection instance for the explore
// mode. Half come from the structured family
//   (xy, xz, yz, x^t - u*y^t, y^t - v*z^t)
// whose quotient has Hilbert function 1,3,...,3,1 and a one-dimensional
// socle; the other half are rejection-sampled artinian ideals filtered by
// socle dimension 1 and more than n minimal generators, with the structured
// family as a fallback.
inline FuzzInstance gen_explore_instance(std::uint64_t master, std::size_t index) {
    Rng rng(derive_seed(master, index));
    FuzzInstance inst;
    inst.index = index;
    inst.seed = derive_seed(master, index);

    const std::uint32_t primes[] = {2, 3, 5};
    std::uint32_t p = primes[rng.below(3)];
    RingPtr ring = make_ring(p, {{"x", 1}, {"y", 1}, {"z", 1}});

    auto structured = [&](Rng& r) {
        std::uint32_t t = static_cast<std::uint32_t>(r.range(2, 3));
        std::uint32_t u = static_cast<std::uint32_t>(1 + r.below(p - 1));
        std::uint32_t v = static_cast<std::uint32_t>(1 + r.below(p - 1));
        Polynomial x = Polynomial::variable(ring, 0);
        Polynomial y = Polynomial::variable(ring, 1);
        Polynomial z = Polynomial::variable(ring, 2);
        auto pw = [&](const Polynomial& f, std::uint32_t k) {
            Polynomial r2 = Polynomial::one(ring);
            for (std::uint32_t i = 0; i < k; ++i) r2 = r2 * f;
            return r2;
        };
        return std::vector<Polynomial>{
            x * y, x * z, y * z,
            pw(x, t) - pw(y, t).scaled(u),
            pw(y, t) - pw(z, t).scaled(v)};
    };

    bool found = false;
    if (rng.chance(50)) {
        inst.C_gens = structured(rng);
        found = true;
    } else {
        for (int attempt = 0; attempt < 40 && !found; ++attempt) {
            std::vector<Polynomial> cand;
            for (std::size_t i = 0; i < 3; ++i)
                cand.push_back(detail::pure_power(ring, i, static_cast<std::uint32_t>(rng.range(2, 3))));
            std::size_t extras = 1 + rng.below(3);
            for (std::size_t k = 0; k < extras; ++k) {
                Polynomial g = rng.chance(60)
                                   ? detail::random_binomial_of_degree(rng, ring, rng.range(2, 3))
                                   : detail::random_monomial_gen(rng, ring, 3);
                if (!g.is_zero()) cand.push_back(std::move(g));
            }
            try {
                Ideal C(ring, cand);
                if (C.is_unit_ideal() || !is_m_primary(C)) continue;
                if (is_regular_sequence(ring, C.generators())) continue;
                if (socle_profile(C).ell != 1) continue;
                if (min_gen_degrees(C).size() <= 3) continue;
                inst.C_gens = std::move(cand);
                found = true;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
        if (!found) inst.C_gens = structured(rng);
    }

    inst.I_gens = inst.C_gens;  // I contains C
    std::size_t extras = 1 + rng.below(2);
    for (std::size_t k = 0; k < extras; ++k) {
        Polynomial g = detail::random_monomial_gen(rng, ring, 2);
        if (!g.is_zero()) inst.I_gens.push_back(std::move(g));
    }

    inst.e = 1;
    if (p == 2 && rng.chance(40)) inst.e = 2;
    inst.ring = std::move(ring);
    return inst;
}

struct InstanceOutcome {
    FuzzInstance inst;
    std::int64_t q = 0;
    std::size_t c = 0;
    TheoremReport report;
    std::string error;  // non-empty when the instance could not be evaluated

    bool ok() const { return error.empty(); }
};

struct FuzzSummary {
    std::uint64_t seed = 0;
    FuzzProfile profile = FuzzProfile::Ci;
    std::vector<InstanceOutcome> outcomes;          // ordered by index
    std::map<std::string, std::int64_t> histogram;  // verdict pattern -> count
    std::vector<std::size_t> inconsistent;          // indexes with consistent == false
    std::vector<std::size_t> errored;
};

inline std::string verdict_pattern(const TheoremReport& r) {
    auto ch = [](bool b) { return b ? 'T' : 'F'; };
    return std::string() + ch(r.cond_b) + ch(r.cond_c) + ch(r.cond_d) + ch(r.cond_a_via_tor1);
}

inline InstanceOutcome evaluate_instance(FuzzInstance inst, FuzzProfile profile,
                                         std::int64_t q_cap) {
    InstanceOutcome out;
    out.c = inst.C_gens.size();
    try {
        CISetup setup = profile == FuzzProfile::Ci
                            ? make_ci_setup(inst.ring, inst.C_gens, inst.I_gens, inst.e, q_cap)
                            : make_explore_setup(inst.ring, inst.C_gens, inst.I_gens, inst.e,
                                                 q_cap);
        out.q = setup.q;
        out.report = evaluate_theorem(setup);
    } catch (const std::exception& ex) {
        out.error = ex.what();
    }
    out.inst = std::move(inst);
    return out;
}

// Runs `count` instances concurrently; each instance draws from its own
// seed derived from (master seed, index), so the aggregate is reproducible
// regardless of scheduling.
inline FuzzSummary run_fuzz(std::uint64_t seed, std::size_t count, FuzzProfile profile,
                            std::int64_t q_cap = 32, unsigned threads = 0) {
    FuzzSummary sum;
    sum.seed = seed;
    sum.profile = profile;
    sum.outcomes.resize(count);

    if (threads == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? hw : 1;
    }
    if (threads > count && count > 0) threads = static_cast<unsigned>(count);

    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            FuzzInstance inst = profile == FuzzProfile::Ci ? gen_ci_instance(seed, i)
                                                           : gen_explore_instance(seed, i);
            sum.outcomes[i] = evaluate_instance(std::move(inst), profile, q_cap);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < count; ++i) {
        const InstanceOutcome& o = sum.outcomes[i];
        if (!o.ok()) {
            sum.errored.push_back(i);
            continue;
        }
        ++sum.histogram[verdict_pattern(o.report)];
        if (!o.report.consistent) sum.inconsistent.push_back(i);
    }
    return sum;
}

} // namespace fpsocle
