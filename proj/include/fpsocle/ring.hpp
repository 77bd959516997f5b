#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"

namespace fpsocle {

struct Variable {
    std::string name;
    std::int64_t weight = 1;

    bool operator==(const Variable&) const = default;
};

enum class OrderKind {
    GradedRevlex,  // weighted degree first, reverse lexicographic tie-break
    BlockElim,     // eliminate the first `block` variables, GradedRevlex inside each block
};

struct MonomialOrder {
    OrderKind kind = OrderKind::GradedRevlex;
    std::size_t block = 0;  // first-block size, BlockElim only

    bool operator==(const MonomialOrder&) const = default;
};

// A weighted polynomial ring F_p[x_1,...,x_n] together with the monomial
// order used for canonical term sorting and Groebner computations.
struct RingSpec {
    std::uint32_t p = 2;
    std::vector<Variable> vars;
    MonomialOrder order;

    RingSpec() = default;
    RingSpec(std::uint32_t p_, std::vector<Variable> vars_, MonomialOrder ord = {})
        : p(p_), vars(std::move(vars_)), order(ord) {
        validate();
    }

    void validate() const {
        if (!is_prime(p)) throw std::invalid_argument("ring: characteristic must be prime");
        if (p > (1u << 31)) throw std::invalid_argument("ring: characteristic too large");
        std::set<std::string> seen;
        for (const auto& v : vars) {
            if (v.name.empty()) throw std::invalid_argument("ring: empty variable name");
            if (v.weight < 1) throw std::invalid_argument("ring: variable weight must be >= 1");
            if (!seen.insert(v.name).second)
                throw std::invalid_argument("ring: duplicate variable name '" + v.name + "'");
        }
    }

    std::size_t nvars() const { return vars.size(); }
    std::int64_t weight(std::size_t i) const { return vars[i].weight; }

    std::int64_t weight_sum() const {
        std::int64_t s = 0;
        for (const auto& v : vars) s += v.weight;
        return s;
    }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i].name == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const RingSpec&) const = default;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(std::uint32_t p, std::vector<Variable> vars, MonomialOrder ord = {}) {
    return std::make_shared<const RingSpec>(p, std::move(vars), ord);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Exponents are capped well below 2^32 so that Frobenius powers (which scale
// exponents by q) cannot wrap silently.
inline constexpr std::uint64_t kMaxExponent = (1ull << 31);

struct Monomial {
    std::vector<std::uint32_t> exps;
    std::int64_t deg = 0;  // cached weighted degree

    bool operator==(const Monomial&) const = default;
    bool is_one() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }
};

inline Monomial make_monomial(const RingSpec& ring, std::vector<std::uint32_t> exps) {
    if (exps.size() != ring.nvars())
        throw std::invalid_argument("monomial: exponent count does not match ring");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] >= kMaxExponent) throw std::overflow_error("monomial: exponent overflow");
        d += static_cast<std::int64_t>(exps[i]) * ring.weight(i);
    }
    return Monomial{std::move(exps), d};
}

inline Monomial monomial_one(const RingSpec& ring) {
    return Monomial{std::vector<std::uint32_t>(ring.nvars(), 0), 0};
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        std::uint64_t e = static_cast<std::uint64_t>(r.exps[i]) + b.exps[i];
        if (e >= kMaxExponent) throw std::overflow_error("monomial: exponent overflow");
        r.exps[i] = static_cast<std::uint32_t>(e);
    }
    r.deg = a.deg + b.deg;
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    // a / b, requires b | a
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
    r.deg = a.deg - b.deg;
    return r;
}

inline Monomial mono_lcm(const RingSpec& ring, const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps[i], b.exps[i]);
    return make_monomial(ring, std::move(e));
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

inline Monomial mono_pow(const Monomial& a, std::uint64_t k) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        std::uint64_t e = static_cast<std::uint64_t>(r.exps[i]) * k;
        if (e >= kMaxExponent) throw std::overflow_error("monomial: exponent overflow");
        r.exps[i] = static_cast<std::uint32_t>(e);
    }
    r.deg = a.deg * static_cast<std::int64_t>(k);
    return r;
}

namespace detail {

// Reverse lexicographic tie-break on a half-open index range:
// the monomial whose LAST differing exponent is smaller is the larger one.
inline int revlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
}

inline std::int64_t range_degree(const RingSpec& ring, const Monomial& a, std::size_t lo,
                                 std::size_t hi) {
    std::int64_t d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += static_cast<std::int64_t>(a.exps[i]) * ring.weight(i);
    return d;
}

inline int graded_revlex_cmp(const RingSpec& ring, const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi) {
    std::int64_t da = range_degree(ring, a, lo, hi);
    std::int64_t db = range_degree(ring, b, lo, hi);
    if (da != db) return da > db ? 1 : -1;
    return revlex_cmp(a, b, lo, hi);
}

} // namespace detail

// Three-way comparison under the ring's order: >0 when a > b.
inline int mono_cmp(const RingSpec& ring, const Monomial& a, const Monomial& b) {
    const std::size_t n = ring.nvars();
    switch (ring.order.kind) {
        case OrderKind::GradedRevlex: {
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            return detail::revlex_cmp(a, b, 0, n);
        }
        case OrderKind::BlockElim: {
            const std::size_t k = std::min(ring.order.block, n);
            int c = detail::graded_revlex_cmp(ring, a, b, 0, k);
            if (c != 0) return c;
            return detail::graded_revlex_cmp(ring, a, b, k, n);
        }
    }
    return 0;
}

inline bool mono_less(const RingSpec& ring, const Monomial& a, const Monomial& b) {
    return mono_cmp(ring, a, b) < 0;
}

} // namespace fpsocle
