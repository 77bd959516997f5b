#pragma once

// Brute-force oracle for monomial-ideal arithmetic, used to pin expected
// values in tests. Works directly on exponent vectors over the divisibility
// lattice and never touches the Groebner machinery it is checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using Expv = std::vector<std::uint32_t>;

struct MonIdeal {
    std::size_t n = 0;
    std::vector<Expv> gens;  // minimal generators, sorted
};

inline bool divides(const Expv& a, const Expv& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MonIdeal minimalize(std::size_t n, std::vector<Expv> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Expv> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i))
                redundant = true;
        if (!redundant) keep.push_back(gens[i]);
    }
    std::sort(keep.begin(), keep.end());
    return MonIdeal{n, std::move(keep)};
}

inline MonIdeal sum(const MonIdeal& a, const MonIdeal& b) {
    std::vector<Expv> g = a.gens;
    g.insert(g.end(), b.gens.begin(), b.gens.end());
    return minimalize(a.n, std::move(g));
}

inline MonIdeal product(const MonIdeal& a, const MonIdeal& b) {
    std::vector<Expv> g;
    for (const auto& u : a.gens)
        for (const auto& v : b.gens) {
            Expv w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
            g.push_back(std::move(w));
        }
    return minimalize(a.n, std::move(g));
}

inline MonIdeal intersect(const MonIdeal& a, const MonIdeal& b) {
    std::vector<Expv> g;
    for (const auto& u : a.gens)
        for (const auto& v : b.gens) {
            Expv w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
            g.push_back(std::move(w));
        }
    return minimalize(a.n, std::move(g));
}

inline MonIdeal colon_by_monomial(const MonIdeal& a, const Expv& m) {
    std::vector<Expv> g;
    for (const auto& u : a.gens) {
        Expv w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] > m[i] ? u[i] - m[i] : 0;
        g.push_back(std::move(w));
    }
    return minimalize(a.n, std::move(g));
}

inline MonIdeal colon(const MonIdeal& a, const MonIdeal& b) {
    if (b.gens.empty()) throw std::invalid_argument("oracle colon: divisor is zero");
    bool first = true;
    MonIdeal acc;
    for (const auto& m : b.gens) {
        MonIdeal part = colon_by_monomial(a, m);
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

inline MonIdeal frobenius(const MonIdeal& a, std::uint32_t q) {
    std::vector<Expv> g;
    for (const auto& u : a.gens) {
        Expv w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] * q;
        g.push_back(std::move(w));
    }
    return minimalize(a.n, std::move(g));
}

inline bool contains(const MonIdeal& a, const Expv& m) {
    for (const auto& u : a.gens)
        if (divides(u, m)) return true;
    return false;
}

inline std::int64_t wdeg(const Expv& m, const std::vector<std::int64_t>& weights) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::int64_t>(m[i]) * weights[i];
    return d;
}

// Pure-power truncation box; throws when some variable has no pure power
// (not m-primary).
inline Expv caps(const MonIdeal& a) {
    Expv c(a.n, 0);
    for (const auto& u : a.gens) {
        int support = -1;
        for (std::size_t i = 0; i < a.n; ++i) {
            if (!u[i]) continue;
            if (support >= 0) {
                support = -2;
                break;
            }
            support = static_cast<int>(i);
        }
        if (support >= 0 && (!c[support] || u[support] < c[support]))
            c[static_cast<std::size_t>(support)] = u[support];
    }
    for (std::size_t i = 0; i < a.n; ++i)
        if (!c[i]) throw std::invalid_argument("oracle caps: not m-primary");
    return c;
}

inline bool is_m_primary(const MonIdeal& a) {
    try {
        caps(a);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// Standard monomials of an m-primary monomial ideal (staircase walk).
inline std::vector<Expv> standard_monomials(const MonIdeal& a) {
    Expv box = caps(a);
    std::vector<Expv> out;
    Expv cur(a.n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == a.n) {
            if (!contains(a, cur)) out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e < box[i]; ++e) {
            cur[i] = e;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    return out;
}

inline std::map<std::int64_t, std::int64_t> hilbert(const MonIdeal& a,
                                                    const std::vector<std::int64_t>& weights) {
    std::map<std::int64_t, std::int64_t> h;
    for (const auto& m : standard_monomials(a)) ++h[wdeg(m, weights)];
    return h;
}

// Socle of the artinian quotient: standard monomials every variable pushes
// into the ideal.
inline std::vector<std::int64_t> socle_degrees(const MonIdeal& a,
                                               const std::vector<std::int64_t>& weights) {
    std::vector<std::int64_t> out;
    for (const auto& m : standard_monomials(a)) {
        bool socle = true;
        for (std::size_t i = 0; i < a.n && socle; ++i) {
            Expv up = m;
            ++up[i];
            if (!contains(a, up)) socle = false;
        }
        if (socle) out.push_back(wdeg(m, weights));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t top_socle_degree(const MonIdeal& a,
                                     const std::vector<std::int64_t>& weights) {
    std::int64_t top = 0;
    for (const auto& m : standard_monomials(a)) top = std::max(top, wdeg(m, weights));
    return top;
}

// For a monomial ideal the minimalized generators are the unique minimal
// generating set, so their degrees come for free.
inline std::vector<std::int64_t> min_gen_degrees(const MonIdeal& a,
                                                 const std::vector<std::int64_t>& weights) {
    std::vector<std::int64_t> out;
    for (const auto& u : a.gens) out.push_back(wdeg(u, weights));
    std::sort(out.begin(), out.end());
    return out;
}

// dim_k of the degree-d slice of the quotient for possibly non-artinian
// monomial ideals: enumerate all exponent vectors of weighted degree d.
inline std::int64_t quotient_dim_at_degree(const MonIdeal& a,
                                           const std::vector<std::int64_t>& weights,
                                           std::int64_t d) {
    std::int64_t count = 0;
    Expv cur(a.n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rem) -> void {
        if (i + 1 == a.n) {
            if (rem % weights[i] == 0) {
                cur[i] = static_cast<std::uint32_t>(rem / weights[i]);
                if (!contains(a, cur)) ++count;
                cur[i] = 0;
            }
            return;
        }
        for (std::int64_t e = 0; e * weights[i] <= rem; ++e) {
            cur[i] = static_cast<std::uint32_t>(e);
            self(self, i + 1, rem - e * weights[i]);
        }
        cur[i] = 0;
    };
    if (a.n == 0) return d == 0 && !contains(a, cur) ? 1 : 0;
    rec(rec, 0, d);
    return count;
}

} // namespace oracle
