#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "socle.hpp"

namespace fpsocle {

// Graded Betti numbers beta_{i,j} = dim_k Tor_i^P(P/I, k)_j of an artinian
// quotient, computed as Koszul homology ranks.
struct BettiTable {
    std::map<std::pair<int, std::int64_t>, std::int64_t> entries;  // (i, j) -> rank
    std::size_t n = 0;                                             // number of variables

    std::int64_t at(int i, std::int64_t j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable&) const = default;
};

struct AInvariant {
    std::int64_t value = 0;

    bool operator==(const AInvariant&) const = default;
};

// a-invariant of the polynomial ring itself: minus the sum of the weights.
inline AInvariant a_invariant_poly(const RingSpec& ring) {
    return AInvariant{-ring.weight_sum()};
}

// a-invariant of a complete intersection P/C: sum of the generator degrees
// minus the sum of the weights. Requires the stored generators to form a
// homogeneous regular sequence.
inline AInvariant a_invariant_ci(const RingPtr& ring, const Ideal& C) {
    if (!same_ring(ring, C.ring())) throw std::invalid_argument("a_invariant_ci: ring mismatch");
    if (!is_regular_sequence(ring, C.generators()))
        throw std::invalid_argument("a_invariant_ci: generators are not a regular sequence");
    std::int64_t s = 0;
    for (const auto& f : C.generators()) s += *weighted_degree(f);
    return AInvariant{s - ring->weight_sum()};
}

namespace detail {

// Basis element of the Koszul strand: subset of variables (bitmask) paired
// with a standard monomial of the complementary degree.
struct KoszulBasisElem {
    std::uint32_t mask;
    std::size_t mono;  // index into the degree slice of the standard basis
};

inline std::int64_t mask_weight(const RingSpec& ring, std::uint32_t mask) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (mask & (1u << i)) w += ring.weight(i);
    return w;
}

} // namespace detail

// Koszul homology of P/I: beta_{i,j} = dim_k H_i(K(x_1..x_n) (x) P/I)_j,
// strand by strand on standard-monomial bases. The differential follows the
// wedge-basis orientation with variables in declared order; d o d = 0 is
// checked for every strand.
inline BettiTable koszul_betti(const Ideal& I) {
    if (I.is_unit_ideal()) throw std::invalid_argument("koszul_betti: unit ideal");
    if (!is_m_primary(I)) throw std::invalid_argument("koszul_betti: quotient is not artinian");
    const RingPtr& ring = I.ring();
    const RingSpec& R = *ring;
    const std::size_t n = R.nvars();
    if (n > 30) throw std::invalid_argument("koszul_betti: too many variables");
    const std::uint32_t p = R.p;
    const GroebnerBasis& gb = I.groebner();

    auto basis_by_deg = standard_monomials_by_degree(I);
    std::map<std::int64_t, std::map<std::vector<std::uint32_t>, std::size_t>> index;
    for (const auto& [d, ms] : basis_by_deg) index[d] = detail::index_basis(ms);
    auto slice = [&](std::int64_t d) -> const std::vector<Monomial>* {
        auto it = basis_by_deg.find(d);
        return it == basis_by_deg.end() ? nullptr : &it->second;
    };

    std::int64_t top = basis_by_deg.empty() ? -1 : basis_by_deg.rbegin()->first;
    std::int64_t maxj = top + R.weight_sum();

    // subsets grouped by popcount, ascending mask for determinism
    std::vector<std::vector<std::uint32_t>> masks(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        masks[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);

    std::vector<Monomial> var_monos;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(n, 0);
        e[i] = 1;
        var_monos.push_back(make_monomial(R, std::move(e)));
    }

    BettiTable table;
    table.n = n;
    for (std::int64_t j = 0; j <= maxj; ++j) {
        // strand bases per homological index
        std::vector<std::vector<detail::KoszulBasisElem>> strand(n + 2);
        std::vector<std::map<std::pair<std::uint32_t, std::size_t>, std::size_t>> pos(n + 2);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::uint32_t mask : masks[i]) {
                const auto* ms = slice(j - detail::mask_weight(R, mask));
                if (!ms) continue;
                for (std::size_t k = 0; k < ms->size(); ++k) {
                    pos[i][{mask, k}] = strand[i].size();
                    strand[i].push_back({mask, k});
                }
            }
        }

        // differentials d_i : strand[i] -> strand[i-1]
        std::vector<FpMatrix> diff;
        diff.reserve(n + 1);
        for (std::size_t i = 1; i <= n; ++i) {
            FpMatrix m(p, strand[i - 1].size(), strand[i].size());
            for (std::size_t col = 0; col < strand[i].size(); ++col) {
                const auto& el = strand[i][col];
                const auto* src = slice(j - detail::mask_weight(R, el.mask));
                const Monomial& u = (*src)[el.mono];
                int sign_parity = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    if (!(el.mask & (1u << v))) continue;
                    std::uint32_t sub = el.mask & ~(1u << v);
                    Polynomial xv_u =
                        Polynomial::monomial_term(ring, 1, mono_mul(u, var_monos[v]));
                    Polynomial nf = normal_form(xv_u, gb);
                    std::int64_t dtgt = j - detail::mask_weight(R, sub);
                    const auto& idx = index[dtgt];
                    for (const auto& t : nf.terms()) {
                        auto f = idx.find(t.mono.exps);
                        if (f == idx.end())
                            throw std::logic_error("koszul_betti: normal form left the basis");
                        std::size_t row = pos[i - 1].at({sub, f->second});
                        std::uint32_t val = sign_parity % 2 ? fp_neg(t.coeff, p) : t.coeff;
                        m.at(row, col) = fp_add(m.at(row, col), val, p);
                    }
                    ++sign_parity;
                }
            }
            diff.push_back(std::move(m));
        }

        // orientation sanity: consecutive differentials compose to zero
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
            const FpMatrix& a = diff[i];      // d_{i+1}
            const FpMatrix& b = diff[i + 1];  // d_{i+2}
            for (std::size_t c = 0; c < b.cols(); ++c)
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    std::uint32_t s = 0;
                    for (std::size_t k = 0; k < a.cols(); ++k)
                        s = fp_add(s, fp_mul(a.at(r, k), b.at(k, c), p), p);
                    if (s) throw std::logic_error("koszul_betti: differential does not square to zero");
                }
        }

        std::vector<std::size_t> rank(n + 2, 0);
        for (std::size_t i = 1; i <= n; ++i) rank[i] = diff[i - 1].rank();
        for (std::size_t i = 0; i <= n; ++i) {
            std::int64_t beta = static_cast<std::int64_t>(strand[i].size()) -
                                static_cast<std::int64_t>(rank[i]) -
                                static_cast<std::int64_t>(rank[i + 1]);
            if (beta < 0) throw std::logic_error("koszul_betti: negative rank");
            if (beta > 0) table.entries[{static_cast<int>(i), j}] = beta;
        }
    }
    return table;
}

inline std::vector<std::int64_t> back_twists(const BettiTable& table) {
    std::vector<std::int64_t> out;
    for (const auto& [key, rank] : table.entries)
        if (key.first == static_cast<int>(table.n))
            for (std::int64_t k = 0; k < rank; ++k) out.push_back(key.second);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::int64_t> back_twists(const Ideal& I) {
    return back_twists(koszul_betti(I));
}

// Socle degrees recovered from the resolution's last column:
// {a(P) + b_{n,i}} over the back twists.
inline std::vector<std::int64_t> socle_from_betti(const Ideal& I) {
    std::int64_t aP = a_invariant_poly(*I.ring()).value;
    std::vector<std::int64_t> out = back_twists(I);
    for (auto& b : out) b += aP;
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fpsocle
