#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "ideal.hpp"
#include "linalg.hpp"

namespace fpsocle {

// Sorted multiset of socle degrees d_1 <= ... <= d_ell of an artinian
// quotient P/I.
struct SocleProfile {
    std::vector<std::int64_t> degrees;
    std::size_t ell = 0;

    std::int64_t top() const {
        if (degrees.empty()) throw std::logic_error("socle profile is empty");
        return degrees.back();
    }

    bool operator==(const SocleProfile&) const = default;
};

namespace detail {

// Index of a monomial inside a degree slice of the standard-monomial basis.
inline std::map<std::vector<std::uint32_t>, std::size_t> index_basis(
    const std::vector<Monomial>& basis) {
    std::map<std::vector<std::uint32_t>, std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx.emplace(basis[k].exps, k);
    return idx;
}

} // namespace detail

// Socle degrees of P/I by degreewise linear algebra: at each degree d the
// socle dimension is the kernel dimension of the stacked multiplication
// maps x_i : (P/I)_d -> (P/I)_{d+|x_i|} on standard-monomial bases.
inline SocleProfile socle_profile(const Ideal& I) {
    if (I.is_unit_ideal()) throw std::invalid_argument("socle_profile: unit ideal");
    if (!is_m_primary(I)) throw std::invalid_argument("socle_profile: quotient is not artinian");
    const RingPtr& ring = I.ring();
    const RingSpec& R = *ring;
    const std::uint32_t p = R.p;
    const GroebnerBasis& gb = I.groebner();

    auto basis_by_deg = standard_monomials_by_degree(I);
    std::map<std::int64_t, std::map<std::vector<std::uint32_t>, std::size_t>> index;
    for (const auto& [d, ms] : basis_by_deg) index[d] = detail::index_basis(ms);

    SocleProfile prof;
    for (const auto& [d, ms] : basis_by_deg) {
        // rows: all target coordinates over every variable; cols: basis at d
        std::size_t rows = 0;
        std::vector<std::size_t> row_offset(R.nvars(), 0);
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            row_offset[i] = rows;
            auto it = basis_by_deg.find(d + R.weight(i));
            rows += it == basis_by_deg.end() ? 0 : it->second.size();
        }
        std::size_t kernel;
        if (rows == 0) {
            kernel = ms.size();  // multiplication lands in zero; everything is socle
        } else {
            FpMatrix mat(p, rows, ms.size());
            for (std::size_t i = 0; i < R.nvars(); ++i) {
                std::int64_t dtgt = d + R.weight(i);
                auto bt = basis_by_deg.find(dtgt);
                if (bt == basis_by_deg.end()) continue;
                std::vector<std::uint32_t> ve(R.nvars(), 0);
                ve[i] = 1;
                Monomial xi = make_monomial(R, std::move(ve));
                const auto& idx = index[dtgt];
                for (std::size_t col = 0; col < ms.size(); ++col) {
                    Polynomial xi_u =
                        Polynomial::monomial_term(ring, 1, mono_mul(ms[col], xi));
                    Polynomial nf = normal_form(xi_u, gb);
                    for (const auto& t : nf.terms()) {
                        auto f = idx.find(t.mono.exps);
                        if (f == idx.end())
                            throw std::logic_error("socle_profile: normal form left the basis");
                        mat.at(row_offset[i] + f->second, col) = t.coeff;
                    }
                }
            }
            kernel = mat.kernel_dim();
        }
        for (std::size_t k = 0; k < kernel; ++k) prof.degrees.push_back(d);
    }
    std::sort(prof.degrees.begin(), prof.degrees.end());
    prof.ell = prof.degrees.size();
    return prof;
}

// Largest socle degree; always equals the top nonzero degree of the Hilbert
// function of an artinian quotient, which we verify on every call.
inline std::int64_t top_socle_degree(const Ideal& I) {
    SocleProfile prof = socle_profile(I);
    std::int64_t hilb_top = hilbert_function(I).top_degree();
    if (prof.top() != hilb_top)
        throw std::logic_error("top_socle_degree: socle top disagrees with Hilbert support");
    return prof.top();
}

inline bool is_gorenstein_artinian(const Ideal& I) { return socle_profile(I).ell == 1; }

struct AnnDualityResult {
    bool holds = false;
    std::int64_t delta = 0;
    std::vector<std::int64_t> lhs;  // min generator degrees of (A : I) mod A
    std::vector<std::int64_t> rhs;  // {delta - d_i} over socle degrees of P/I
};

// Gorenstein duality check: for A artinian Gorenstein with socle degree
// delta and A ⊆ I, the minimal generators of (A : I)/A sit in degrees
// {delta - d_i} where d_i are the socle degrees of P/I.
inline AnnDualityResult ann_duality_check(const Ideal& A, const Ideal& I) {
    require_same_ring(A, I, "ann_duality_check");
    SocleProfile profA = socle_profile(A);
    if (profA.ell != 1)
        throw std::invalid_argument("ann_duality_check: A is not Gorenstein artinian");
    if (!ideal_subset(A, I)) throw std::invalid_argument("ann_duality_check: A is not contained in I");

    AnnDualityResult r;
    r.delta = profA.top();
    Ideal K = colon(A, I);
    r.lhs = min_gen_degrees_mod(K, A);
    for (std::int64_t d : socle_profile(I).degrees) r.rhs.push_back(r.delta - d);
    std::sort(r.rhs.begin(), r.rhs.end());
    r.holds = r.lhs == r.rhs;
    return r;
}

} // namespace fpsocle
