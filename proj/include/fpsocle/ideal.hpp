#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace fpsocle {

// Homogeneous ideal given by generators, with a lazily computed reduced
// Groebner basis. Copies share the write-once cache; the value itself is
// immutable, so concurrent use after construction is safe.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cell_(std::make_shared<Cell>()) {}

    Ideal(RingPtr ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), cell_(std::make_shared<Cell>()) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;  // zero generators contribute nothing
            if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal: ring mismatch");
            if (!is_homogeneous(g))
                throw std::invalid_argument("ideal: generator is not homogeneous");
            gens_.push_back(std::move(g));
        }
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis& groebner() const {
        std::call_once(cell_->flag, [this] { cell_->gb = buchberger(gens_, ring_); });
        return cell_->gb;
    }

    bool is_unit_ideal() const { return groebner().is_trivial_unit(); }

private:
    struct Cell {
        std::once_flag flag;
        GroebnerBasis gb;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cell> cell_;
};

inline Ideal zero_ideal(RingPtr ring) { return Ideal(std::move(ring)); }

inline Ideal unit_ideal(RingPtr ring) {
    std::vector<Polynomial> g{Polynomial::one(ring)};
    return Ideal(std::move(ring), std::move(g));
}

inline Ideal maximal_ideal(RingPtr ring) {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < ring->nvars(); ++i) g.push_back(Polynomial::variable(ring, i));
    return Ideal(std::move(ring), std::move(g));
}

inline void require_same_ring(const Ideal& I, const Ideal& J, const char* what) {
    if (!same_ring(I.ring(), J.ring()))
        throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

inline bool ideal_member(const Polynomial& f, const Ideal& I) {
    if (!f.is_zero() && !same_ring(f.ring(), I.ring()))
        throw std::invalid_argument("ideal_member: ring mismatch");
    return normal_form(f, I.groebner()).is_zero();
}

inline bool ideal_subset(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J, "ideal_subset");
    for (const auto& g : I.generators())
        if (!ideal_member(g, J)) return false;
    return true;
}

// Reduced Groebner bases are unique, so ideal equality is element-wise
// comparison of the two bases.
inline bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J, "ideal_equal");
    return I.groebner().elements == J.groebner().elements;
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J, "ideal_sum");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J, "ideal_product");
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) gens.push_back(f * g);
    return Ideal(I.ring(), std::move(gens));
}

// Frobenius power I^[q]: the ideal of q-th powers of the generators,
// q = p^e with e >= 1. Independent of the generating set over the
// polynomial ring.
inline Ideal frobenius_power(const Ideal& I, std::int64_t q) {
    const std::uint32_t p = I.ring()->p;
    if (q < p || !is_power_of(q, p))
        throw std::invalid_argument("frobenius_power: q must be p^e with e >= 1");
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(poly_q_power(g, q));
    return Ideal(I.ring(), std::move(gens));
}

namespace detail {

inline const std::string kElimVarName = "@t";

// Ring with one auxiliary elimination variable prepended and a block order
// that eliminates it. The auxiliary variable gets weight 1; intermediate
// polynomials need not be homogeneous.
inline RingPtr elimination_ring(const RingPtr& ring) {
    std::vector<Variable> vars;
    vars.push_back({kElimVarName, 1});
    vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
    return make_ring(ring->p, std::move(vars), MonomialOrder{OrderKind::BlockElim, 1});
}

inline Polynomial lift_to_elim(const Polynomial& f, const RingPtr& ext) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(t.mono.exps.size() + 1);
        e.push_back(0);
        e.insert(e.end(), t.mono.exps.begin(), t.mono.exps.end());
        ts.push_back({t.coeff, make_monomial(*ext, std::move(e))});
    }
    return Polynomial::from_terms(ext, std::move(ts));
}

inline Polynomial drop_elim_var(const Polynomial& f, const RingPtr& ring) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> e(t.mono.exps.begin() + 1, t.mono.exps.end());
        ts.push_back({t.coeff, make_monomial(*ring, std::move(e))});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

inline bool uses_elim_var(const Polynomial& f) {
    for (const auto& t : f.terms())
        if (t.mono.exps[0]) return true;
    return false;
}

} // namespace detail

// I ∩ J via a single elimination variable t: the t-free part of a reduced
// Groebner basis of t*I + (1-t)*J under an order eliminating t.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J, "intersect");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return zero_ideal(I.ring());

    RingPtr ext = detail::elimination_ring(I.ring());
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::one(ext) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * detail::lift_to_elim(f, ext));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * detail::lift_to_elim(g, ext));

    GroebnerBasis gb = buchberger(gens, ext);
    std::vector<Polynomial> result;
    for (const auto& h : gb.elements)
        if (!detail::uses_elim_var(h)) result.push_back(detail::drop_elim_var(h, I.ring()));
    return Ideal(I.ring(), std::move(result));
}

// Ideal quotient I : J = {f : f*J ⊆ I}, as the intersection over the
// generators g of J of (1/g)*(I ∩ (g)).
inline Ideal colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J, "colon");
    if (J.is_zero_ideal()) throw std::invalid_argument("colon: divisor ideal is zero");
    bool first = true;
    Ideal acc = zero_ideal(I.ring());
    for (const auto& g : J.generators()) {
        std::vector<Polynomial> principal{g};
        Ideal cap = intersect(I, Ideal(I.ring(), std::move(principal)));
        std::vector<Polynomial> quots;
        for (const auto& h : cap.generators()) {
            auto q = exact_divide(h, g);
            if (!q) throw std::logic_error("colon: inexact division in I ∩ (g)");
            quots.push_back(std::move(*q));
        }
        Ideal part(I.ring(), std::move(quots));
        acc = first ? part : intersect(acc, part);
        first = false;
    }
    return acc;
}

// -------- combinatorics on the leading-term staircase --------

// Krull dimension of P/I from the leading-term ideal: the size of the
// largest variable subset S such that no leading monomial is supported
// inside S.
inline int krull_dim(const Ideal& I) {
    const GroebnerBasis& gb = I.groebner();
    if (gb.is_trivial_unit()) throw std::invalid_argument("krull_dim: unit ideal");
    const std::size_t n = I.ring()->nvars();
    std::vector<const Monomial*> lms;
    for (const auto& g : gb.elements) lms.push_back(&g.leading_monomial());

    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        bool independent = true;
        for (const auto* m : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m->exps[i] && !(mask & (1ull << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

// A homogeneous sequence is regular on P iff the dimension drops by one per
// element. Degree-zero (constant) entries never qualify: graded regular
// sequences live in the irrelevant maximal ideal.
inline bool is_regular_sequence(const RingPtr& ring, const std::vector<Polynomial>& fs) {
    for (const auto& f : fs) {
        if (f.is_zero()) throw std::invalid_argument("is_regular_sequence: zero entry");
        auto d = weighted_degree(f);
        if (!d) throw std::invalid_argument("is_regular_sequence: non-homogeneous entry");
        if (*d == 0) return false;
    }
    if (fs.size() > ring->nvars()) return false;
    Ideal I(ring, fs);
    return krull_dim(I) == static_cast<int>(ring->nvars()) - static_cast<int>(fs.size());
}

// I is m-primary iff P/I is finite dimensional over k, i.e. the staircase
// has a pure power of every variable.
inline bool is_m_primary(const Ideal& I) {
    if (I.is_unit_ideal()) throw std::invalid_argument("is_m_primary: unit ideal");
    if (I.ring()->nvars() == 0) return true;
    return krull_dim(I) == 0;
}

// Smallest a with x_i^a in the leading-term ideal, for each i; only defined
// for m-primary ideals.
inline std::vector<std::uint32_t> staircase_caps(const Ideal& I) {
    const std::size_t n = I.ring()->nvars();
    std::vector<std::uint32_t> caps(n, 0);
    for (const auto& g : I.groebner().elements) {
        const Monomial& m = g.leading_monomial();
        int support = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!m.exps[i]) continue;
            if (support >= 0) {
                support = -2;
                break;
            }
            support = static_cast<int>(i);
        }
        if (support >= 0) {
            std::uint32_t e = m.exps[support];
            if (!caps[support] || e < caps[support]) caps[support] = e;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!caps[i]) throw std::invalid_argument("staircase_caps: ideal is not m-primary");
    return caps;
}

namespace detail {

inline bool divisible_by_some_lm(const Monomial& m, const GroebnerBasis& gb) {
    for (const auto& g : gb.elements)
        if (mono_divides(g.leading_monomial(), m)) return true;
    return false;
}

template <typename F>
inline void walk_monomials_of_degree(const RingSpec& ring, std::int64_t d, F&& visit) {
    std::vector<std::uint32_t> exps(ring.nvars(), 0);
    // depth-first over exponent slots; weights >= 1 keep this finite
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rem) -> void {
        if (i + 1 == ring.nvars()) {
            std::int64_t w = ring.weight(i);
            if (rem % w == 0 && rem / w < static_cast<std::int64_t>(kMaxExponent)) {
                exps[i] = static_cast<std::uint32_t>(rem / w);
                visit(exps);
                exps[i] = 0;
            }
            return;
        }
        std::int64_t w = ring.weight(i);
        for (std::int64_t e = 0; e * w <= rem; ++e) {
            exps[i] = static_cast<std::uint32_t>(e);
            self(self, i + 1, rem - e * w);
        }
        exps[i] = 0;
    };
    if (ring.nvars() == 0) {
        if (d == 0) visit(exps);
        return;
    }
    if (d >= 0) rec(rec, 0, d);
}

} // namespace detail

// Monomials of P outside the leading-term ideal, in a fixed weighted degree;
// a k-basis of (P/I) in that degree.
inline std::vector<Monomial> standard_monomials_of_degree(const Ideal& I, std::int64_t d) {
    const GroebnerBasis& gb = I.groebner();
    std::vector<Monomial> out;
    detail::walk_monomials_of_degree(*I.ring(), d, [&](const std::vector<std::uint32_t>& e) {
        Monomial m = make_monomial(*I.ring(), e);
        if (!detail::divisible_by_some_lm(m, gb)) out.push_back(std::move(m));
    });
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_cmp(*I.ring(), a, b) > 0;
    });
    return out;
}

inline std::int64_t monomial_count_of_degree(const RingSpec& ring, std::int64_t d) {
    std::int64_t c = 0;
    detail::walk_monomials_of_degree(ring, d, [&](const std::vector<std::uint32_t>&) { ++c; });
    return c;
}

// dim_k of the degree-d slice of the ideal (not the quotient).
inline std::int64_t ideal_dim_at_degree(const Ideal& I, std::int64_t d) {
    return monomial_count_of_degree(*I.ring(), d) -
           static_cast<std::int64_t>(standard_monomials_of_degree(I, d).size());
}

struct HilbertFunction {
    std::map<std::int64_t, std::int64_t> values;  // degree -> dim_k (P/I)_degree
    std::int64_t total = 0;

    std::int64_t top_degree() const {
        return values.empty() ? -1 : values.rbegin()->first;
    }
};

// All standard monomials of an m-primary ideal, grouped by weighted degree.
inline std::map<std::int64_t, std::vector<Monomial>> standard_monomials_by_degree(const Ideal& I) {
    const GroebnerBasis& gb = I.groebner();
    std::vector<std::uint32_t> caps = staircase_caps(I);
    const RingSpec& ring = *I.ring();
    const std::size_t n = ring.nvars();
    std::map<std::int64_t, std::vector<Monomial>> by_deg;
    std::vector<std::uint32_t> exps(n, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            Monomial m = make_monomial(ring, exps);
            if (!detail::divisible_by_some_lm(m, gb)) by_deg[m.deg].push_back(std::move(m));
            return;
        }
        for (std::uint32_t e = 0; e < caps[i]; ++e) {
            exps[i] = e;
            self(self, i + 1);
        }
        exps[i] = 0;
    };
    rec(rec, 0);
    for (auto& [d, ms] : by_deg)
        std::sort(ms.begin(), ms.end(),
                  [&](const Monomial& a, const Monomial& b) { return mono_cmp(ring, a, b) > 0; });
    return by_deg;
}

inline HilbertFunction hilbert_function(const Ideal& I) {
    if (!is_m_primary(I))
        throw std::invalid_argument("hilbert_function: ideal is not m-primary");
    HilbertFunction h;
    for (const auto& [d, ms] : standard_monomials_by_degree(I)) {
        h.values[d] = static_cast<std::int64_t>(ms.size());
        h.total += static_cast<std::int64_t>(ms.size());
    }
    return h;
}

// Degrees (with multiplicity) of a minimal homogeneous generating set:
// graded Nakayama, multiplicity at degree d = dim I_d - dim (m*I)_d.
inline std::vector<std::int64_t> min_gen_degrees(const Ideal& I) {
    if (I.is_zero_ideal()) throw std::invalid_argument("min_gen_degrees: zero ideal");
    const RingPtr& ring = I.ring();
    std::vector<Polynomial> mI_gens;
    for (const auto& g : I.generators())
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            mI_gens.push_back(Polynomial::variable(ring, i) * g);
    Ideal mI(ring, std::move(mI_gens));

    std::int64_t dmax = 0;
    for (const auto& g : I.groebner().elements) dmax = std::max(dmax, g.leading_monomial().deg);

    std::vector<std::int64_t> out;
    for (std::int64_t d = 0; d <= dmax; ++d) {
        std::int64_t mult = ideal_dim_at_degree(I, d) - ideal_dim_at_degree(mI, d);
        for (std::int64_t k = 0; k < mult; ++k) out.push_back(d);
    }
    return out;
}

// Degrees of minimal generators of K/A as a module over P/A, for A ⊆ K:
// multiplicity at degree d = dim K_d - dim (m*K + A)_d.
inline std::vector<std::int64_t> min_gen_degrees_mod(const Ideal& K, const Ideal& A) {
    require_same_ring(K, A, "min_gen_degrees_mod");
    if (K.is_zero_ideal()) throw std::invalid_argument("min_gen_degrees_mod: zero ideal");
    const RingPtr& ring = K.ring();
    std::vector<Polynomial> gens;
    for (const auto& g : K.generators())
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            gens.push_back(Polynomial::variable(ring, i) * g);
    gens.insert(gens.end(), A.generators().begin(), A.generators().end());
    Ideal mKA(ring, std::move(gens));

    std::int64_t dmax = 0;
    for (const auto& g : K.groebner().elements) dmax = std::max(dmax, g.leading_monomial().deg);

    std::vector<std::int64_t> out;
    for (std::int64_t d = 0; d <= dmax; ++d) {
        std::int64_t mult = ideal_dim_at_degree(K, d) - ideal_dim_at_degree(mKA, d);
        for (std::int64_t k = 0; k < mult; ++k) out.push_back(d);
    }
    return out;
}

} // namespace fpsocle
