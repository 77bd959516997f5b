#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace fpsocle {

struct Term {
    std::uint32_t coeff = 0;  // in (0, p) once normalized
    Monomial mono;

    bool operator==(const Term&) const = default;
};

// Sparse polynomial over F_p, terms strictly descending in the ring's
// monomial order. The zero polynomial has no terms. Immutable by
// convention: every operation returns a fresh value.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, std::int64_t c) {
        Polynomial f(ring);
        std::uint32_t cc = fp_reduce(c, ring->p);
        if (cc) f.terms_.push_back({cc, monomial_one(*ring)});
        return f;
    }

    static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        if (i >= ring->nvars()) throw std::invalid_argument("polynomial: variable index out of range");
        std::vector<std::uint32_t> e(ring->nvars(), 0);
        e[i] = 1;
        Polynomial f(ring);
        f.terms_.push_back({1 % ring->p, make_monomial(*ring, std::move(e))});
        return f;
    }

    static Polynomial monomial_term(RingPtr ring, std::int64_t c, Monomial m) {
        Polynomial f(ring);
        std::uint32_t cc = fp_reduce(c, ring->p);
        if (cc) f.terms_.push_back({cc, std::move(m)});
        return f;
    }

    // Normalizing constructor: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> raw) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> acc;
        for (auto& t : raw) {
            auto& c = acc[t.mono.exps];
            c = fp_add(c, t.coeff % ring->p, ring->p);
        }
        Polynomial f(ring);
        for (auto& [exps, c] : acc)
            if (c) f.terms_.push_back({c, make_monomial(*ring, exps)});
        std::sort(f.terms_.begin(), f.terms_.end(), [&](const Term& a, const Term& b) {
            return mono_cmp(*ring, a.mono, b.mono) > 0;
        });
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("polynomial: zero has no leading term");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        f.check_same_ring(g);
        const RingPtr& R = f.ring_ ? f.ring_ : g.ring_;
        Polynomial r(R);
        auto a = f.terms_.begin(), ae = f.terms_.end();
        auto b = g.terms_.begin(), be = g.terms_.end();
        while (a != ae && b != be) {
            int c = mono_cmp(*R, a->mono, b->mono);
            if (c > 0) {
                r.terms_.push_back(*a++);
            } else if (c < 0) {
                r.terms_.push_back(*b++);
            } else {
                std::uint32_t s = fp_add(a->coeff, b->coeff, R->p);
                if (s) r.terms_.push_back({s, a->mono});
                ++a; ++b;
            }
        }
        r.terms_.insert(r.terms_.end(), a, ae);
        r.terms_.insert(r.terms_.end(), b, be);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = fp_neg(t.coeff, ring_->p);
        return r;
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

    // Multiply by coefficient*monomial; the workhorse of division and S-pairs.
    Polynomial times_term(std::uint32_t c, const Monomial& m) const {
        Polynomial r(ring_);
        c %= ring_->p;
        if (c == 0 || terms_.empty()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({fp_mul(t.coeff, c, ring_->p), mono_mul(t.mono, m)});
        return r;
    }

    Polynomial scaled(std::uint32_t c) const {
        if (ring_) return times_term(c, monomial_one(*ring_));
        return Polynomial();
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_same_ring(g);
        const RingPtr& R = f.ring_ ? f.ring_ : g.ring_;
        std::map<std::vector<std::uint32_t>, std::pair<std::uint32_t, Monomial>> acc;
        for (const auto& a : f.terms_) {
            for (const auto& b : g.terms_) {
                Monomial m = mono_mul(a.mono, b.mono);
                std::uint32_t c = fp_mul(a.coeff, b.coeff, R->p);
                auto it = acc.find(m.exps);
                if (it == acc.end()) {
                    std::vector<std::uint32_t> key = m.exps;
                    acc.emplace(std::move(key), std::make_pair(c, std::move(m)));
                } else {
                    it->second.first = fp_add(it->second.first, c, R->p);
                }
            }
        }
        Polynomial r(R);
        for (auto& [_, cm] : acc)
            if (cm.first) r.terms_.push_back({cm.first, std::move(cm.second)});
        std::sort(r.terms_.begin(), r.terms_.end(), [&](const Term& x, const Term& y) {
            return mono_cmp(*R, x.mono, y.mono) > 0;
        });
        return r;
    }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return scaled(fp_inv(terms_.front().coeff, ring_->p));
    }

private:
    void check_same_ring(const Polynomial& g) const {
        if (terms_.empty() || g.terms_.empty()) {
            if (ring_ && g.ring_ && !same_ring(ring_, g.ring_))
                throw std::invalid_argument("polynomial: ring mismatch");
            return;
        }
        if (!same_ring(ring_, g.ring_)) throw std::invalid_argument("polynomial: ring mismatch");
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline bool is_homogeneous(const Polynomial& f) {
    const auto& ts = f.terms();
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ts[i].mono.deg != ts[0].mono.deg) return false;
    return true;
}

// Common weighted degree of all terms, or nullopt when f is inhomogeneous.
// The zero polynomial has no degree.
inline std::optional<std::int64_t> weighted_degree(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("weighted_degree: zero polynomial");
    if (!is_homogeneous(f)) return std::nullopt;
    return f.terms()[0].mono.deg;
}

inline bool is_power_of(std::int64_t q, std::uint32_t p) {
    if (q < 1) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

// f^q for q a power of the characteristic. Computed term-wise: over F_p the
// Frobenius is additive, so (sum c_i m_i)^q = sum c_i^q m_i^q. q = 1 is the
// identity.
inline Polynomial poly_q_power(const Polynomial& f, std::int64_t q) {
    if (f.is_zero()) return f;
    const RingPtr& R = f.ring();
    if (q != 1 && !is_power_of(q, R->p))
        throw std::invalid_argument("poly_q_power: q is not a power of the characteristic");
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms())
        ts.push_back({fp_pow(t.coeff, static_cast<std::uint64_t>(q), R->p),
                      mono_pow(t.mono, static_cast<std::uint64_t>(q))});
    return Polynomial::from_terms(R, std::move(ts));
}

} // namespace fpsocle
