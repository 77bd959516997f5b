#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace fpsocle {

// Polynomial expression grammar (EBNF, whitespace free between any tokens):
//
//   expr       = [ sign ] term { sign term } ;
//   sign       = "+" | "-" ;
//   term       = factor { [ "*" ] factor } ;        (* juxtaposition multiplies *)
//   factor     = variables | base [ "^" number ] ;
//   base       = number | "(" expr ")" ;
//   variables  = identifier [ "^" number ] ;
//   identifier = letter { letter | digit | "_" } ;
//   number     = digit { digit } ;                  (* coefficients reduce mod p *)
//
// An identifier is a declared variable name, or a concatenation of declared
// names ("xy" reads as x*y when x and y are variables and "xy" is not). An
// exponent after an identifier run binds to its last variable: "2xy^3" is
// 2*x*y^3. Exponents must be positive integers. The printer always emits
// explicit "*" and "^", coefficients as canonical representatives in [0, p),
// and terms in descending monomial order, so printed output re-parses to the
// same polynomial.

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error("at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({TokKind::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({TokKind::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        TokKind k;
        switch (c) {
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '^': k = TokKind::Caret; break;
            case '(': k = TokKind::LParen; break;
            case ')': k = TokKind::RParen; break;
            default: throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({TokKind::End, "", s.size()});
    return out;
}

// Decompose an identifier into declared variable names (greedy, with
// backtracking), so "xy" reads as x*y when x and y are variables but "xy"
// is not.
inline bool split_ident(const RingSpec& ring, const std::string& s, std::size_t from,
                        std::vector<int>& out) {
    if (from == s.size()) return true;
    for (std::size_t len = s.size() - from; len >= 1; --len) {
        int vi = ring.var_index(s.substr(from, len));
        if (vi < 0) continue;
        out.push_back(vi);
        if (split_ident(ring, s, from + len, out)) return true;
        out.pop_back();
    }
    return false;
}

class Parser {
public:
    Parser(const std::string& text, RingPtr ring)
        : toks_(lex(text)), ring_(std::move(ring)) {}

    Polynomial run() {
        if (peek().kind == TokKind::End) throw parse_error("empty expression", 0);
        Polynomial f = expr();
        if (peek().kind != TokKind::End)
            throw parse_error("unexpected trailing input '" + peek().text + "'", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token eat() { return toks_[pos_++]; }

    Polynomial expr() {
        bool neg = false;
        if (peek().kind == TokKind::Plus) {
            eat();
        } else if (peek().kind == TokKind::Minus) {
            eat();
            neg = true;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            bool minus = eat().kind == TokKind::Minus;
            Polynomial t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    static bool starts_factor(TokKind k) {
        return k == TokKind::Number || k == TokKind::Ident || k == TokKind::LParen;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            if (peek().kind == TokKind::Star) {
                eat();
                if (!starts_factor(peek().kind))
                    throw parse_error("expected factor after '*'", peek().pos);
                acc = acc * factor();
            } else if (starts_factor(peek().kind)) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    std::uint64_t number(const Token& t, std::uint64_t limit, const char* what) {
        std::uint64_t v = 0;
        for (char c : t.text) {
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > limit) throw parse_error(std::string(what) + " overflow", t.pos);
        }
        return v;
    }

    Polynomial power(Polynomial b) {
        if (peek().kind != TokKind::Caret) return b;
        eat();
        if (peek().kind != TokKind::Number)
            throw parse_error("expected integer exponent after '^'", peek().pos);
        Token t = eat();
        std::uint64_t e = number(t, kMaxExponent - 1, "exponent");
        if (e == 0) throw parse_error("exponent must be positive", t.pos);
        Polynomial r = Polynomial::one(ring_);
        Polynomial sq = std::move(b);
        while (e > 0) {
            if (e & 1) r = r * sq;
            e >>= 1;
            if (e) sq = sq * sq;
        }
        return r;
    }

    Polynomial factor() {
        // In a juxtaposed run of variables a trailing exponent binds to the
        // last variable only: "2xy^3" is 2*x*y^3, not 2*(x*y)^3.
        if (peek().kind == TokKind::Ident) {
            Token id = eat();
            std::vector<int> vars;
            if (!detail::split_ident(*ring_, id.text, 0, vars))
                throw parse_error("unknown variable '" + id.text + "'", id.pos);
            Polynomial acc = Polynomial::one(ring_);
            for (std::size_t k = 0; k + 1 < vars.size(); ++k)
                acc = acc * Polynomial::variable(ring_, static_cast<std::size_t>(vars[k]));
            Polynomial last = Polynomial::variable(ring_, static_cast<std::size_t>(vars.back()));
            return acc * power(std::move(last));
        }
        return power(base());
    }

    Polynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::Number: {
                Token n = eat();
                // coefficients reduce mod p; parse with headroom then reduce
                std::uint64_t v = 0;
                for (char c : n.text) {
                    v = v * 10 + static_cast<std::uint64_t>(c - '0');
                    if (v > (1ull << 62)) v %= ring_->p;
                }
                return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->p));
            }
            case TokKind::LParen: {
                eat();
                Polynomial inner = expr();
                if (peek().kind != TokKind::RParen)
                    throw parse_error("expected ')'", peek().pos);
                eat();
                return inner;
            }
            default:
                throw parse_error("expected number, variable or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_poly(const std::string& text, RingPtr ring) {
    return detail::Parser(text, std::move(ring)).run();
}

inline std::string to_string(const Monomial& m, const RingSpec& ring) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!first) os << '*';
        os << ring.vars[i].name;
        if (m.exps[i] > 1) os << '^' << m.exps[i];
        first = false;
    }
    if (first) os << '1';
    return os.str();
}

// Canonical printer: byte-stable for identical inputs, inverse of the parser.
inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const RingSpec& ring = *f.ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.mono.is_one()) {
            os << t.coeff;
        } else if (t.coeff == 1) {
            os << to_string(t.mono, ring);
        } else {
            os << t.coeff << '*' << to_string(t.mono, ring);
        }
    }
    return os.str();
}

} // namespace fpsocle
