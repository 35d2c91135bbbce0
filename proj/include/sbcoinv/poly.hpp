#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over the rationals.
 *
 * Monomials are dense exponent vectors. Terms are kept in lexicographic order
 * with x_1 < x_2 < ... < x_n, i.e. the exponent of x_n is compared first.
 * Text format: `c*x1^a1*...*xn^an` terms joined by + or -, e.g.
 * `4*x2^3 + 2*x2*x3^2 + 2*x2*x4^2`.
 */

#include "combinatorics.hpp"
#include "rational.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbcoinv {

inline constexpr int kMaxVars = 8;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint8_t n = 0;

    Mono() = default;
    explicit Mono(int rank) : n(static_cast<std::uint8_t>(rank)) {
        if (rank < 0 || rank > kMaxVars) throw std::invalid_argument("Mono: rank out of range");
    }
    Mono(int rank, std::initializer_list<int> exps) : Mono(rank) {
        if (static_cast<int>(exps.size()) != rank) throw std::invalid_argument("Mono: wrong exponent count");
        int i = 0;
        for (int a : exps) e[i++] = static_cast<std::uint8_t>(a);
    }

    static Mono var(int rank, int i, int power = 1) {
        Mono m(rank);
        m.e[i - 1] = static_cast<std::uint8_t>(power);
        return m;
    }

    /// Exponent of x_i, 1-based.
    int exp(int i) const { return e[i - 1]; }

    int deg() const {
        int d = 0;
        for (int i = 0; i < n; ++i) d += e[i];
        return d;
    }

    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r(a.n);
        for (int i = 0; i < a.n; ++i) {
            int s = a.e[i] + b.e[i];
            if (s > 255) throw std::overflow_error("Mono: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }

    bool divides(const Mono& b) const {
        for (int i = 0; i < n; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    /// b / this, assuming divides(b).
    Mono quotient_of(const Mono& b) const {
        Mono r(n);
        for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint8_t>(b.e[i] - e[i]);
        return r;
    }

    friend bool operator==(const Mono& a, const Mono& b) { return a.n == b.n && a.e == b.e; }

    /// Lex with x_1 < ... < x_n.
    friend bool operator<(const Mono& a, const Mono& b) {
        for (int i = a.n - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const noexcept {
        std::uint64_t h = m.n;
        for (int i = 0; i < m.n; ++i) h = h * 131 + m.e[i];
        return std::hash<std::uint64_t>{}(h);
    }
};

/// All monomials of total degree d in n variables, ascending in the canonical order.
inline std::vector<Mono> monomials_of_degree(int n, int d) {
    std::vector<Mono> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    Mono cur(n);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == 0) {
            cur.e[0] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            cur.e[var] = static_cast<std::uint8_t>(a);
            rec(var - 1, left - a);
        }
    };
    rec(n - 1, d);
    return out;
}

class Poly {
public:
    using Terms = std::map<Mono, Rational>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {
        if (n < 0 || n > kMaxVars) throw std::invalid_argument("Poly: rank out of range");
    }

    static Poly constant(int n, const Rational& c) {
        Poly p(n);
        p.add_term(Mono(n), c);
        return p;
    }
    static Poly var(int n, int i) {
        if (i < 1 || i > n) throw std::invalid_argument("Poly::var: index outside [n]");
        Poly p(n);
        p.add_term(Mono::var(n, i), 1);
        return p;
    }
    static Poly monomial(const Mono& m, const Rational& c = 1) {
        Poly p(m.n);
        p.add_term(m, c);
        return p;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Mono& m, const Rational& c) {
        if (m.n != n_) throw std::invalid_argument("Poly: monomial rank mismatch");
        if (sbcoinv::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sbcoinv::is_zero(it->second)) terms_.erase(it);
        }
    }

    Rational coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Max total degree; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& kv : terms_) d = std::max(d, kv.first.deg());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.deg();
        for (const auto& kv : terms_)
            if (kv.first.deg() != d) return false;
        return true;
    }

    /// Lex-leading term (largest monomial). Requires non-zero.
    const std::pair<const Mono, Rational>& leading() const {
        if (terms_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
        return *terms_.rbegin();
    }

    Poly& operator+=(const Poly& o) {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_rank(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (sbcoinv::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_rank(b);
        Poly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    Poly pow(int k) const {
        Poly r = constant(n_, 1);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// j-fold partial derivative in x_i.
    Poly partial(int i, int j = 1) const {
        if (i < 1 || i > n_) throw std::invalid_argument("Poly::partial: index outside [n]");
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            int a = m.e[i - 1];
            if (a < j) continue;
            Rational f = c;
            for (int t = 0; t < j; ++t) f *= a - t;
            Mono mm = m;
            mm.e[i - 1] = static_cast<std::uint8_t>(a - j);
            r.add_term(mm, f);
        }
        return r;
    }

    /// Substitute x_p -> s * x_q (q may be 0 meaning x_p -> 0).
    Poly substitute(int p, int q, int s) const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            int a = m.e[p - 1];
            if (q == 0) {
                if (a == 0) r.add_term(m, c);
                continue;
            }
            Mono mm = m;
            mm.e[p - 1] = 0;
            mm.e[q - 1] = static_cast<std::uint8_t>(mm.e[q - 1] + a);
            r.add_term(mm, (s < 0 && (a % 2 == 1)) ? Rational(-c) : c);
        }
        return r;
    }

    /// Exact quotient this / d, or nullopt when d does not divide.
    std::optional<Poly> divide_exact(const Poly& d) const {
        check_rank(d);
        if (d.is_zero()) throw std::invalid_argument("Poly::divide_exact: division by zero");
        Poly rem = *this;
        Poly quo(n_);
        const auto& [lm, lc] = d.leading();
        while (!rem.is_zero()) {
            const auto& [rm, rc] = rem.leading();
            if (!lm.divides(rm)) return std::nullopt;
            Poly t = monomial(lm.quotient_of(rm), rc / lc);
            quo += t;
            rem -= t * d;
        }
        return quo;
    }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void check_rank(const Poly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("Poly: ambient rank mismatch");
    }

    int n_ = 0;
    Terms terms_;
};

namespace detail {

inline void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body) {
    Rational a = abs(c);
    if (first) {
        if (sgn(c) < 0) os << "-";
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (body.empty()) {
        os << a.get_str();
    } else if (a == 1) {
        os << body;
    } else {
        os << a.get_str() << "*" << body;
    }
}

/// One parsed term: coefficient, bosonic exponents, fermionic letters in written order.
struct ParsedTerm {
    Rational coeff;
    Mono mono;
    std::vector<int> thetas;
};

class TermParser {
public:
    TermParser(std::string_view text, int n, bool allow_theta) : s_(text), n_(n), allow_theta_(allow_theta) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> out;
        skip();
        if (pos_ >= s_.size()) fail("empty input");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (s_[pos_] == '-') ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            out.push_back(term(sign));
            skip();
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }
    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }
    ParsedTerm term(int sign) {
        ParsedTerm t{Rational(sign), Mono(n_), {}};
        bool more = true;
        while (more) {
            factor(t);
            skip();
            more = peek() == '*';
            if (more) {
                ++pos_;
                skip();
            }
        }
        return t;
    }
    void factor(ParsedTerm& t) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits());
            Integer den(1);
            skip();
            if (peek() == '/') {
                ++pos_;
                den = Integer(digits());
                if (den == 0) fail("zero denominator");
            }
            Rational v(num, den);
            v.canonicalize();
            t.coeff *= v;
        } else if (c == 'x' || c == 't') {
            ++pos_;
            int idx = std::stoi(digits());
            if (idx < 1 || idx > n_) fail("variable index outside [n]");
            int power = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                power = std::stoi(digits());
            }
            if (c == 'x') {
                int a = t.mono.e[idx - 1] + power;
                if (a > 255) fail("exponent too large");
                t.mono.e[idx - 1] = static_cast<std::uint8_t>(a);
            } else {
                if (!allow_theta_) fail("fermionic variable in bosonic polynomial");
                for (int k = 0; k < power; ++k) t.thetas.push_back(idx);
            }
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int n_;
    bool allow_theta_;
};

}  // namespace detail

inline std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        detail::append_term(os, first, c, m.deg() == 0 ? "" : m.to_string());
        first = false;
    }
    return os.str();
}

inline Poly parse_poly(std::string_view text, int n) {
    Poly p(n);
    for (auto& t : detail::TermParser(text, n, false).parse()) p.add_term(t.mono, t.coeff);
    return p;
}

/// Complete homogeneous symmetric polynomial h_r in {x_s : s in S}; h_0 = 1, h_r = 0 for r < 0.
inline Poly h_complete(int r, const SubsetJ& S) {
    const int n = S.n();
    Poly p(n);
    if (r < 0) return p;
    const auto& idx = S.elems();
    const int k = static_cast<int>(idx.size());
    if (r == 0) return Poly::constant(n, 1);
    if (k == 0) return p;
    for (const Mono& small : monomials_of_degree(k, r)) {
        Mono m(n);
        for (int t = 0; t < k; ++t) m.e[idx[t] - 1] = small.e[t];
        p.add_term(m, 1);
    }
    return p;
}

/// h_r with every variable replaced by its square.
inline Poly h2(int r, const SubsetJ& S) {
    Poly h = h_complete(r, S);
    Poly p(S.n());
    for (const auto& [m, c] : h.terms()) {
        Mono sq(m.n);
        for (int i = 0; i < m.n; ++i) sq.e[i] = static_cast<std::uint8_t>(2 * m.e[i]);
        p.add_term(sq, c);
    }
    return p;
}

/// p_k = sum_i x_i^k.
inline Poly power_sum(int k, int n) {
    if (k < 1) throw std::invalid_argument("power_sum: k must be positive");
    Poly p(n);
    for (int i = 1; i <= n; ++i) p.add_term(Mono::var(n, i, k), 1);
    return p;
}

/// Falling-factorial coefficient of x^a acting as a differential operator on x^b.
inline std::optional<std::pair<Rational, Mono>> apply_monomial_operator(const Mono& a, const Mono& b) {
    if (!a.divides(b)) return std::nullopt;
    Integer f = 1;
    for (int i = 0; i < a.n; ++i)
        for (int t = 0; t < a.e[i]; ++t) f *= b.e[i] - t;
    return std::pair(Rational(f), a.quotient_of(b));
}

/// f ⊙ g: substitute x_i -> d/dx_i in f and apply to g.
inline Poly odot(const Poly& f, const Poly& g) {
    if (f.n() != g.n()) throw std::invalid_argument("odot: ambient rank mismatch");
    Poly r(g.n());
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms())
            if (auto t = apply_monomial_operator(ma, mb)) r.add_term(t->second, ca * cb * t->first);
    return r;
}

/// Determinant of a square matrix of polynomials by cofactor expansion along the first row.
inline Poly poly_det(const std::vector<std::vector<Poly>>& m, int n) {
    const std::size_t k = m.size();
    if (k == 0) return Poly::constant(n, 1);
    if (k == 1) return m[0][0];
    Poly det(n);
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Poly>> sub;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Poly> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        Poly term = m[0][c] * poly_det(sub, n);
        if (c % 2 == 0) det += term;
        else det -= term;
    }
    return det;
}

/// Equality up to a global sign: +1, -1, or 0 when neither holds.
inline int sign_relation(const Poly& a, const Poly& b) {
    if (a == b) return 1;
    if (a == -b) return -1;
    return 0;
}

}  // namespace sbcoinv
