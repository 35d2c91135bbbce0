#pragma once

/**
 * @file superspace.hpp
 * @brief The superspace ring: polynomials in x_1..x_n tensored with the exterior
 * algebra on theta_1..theta_n.
 *
 * A fermionic word theta_{j_1}...theta_{j_r} is stored as the bitmask of
 * {j_1 < ... < j_r}; any reordering sign is absorbed into the coefficient at
 * the point the term is created, so every stored word is ascending.
 */

#include "combinatorics.hpp"
#include "poly.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbcoinv {

using Word = std::uint32_t;

inline int word_size(Word w) { return std::popcount(w); }
inline Word letter(int i) { return Word{1} << (i - 1); }

/// Canonical word order: by length, then lexicographically on the ascending letter lists.
inline bool word_less(Word a, Word b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    Word x = a ^ b;
    if (x == 0) return false;
    Word low = x & (~x + 1);
    return (a & low) != 0;
}

/// Sign of theta_A * theta_B rearranged into ascending order (0 if A and B overlap).
inline int merge_sign(Word a, Word b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Word rest = b; rest; rest &= rest - 1) {
        int bit = std::countr_zero(rest);
        inversions += std::popcount(a >> (bit + 1));
    }
    return (inversions % 2) ? -1 : 1;
}

/// Sign of the permutation sorting a sequence of distinct letters (0 on a repeat).
inline std::pair<int, Word> sort_letters(const std::vector<int>& letters) {
    Word w = 0;
    int inversions = 0;
    for (std::size_t s = 0; s < letters.size(); ++s) {
        Word b = letter(letters[s]);
        if (w & b) return {0, 0};
        inversions += std::popcount(w >> letters[s]);
        w |= b;
    }
    return {(inversions % 2) ? -1 : 1, w};
}

inline std::string word_to_string(Word w) {
    std::string s;
    for (Word rest = w; rest; rest &= rest - 1) {
        if (!s.empty()) s += "*";
        s += "t" + std::to_string(std::countr_zero(rest) + 1);
    }
    return s;
}

struct SuperKey {
    Word word = 0;
    Mono mono;

    friend bool operator==(const SuperKey& a, const SuperKey& b) { return a.word == b.word && a.mono == b.mono; }
    friend bool operator<(const SuperKey& a, const SuperKey& b) {
        if (a.word != b.word) return word_less(a.word, b.word);
        return a.mono < b.mono;
    }
};

struct SuperKeyHash {
    std::size_t operator()(const SuperKey& k) const noexcept { return MonoHash{}(k.mono) * 1000003u ^ k.word; }
};

class SuperElem {
public:
    using Terms = std::map<SuperKey, Rational>;

    SuperElem() = default;
    explicit SuperElem(int n) : n_(n) {
        if (n < 0 || n > kMaxVars) throw std::invalid_argument("SuperElem: rank out of range");
    }

    static SuperElem from_poly(const Poly& p, Word word = 0) {
        SuperElem s(p.n());
        for (const auto& [m, c] : p.terms()) s.add_term(m, word, c);
        return s;
    }
    static SuperElem theta(int n, int i) {
        SuperElem s(n);
        s.add_term(Mono(n), letter(i), 1);
        return s;
    }
    static SuperElem theta_word(int n, Word w) {
        SuperElem s(n);
        s.add_term(Mono(n), w, 1);
        return s;
    }
    static SuperElem constant(int n, const Rational& c) {
        SuperElem s(n);
        s.add_term(Mono(n), 0, c);
        return s;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Mono& m, Word w, const Rational& c) {
        if (m.n != n_) throw std::invalid_argument("SuperElem: monomial rank mismatch");
        if (n_ < 32 && (w >> n_) != 0) throw std::invalid_argument("SuperElem: theta index outside [n]");
        if (sbcoinv::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(SuperKey{w, m}, c);
        if (!inserted) {
            it->second += c;
            if (sbcoinv::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// The polynomial coefficient of theta_w.
    Poly coefficient(Word w) const {
        Poly p(n_);
        for (const auto& [k, c] : terms_)
            if (k.word == w) p.add_term(k.mono, c);
        return p;
    }

    std::set<Word, bool (*)(Word, Word)> words() const {
        std::set<Word, bool (*)(Word, Word)> out(word_less);
        for (const auto& kv : terms_) out.insert(kv.first.word);
        return out;
    }

    /// (bosonic degree, fermionic degree) if homogeneous and non-zero.
    std::optional<std::pair<int, int>> bidegree() const {
        if (terms_.empty()) return std::nullopt;
        const auto& first = terms_.begin()->first;
        std::pair<int, int> bd{first.mono.deg(), word_size(first.word)};
        for (const auto& kv : terms_)
            if (std::pair(kv.first.mono.deg(), word_size(kv.first.word)) != bd) return std::nullopt;
        return bd;
    }
    bool is_homogeneous() const { return terms_.empty() || bidegree().has_value(); }

    SuperElem& operator+=(const SuperElem& o) {
        check_rank(o);
        for (const auto& [k, c] : o.terms_) add_term(k.mono, k.word, c);
        return *this;
    }
    SuperElem& operator-=(const SuperElem& o) {
        check_rank(o);
        for (const auto& [k, c] : o.terms_) add_term(k.mono, k.word, -c);
        return *this;
    }
    SuperElem& operator*=(const Rational& s) {
        if (sbcoinv::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }
    friend SuperElem operator+(SuperElem a, const SuperElem& b) { return a += b; }
    friend SuperElem operator-(SuperElem a, const SuperElem& b) { return a -= b; }
    friend SuperElem operator-(SuperElem a) { return a *= Rational(-1); }
    friend SuperElem operator*(SuperElem a, const Rational& s) { return a *= s; }
    friend SuperElem operator*(const Rational& s, SuperElem a) { return a *= s; }
    friend bool operator==(const SuperElem& a, const SuperElem& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    /// Bosonic partial derivative, j-fold.
    SuperElem partial_x(int i, int j = 1) const {
        if (i < 1 || i > n_) throw std::invalid_argument("partial_x: index outside [n]");
        SuperElem r(n_);
        for (const auto& [k, c] : terms_) {
            int a = k.mono.e[i - 1];
            if (a < j) continue;
            Rational f = c;
            for (int t = 0; t < j; ++t) f *= a - t;
            Mono m = k.mono;
            m.e[i - 1] = static_cast<std::uint8_t>(a - j);
            r.add_term(m, k.word, f);
        }
        return r;
    }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const SuperElem& p) { return os << p.to_string(); }

private:
    void check_rank(const SuperElem& o) const {
        if (o.n_ != n_) throw std::invalid_argument("SuperElem: ambient rank mismatch");
    }

    int n_ = 0;
    Terms terms_;
};

inline std::string SuperElem::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string body;
        if (k.mono.deg() > 0) body = k.mono.to_string();
        if (k.word) body += (body.empty() ? "" : "*") + word_to_string(k.word);
        detail::append_term(os, first, c, body);
        first = false;
    }
    return os.str();
}

/// Parse `2*x2^3*t2*t4 - x1*t1`; fermionic letters may appear in any order.
inline SuperElem parse_super(std::string_view text, int n) {
    SuperElem s(n);
    for (auto& t : detail::TermParser(text, n, true).parse()) {
        auto [sign, w] = sort_letters(t.thetas);
        if (sign == 0) continue;
        s.add_term(t.mono, w, sign * t.coeff);
    }
    return s;
}

/// Supercommutative product.
inline SuperElem smul(const SuperElem& a, const SuperElem& b) {
    if (a.n() != b.n()) throw std::invalid_argument("smul: ambient rank mismatch");
    SuperElem r(a.n());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int s = merge_sign(ka.word, kb.word);
            if (s == 0) continue;
            r.add_term(ka.mono * kb.mono, ka.word | kb.word, s * ca * cb);
        }
    return r;
}

/// Left multiplication by a polynomial.
inline SuperElem smul(const Poly& p, const SuperElem& b) { return smul(SuperElem::from_poly(p), b); }

/// Contraction by theta_i: (-1)^{s-1} when i is the s-th letter, zero if absent.
inline SuperElem partial_theta(int i, const SuperElem& f) {
    if (i < 1 || i > f.n()) throw std::invalid_argument("partial_theta: index outside [n]");
    SuperElem r(f.n());
    Word b = letter(i);
    for (const auto& [k, c] : f.terms()) {
        if (!(k.word & b)) continue;
        int s = (std::popcount(k.word & (b - 1)) % 2) ? -1 : 1;
        r.add_term(k.mono, k.word & ~b, s * c);
    }
    return r;
}

/// d_j(f) = sum_i (d/dx_i)^j f * theta_i, theta_i multiplied on the right.
inline SuperElem d_j(int j, const SuperElem& f) {
    if (j < 1) throw std::invalid_argument("d_j: j must be positive");
    const int n = f.n();
    SuperElem r(n);
    for (const auto& [k, c] : f.terms()) {
        for (int i = 1; i <= n; ++i) {
            Word b = letter(i);
            int a = k.mono.e[i - 1];
            if ((k.word & b) || a < j) continue;
            Rational v = c;
            for (int t = 0; t < j; ++t) v *= a - t;
            int s = (std::popcount(k.word >> i) % 2) ? -1 : 1;
            Mono m = k.mono;
            m.e[i - 1] = static_cast<std::uint8_t>(a - j);
            r.add_term(m, k.word | b, s * v);
        }
    }
    return r;
}

/// d_I = d_{i_1} d_{i_2} ... d_{i_k}: the last index is applied first.
inline SuperElem d_set(const std::vector<int>& I, const SuperElem& f) {
    SuperElem r = f;
    for (auto it = I.rbegin(); it != I.rend(); ++it) r = d_j(*it, r);
    return r;
}

/// Contract theta_B by the operator word of A (letters of A applied last-letter first).
/// Returns sign (0 if A is not contained in B).
inline int contract_sign(Word a, Word b) {
    if ((a & b) != a) return 0;
    int s = 1;
    Word cur = b;
    for (Word rest = a; rest; ) {
        int top = 31 - std::countl_zero(rest);
        Word bit = Word{1} << top;
        if (std::popcount(cur & (bit - 1)) % 2) s = -s;
        cur &= ~bit;
        rest &= ~bit;
    }
    return s;
}

/// f ⊙ g: replace x_i by d/dx_i and theta_i by the contraction operator in f, apply to g.
inline SuperElem odot(const SuperElem& f, const SuperElem& g) {
    if (f.n() != g.n()) throw std::invalid_argument("odot: ambient rank mismatch");
    SuperElem r(g.n());
    for (const auto& [ka, ca] : f.terms())
        for (const auto& [kb, cb] : g.terms()) {
            int s = contract_sign(ka.word, kb.word);
            if (s == 0) continue;
            auto t = apply_monomial_operator(ka.mono, kb.mono);
            if (!t) continue;
            r.add_term(t->second, kb.word & ~ka.word, s * ca * cb * t->first);
        }
    return r;
}

inline SuperElem odot(const Poly& f, const SuperElem& g) { return odot(SuperElem::from_poly(f), g); }

/// Reverse every fermionic word.
inline SuperElem conj(const SuperElem& g) {
    SuperElem r(g.n());
    for (const auto& [k, c] : g.terms()) {
        int len = word_size(k.word);
        int s = ((len * (len - 1) / 2) % 2) ? -1 : 1;
        r.add_term(k.mono, k.word, s * c);
    }
    return r;
}

/// Inner product: constant term of f ⊙ conj(g).
inline Rational pair(const SuperElem& f, const SuperElem& g) {
    SuperElem h = odot(f, conj(g));
    auto it = h.terms().find(SuperKey{0, Mono(g.n())});
    return it == h.terms().end() ? Rational(0) : it->second;
}

/// Signed permutation: images[i-1] = pi(i) in {-n..-1, 1..n}.
class SignedPerm {
public:
    explicit SignedPerm(std::vector<int> images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        std::vector<bool> seen(n + 1, false);
        for (int v : images_) {
            int a = v < 0 ? -v : v;
            if (a < 1 || a > n || seen[a]) throw std::invalid_argument("SignedPerm: not a signed permutation");
            seen[a] = true;
        }
    }

    static SignedPerm identity(int n) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = i + 1;
        return SignedPerm(std::move(im));
    }
    static SignedPerm negate(int n, int i) {
        auto p = identity(n);
        p.images_[i - 1] = -i;
        return p;
    }
    static SignedPerm swap(int n, int i, int j) {
        auto p = identity(n);
        std::swap(p.images_[i - 1], p.images_[j - 1]);
        return p;
    }
    template <class Rng>
    static SignedPerm random(int n, Rng& rng) {
        auto p = identity(n);
        std::shuffle(p.images_.begin(), p.images_.end(), rng);
        std::bernoulli_distribution coin(0.5);
        for (int& v : p.images_)
            if (coin(rng)) v = -v;
        return p;
    }

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }

private:
    std::vector<int> images_;
};

/// pi . x_i = x_{pi(i)}, pi . theta_i = theta_{pi(i)}, with x_{-i} = -x_i and theta_{-i} = -theta_i.
inline SuperElem act(const SignedPerm& pi, const SuperElem& f) {
    if (pi.n() != f.n()) throw std::invalid_argument("act: rank mismatch");
    const int n = f.n();
    SuperElem r(n);
    for (const auto& [k, c] : f.terms()) {
        Mono m(n);
        int sign = 1;
        for (int i = 1; i <= n; ++i) {
            int a = k.mono.e[i - 1];
            if (a == 0) continue;
            int img = pi(i);
            int target = img < 0 ? -img : img;
            m.e[target - 1] = static_cast<std::uint8_t>(a);
            if (img < 0 && (a % 2)) sign = -sign;
        }
        std::vector<int> letters;
        for (Word rest = k.word; rest; rest &= rest - 1) {
            int i = std::countr_zero(rest) + 1;
            int img = pi(i);
            if (img < 0) sign = -sign;
            letters.push_back(img < 0 ? -img : img);
        }
        auto [s, w] = sort_letters(letters);
        r.add_term(m, w, sign * s * c);
    }
    return r;
}

/// Monomial basis of the (d, k) piece, in canonical order.
inline std::vector<SuperKey> graded_piece(int n, int d, int k) {
    std::vector<SuperKey> out;
    if (d < 0 || k < 0 || k > n) return out;
    auto monos = monomials_of_degree(n, d);
    std::vector<Word> ws;
    for (Word w = 0; w < (Word{1} << n); ++w)
        if (word_size(w) == k) ws.push_back(w);
    std::sort(ws.begin(), ws.end(), word_less);
    out.reserve(monos.size() * ws.size());
    for (Word w : ws)
        for (const Mono& m : monos) out.push_back(SuperKey{w, m});
    return out;
}

}  // namespace sbcoinv
