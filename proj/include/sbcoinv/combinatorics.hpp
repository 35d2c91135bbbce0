#pragma once

/**
 * @file combinatorics.hpp
 * @brief q-integers, type-B q-Stirling numbers, staircases and the Gale order.
 *
 * Everything here is pure and exact. The only shared state is the memo table
 * behind stir_b(), which is guarded by a mutex.
 */

#include "rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbcoinv {

/// Univariate polynomial in q with exact rational coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Rational c) { add_term(0, std::move(c)); }
    QPoly(std::initializer_list<long> coeffs) {
        int e = 0;
        for (long c : coeffs) add_term(e++, Rational(c));
    }

    static QPoly monomial(int e, Rational c = 1) {
        QPoly p;
        p.add_term(e, std::move(c));
        return p;
    }

    void add_term(int e, const Rational& c) {
        if (e < 0) throw std::invalid_argument("QPoly: negative exponent");
        if (sbcoinv::is_zero(c)) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sbcoinv::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    Rational coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational eval(const Rational& q) const {
        Rational acc = 0;
        for (int e = degree(); e >= 0; --e) acc = acc * q + coeff(e);
        return acc;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Ascending powers, e.g. "1 + q + q^2".
    std::string to_string(const std::string& var = "q") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            Rational a = abs(c);
            if (first) {
                if (sgn(c) < 0) os << "-";
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            bool unit = (a == 1);
            if (e == 0 || !unit) os << a.get_str();
            if (e > 0) {
                if (!unit) os << "*";
                os << var;
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    std::map<int, Rational> coeffs_;
};

/// Bigraded series: coefficient at (bosonic degree d, fermionic degree k).
class BiSeries {
public:
    using Key = std::pair<int, int>;

    void add(int d, int k, std::int64_t c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(Key{d, k}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::int64_t coeff(int d, int k) const {
        auto it = coeffs_.find(Key{d, k});
        return it == coeffs_.end() ? 0 : it->second;
    }

    const std::map<Key, std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& kv : coeffs_) s += kv.second;
        return s;
    }

    bool nonnegative() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second >= 0; });
    }

    int max_d() const {
        int m = -1;
        for (const auto& kv : coeffs_) m = std::max(m, kv.first.first);
        return m;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Terms ordered by fermionic degree, then bosonic degree: "1 + q + z".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::vector<std::pair<Key, std::int64_t>> terms(coeffs_.begin(), coeffs_.end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [key, c] : terms) {
            auto [d, k] = key;
            std::int64_t a = c < 0 ? -c : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            std::vector<std::string> factors;
            if (a != 1 || (d == 0 && k == 0)) factors.push_back(std::to_string(a));
            if (d > 0) factors.push_back(d == 1 ? "q" : "q^" + std::to_string(d));
            if (k > 0) factors.push_back(k == 1 ? "z" : "z^" + std::to_string(k));
            for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
        }
        return os.str();
    }

private:
    std::map<Key, std::int64_t> coeffs_;
};

/// First bidegree (in (k, d) order) where the two series disagree.
inline std::optional<BiSeries::Key> first_difference(const BiSeries& a, const BiSeries& b) {
    std::vector<BiSeries::Key> keys;
    for (const auto& kv : a.coeffs()) keys.push_back(kv.first);
    for (const auto& kv : b.coeffs()) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });
    for (const auto& [d, k] : keys)
        if (a.coeff(d, k) != b.coeff(d, k)) return BiSeries::Key{d, k};
    return std::nullopt;
}

/// A subset of [n] = {1..n}, stored with its ambient rank.
class SubsetJ {
public:
    SubsetJ() = default;

    SubsetJ(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
        if (n < 0 || n > 31) throw std::invalid_argument("SubsetJ: ambient rank out of range");
        for (std::size_t t = 0; t < elems_.size(); ++t) {
            if (elems_[t] < 1 || elems_[t] > n) throw std::invalid_argument("SubsetJ: element outside [n]");
            if (t > 0 && elems_[t - 1] >= elems_[t]) throw std::invalid_argument("SubsetJ: not strictly increasing");
        }
    }

    static SubsetJ from_mask(int n, std::uint32_t mask) {
        std::vector<int> e;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) e.push_back(i);
        if (n < 32 && (mask >> n) != 0) throw std::invalid_argument("SubsetJ: mask outside [n]");
        return SubsetJ(n, std::move(e));
    }

    static SubsetJ range(int n, int lo, int hi) {
        std::vector<int> e;
        for (int i = std::max(lo, 1); i <= std::min(hi, n); ++i) e.push_back(i);
        return SubsetJ(n, std::move(e));
    }

    int n() const { return n_; }
    const std::vector<int>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    bool contains(int i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

    std::uint32_t mask() const {
        std::uint32_t m = 0;
        for (int e : elems_) m |= 1u << (e - 1);
        return m;
    }

    int sum() const {
        int s = 0;
        for (int e : elems_) s += e;
        return s;
    }

    SubsetJ complement() const {
        std::uint32_t full = n_ == 0 ? 0u : ((n_ >= 32 ? 0u : (1u << n_)) - 1u);
        return from_mask(n_, full & ~mask());
    }
    SubsetJ unite(const SubsetJ& o) const { return from_mask(n_, mask() | o.mask()); }
    SubsetJ minus(const SubsetJ& o) const { return from_mask(n_, mask() & ~o.mask()); }
    SubsetJ with(int i) const { return from_mask(n_, mask() | (1u << (i - 1))); }
    SubsetJ without(int i) const { return from_mask(n_, mask() & ~(1u << (i - 1))); }

    /// K* = {n + 1 - k}.
    SubsetJ reversed() const {
        std::vector<int> e;
        for (auto it = elems_.rbegin(); it != elems_.rend(); ++it) e.push_back(n_ + 1 - *it);
        return SubsetJ(n_, std::move(e));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t t = 0; t < elems_.size(); ++t) s += (t ? "," : "") + std::to_string(elems_[t]);
        return s + "}";
    }

    friend bool operator==(const SubsetJ& a, const SubsetJ& b) { return a.n_ == b.n_ && a.elems_ == b.elems_; }
    friend bool operator<(const SubsetJ& a, const SubsetJ& b) {
        return std::pair(a.n_, a.mask()) < std::pair(b.n_, b.mask());
    }

private:
    int n_ = 0;
    std::vector<int> elems_;
};

/// All subsets of [n], ordered by bitmask.
inline std::vector<SubsetJ> all_subsets(int n) {
    std::vector<SubsetJ> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m) out.push_back(SubsetJ::from_mask(n, m));
    return out;
}

inline std::vector<SubsetJ> subsets_of_size(int n, int k) {
    std::vector<SubsetJ> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) out.push_back(SubsetJ::from_mask(n, m));
    return out;
}

/// Componentwise comparison of equal-size sorted subsets.
inline bool gale_leq(const SubsetJ& a, const SubsetJ& b) {
    if (a.size() != b.size()) throw std::invalid_argument("gale_leq: subsets of different size");
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a.elems()[t] > b.elems()[t]) return false;
    return true;
}

/// [k]_q = 1 + q + ... + q^{k-1}.
inline QPoly q_int(int k) {
    if (k < 0) throw std::invalid_argument("q_int: negative argument");
    QPoly p;
    for (int e = 0; e < k; ++e) p.add_term(e, 1);
    return p;
}

/// [m]!!_q = [m]_q [m-2]_q ... ending at [1]_q or [2]_q.
inline QPoly q_double_factorial(int m) {
    if (m < 0) throw std::invalid_argument("q_double_factorial: negative argument");
    QPoly p(Rational(1));
    for (int j = m; j > 0; j -= 2) p *= q_int(j);
    return p;
}

namespace detail {
struct StirMemo {
    std::mutex mu;
    std::map<std::pair<int, int>, QPoly> table;
};
inline StirMemo& stir_memo() {
    static StirMemo memo;
    return memo;
}
}  // namespace detail

/// Type-B q-Stirling number via Stir(n,k) = Stir(n-1,k-1) + [2k+1]_q Stir(n-1,k).
inline QPoly stir_b(int n, int k) {
    if (n < 0) throw std::invalid_argument("stir_b: negative n");
    if (k < 0 || k > n) return QPoly{};
    if (n == 0) return QPoly(Rational(1));
    auto& memo = detail::stir_memo();
    {
        std::lock_guard lock(memo.mu);
        if (auto it = memo.table.find({n, k}); it != memo.table.end()) return it->second;
    }
    QPoly v = stir_b(n - 1, k - 1) + q_int(2 * k + 1) * stir_b(n - 1, k);
    std::lock_guard lock(memo.mu);
    memo.table.emplace(std::pair(n, k), v);
    return v;
}

/// Type-B J-staircase (st_1(J), ..., st_n(J)) by the incremental rule.
inline std::vector<int> staircase(const SubsetJ& J) {
    std::vector<int> st(J.n());
    for (int i = 1; i <= J.n(); ++i) {
        int miss = J.contains(i) ? 0 : 1;
        if (i == 1) {
            st[0] = miss;
        } else {
            st[i - 1] = st[i - 2] + miss + (J.contains(i - 1) ? 0 : 1);
        }
    }
    return st;
}

/// st_k(J) = 2 |{1..k-1} \ J| + [k not in J].
inline int staircase_entry(const SubsetJ& J, int k) {
    int below = 0;
    for (int j = 1; j < k; ++j) below += J.contains(j) ? 0 : 1;
    return 2 * below + (J.contains(k) ? 0 : 1);
}

/// prod_i [st_i(J) + 1]_q.
inline QPoly staircase_product(const SubsetJ& J) {
    QPoly p(Rational(1));
    for (int s : staircase(J)) p *= q_int(s + 1);
    return p;
}

/// Sum over |J| = n - k of staircase_product(J) against [2k]!!_q Stir^B_q(n,k).
inline bool verify_identity(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("verify_identity: need 0 <= k <= n, n >= 1");
    QPoly lhs;
    for (const auto& J : subsets_of_size(n, n - k)) lhs += staircase_product(J);
    return lhs == q_double_factorial(2 * k) * stir_b(n, k);
}

/// sum_k [2k]!!_q Stir^B_q(n,k) z^{n-k}.
inline BiSeries closed_hilbert(int n) {
    if (n < 1) throw std::invalid_argument("closed_hilbert: n must be positive");
    BiSeries s;
    for (int k = 0; k <= n; ++k) {
        QPoly c = q_double_factorial(2 * k) * stir_b(n, k);
        for (const auto& [d, v] : c.coeffs()) {
            if (v.get_den() != 1 || !v.get_num().fits_slong_p())
                throw std::logic_error("closed_hilbert: non-integral coefficient");
            s.add(d, n - k, v.get_num().get_si());
        }
    }
    return s;
}

/// Evaluate a BiSeries at q = z = 1 through the staircase double count.
inline std::int64_t staircase_count(int n) {
    std::int64_t total = 0;
    for (const auto& J : all_subsets(n)) {
        std::int64_t prod = 1;
        for (int s : staircase(J)) prod *= s + 1;
        total += prod;
    }
    return total;
}

}  // namespace sbcoinv
