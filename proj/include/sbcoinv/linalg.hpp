#pragma once

/**
 * @file linalg.hpp
 * @brief Exact sparse linear algebra over graded monomial bases.
 *
 * Rank and span membership go through an incremental row-echelon form. The
 * exact backend clears denominators and eliminates fraction-free over the
 * integers, dividing each new pivot row by its content. A word-sized modular
 * backend is available as a fast path; rank() only trusts it when two primes
 * agree and otherwise falls back to the exact backend.
 */

#include "rational.hpp"
#include "superspace.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sbcoinv {

template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

/// Fraction-free echelon form over the integers.
class IntegerEchelon {
public:
    using Row = SparseRow<Integer>;

    explicit IntegerEchelon(int ncols) : pivot_of_(ncols, -1) {}

    int ncols() const { return static_cast<int>(pivot_of_.size()); }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Adds the row; true iff it was independent of the rows already present.
    bool insert(Row row) {
        reduce(row);
        if (row.empty()) return false;
        make_primitive(row);
        pivot_of_[row.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(Row row) const {
        reduce(row);
        return row.empty();
    }

    const std::vector<Row>& rows() const { return rows_; }

    static Row from_rational(const SparseRow<Rational>& r) {
        Integer l = 1;
        for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        Row out;
        out.reserve(r.size());
        for (const auto& [c, v] : r) out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
        return out;
    }

private:
    void reduce(Row& row) const {
        Row scratch;
        while (!row.empty()) {
            int lead = row.front().first;
            int p = pivot_of_[lead];
            if (p < 0) return;
            const Row& piv = rows_[p];
            Integer g = gcd(piv.front().second, row.front().second);
            Integer a = piv.front().second / g;
            Integer b = row.front().second / g;
            // row <- a*row - b*piv; the leading entries cancel.
            scratch.clear();
            std::size_t i = 1, j = 1;
            while (i < row.size() || j < piv.size()) {
                if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i >= row.size() || piv[j].first < row[i].first) {
                    scratch.emplace_back(piv[j].first, -b * piv[j].second);
                    ++j;
                } else {
                    Integer v = a * row[i].second - b * piv[j].second;
                    if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
            make_primitive(row);
        }
    }

    static void make_primitive(Row& row) {
        if (row.empty()) return;
        Integer g = 0;
        for (const auto& kv : row) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_mpz_t());
            if (g == 1) break;
        }
        if (row.front().second < 0) g = -g;
        if (g != 1)
            for (auto& kv : row) mpz_divexact(kv.second.get_mpz_t(), kv.second.get_mpz_t(), g.get_mpz_t());
    }

    std::vector<int> pivot_of_;
    std::vector<Row> rows_;
};

/// Echelon form over Z/p for a prime p < 2^31.
class ModularEchelon {
public:
    using Row = SparseRow<std::uint32_t>;

    ModularEchelon(int ncols, std::uint32_t p) : p_(p), pivot_of_(ncols, -1) {}

    int ncols() const { return static_cast<int>(pivot_of_.size()); }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::uint32_t modulus() const { return p_; }

    bool insert(Row row) {
        reduce(row);
        if (row.empty()) return false;
        std::uint64_t inv = inverse(row.front().second);
        for (auto& kv : row) kv.second = static_cast<std::uint32_t>(kv.second * inv % p_);
        pivot_of_[row.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(Row row) const {
        reduce(row);
        return row.empty();
    }

    /// Reduces a rational row mod p; nullopt if a denominator vanishes mod p.
    std::optional<Row> from_rational(const SparseRow<Rational>& r) const {
        Row out;
        out.reserve(r.size());
        for (const auto& [c, v] : r) {
            std::uint64_t den = mpz_fdiv_ui(v.get_den_mpz_t(), p_);
            if (den == 0) return std::nullopt;
            std::uint64_t num = mpz_fdiv_ui(v.get_num_mpz_t(), p_);
            std::uint64_t x = num * inverse(den) % p_;
            if (x) out.emplace_back(c, static_cast<std::uint32_t>(x));
        }
        return out;
    }

private:
    std::uint64_t inverse(std::uint64_t a) const {
        std::uint64_t result = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }

    void reduce(Row& row) const {
        Row scratch;
        while (!row.empty()) {
            int p = pivot_of_[row.front().first];
            if (p < 0) return;
            const Row& piv = rows_[p];
            std::uint64_t f = row.front().second;  // piv is monic
            scratch.clear();
            std::size_t i = 1, j = 1;
            while (i < row.size() || j < piv.size()) {
                if (j >= piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.push_back(row[i++]);
                } else if (i >= row.size() || piv[j].first < row[i].first) {
                    std::uint64_t v = (p_ - f * piv[j].second % p_) % p_;
                    if (v) scratch.emplace_back(piv[j].first, static_cast<std::uint32_t>(v));
                    ++j;
                } else {
                    std::uint64_t v = (row[i].second + p_ - f * piv[j].second % p_) % p_;
                    if (v) scratch.emplace_back(row[i].first, static_cast<std::uint32_t>(v));
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
        }
    }

    std::uint64_t p_;
    std::vector<int> pivot_of_;
    std::vector<Row> rows_;
};

/// Exact incremental row space of rational vectors.
class RowSpace {
public:
    explicit RowSpace(int ncols) : ech_(ncols) {}
    int rank() const { return ech_.rank(); }
    int ncols() const { return ech_.ncols(); }
    bool insert(const SparseRow<Rational>& r) { return ech_.insert(IntegerEchelon::from_rational(r)); }
    bool contains(const SparseRow<Rational>& r) const { return ech_.contains(IntegerEchelon::from_rational(r)); }

private:
    IntegerEchelon ech_;
};

/// Sparse rational matrix whose columns are a fixed graded monomial basis.
class GradedMatrix {
public:
    using Row = SparseRow<Rational>;

    /// Columns labelled by a graded basis.
    explicit GradedMatrix(std::vector<SuperKey> basis) : ncols_(static_cast<int>(basis.size())), basis_(std::move(basis)) {
        index_.reserve(basis_.size());
        for (std::size_t c = 0; c < basis_.size(); ++c) index_.emplace(basis_[c], static_cast<int>(c));
    }
    /// Unlabelled columns.
    explicit GradedMatrix(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int nrows() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<SuperKey>& basis() const { return basis_; }

    std::optional<int> column_of(const SuperKey& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Coordinates of f in the column basis; throws if f leaves the piece.
    Row vector_of(const SuperElem& f) const {
        Row r;
        r.reserve(f.size());
        for (const auto& [k, c] : f.terms()) {
            auto col = column_of(k);
            if (!col) throw std::invalid_argument("GradedMatrix: element outside the graded piece: " + f.to_string());
            r.emplace_back(*col, c);
        }
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }
    Row vector_of(const Poly& f) const { return vector_of(SuperElem::from_poly(f)); }

    SuperElem element_of(const Row& r, int n) const {
        SuperElem s(n);
        for (const auto& [c, v] : r) s.add_term(basis_.at(c).mono, basis_.at(c).word, v);
        return s;
    }

    void add_row(Row r) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row clean;
        for (auto& kv : r) {
            if (kv.first < 0 || kv.first >= ncols_) throw std::out_of_range("GradedMatrix: column out of range");
            if (!clean.empty() && clean.back().first == kv.first) {
                clean.back().second += kv.second;
                if (is_zero(clean.back().second)) clean.pop_back();
            } else if (!is_zero(kv.second)) {
                clean.push_back(std::move(kv));
            }
        }
        rows_.push_back(std::move(clean));
    }
    void add_row(const SuperElem& f) { add_row(vector_of(f)); }
    void add_row(const Poly& f) { add_row(vector_of(f)); }
    void add_dense_row(const std::vector<Rational>& v) {
        Row r;
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!is_zero(v[c])) r.emplace_back(static_cast<int>(c), v[c]);
        add_row(std::move(r));
    }

private:
    int ncols_;
    std::vector<SuperKey> basis_;
    std::unordered_map<SuperKey, int, SuperKeyHash> index_;
    std::vector<Row> rows_;
};

enum class RankMethod { exact, multimodular };

inline constexpr std::uint32_t kPrimeA = 2147483629u;  // 2^31 - 19
inline constexpr std::uint32_t kPrimeB = 2147483587u;  // 2^31 - 61

/// Rank mod p, or nullopt when some denominator is divisible by p.
inline std::optional<int> rank_mod_p(const GradedMatrix& m, std::uint32_t p) {
    ModularEchelon e(m.ncols(), p);
    for (const auto& r : m.rows()) {
        auto row = e.from_rational(r);
        if (!row) return std::nullopt;
        e.insert(std::move(*row));
        if (e.rank() == m.ncols()) break;
    }
    return e.rank();
}

inline int rank(const GradedMatrix& m, RankMethod method = RankMethod::exact) {
    if (method == RankMethod::multimodular) {
        auto a = rank_mod_p(m, kPrimeA);
        auto b = rank_mod_p(m, kPrimeB);
        if (a && b && *a == *b) return *a;
    }
    IntegerEchelon e(m.ncols());
    for (const auto& r : m.rows()) {
        e.insert(IntegerEchelon::from_rational(r));
        if (e.rank() == m.ncols()) break;
    }
    return e.rank();
}

inline bool in_span(const GradedMatrix::Row& v, const GradedMatrix& m) {
    RowSpace rs(m.ncols());
    for (const auto& r : m.rows()) rs.insert(r);
    return rs.contains(v);
}

/// Basis of the right kernel {v : M v = 0}, by dense Gauss-Jordan over Q.
inline std::vector<std::vector<Rational>> kernel_basis(const GradedMatrix& m) {
    const int nc = m.ncols();
    std::vector<std::vector<Rational>> a;
    a.reserve(m.nrows());
    for (const auto& r : m.rows()) {
        std::vector<Rational> dense(nc);
        for (const auto& [c, v] : r) dense[c] = v;
        a.push_back(std::move(dense));
    }
    std::vector<int> pivot_cols;
    int row = 0;
    for (int c = 0; c < nc && row < static_cast<int>(a.size()); ++c) {
        int sel = -1;
        for (int r = row; r < static_cast<int>(a.size()); ++r)
            if (!is_zero(a[r][c])) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][c];
        for (int cc = c; cc < nc; ++cc) a[row][cc] *= inv;
        for (int r = 0; r < static_cast<int>(a.size()); ++r) {
            if (r == row || is_zero(a[r][c])) continue;
            Rational f = a[r][c];
            for (int cc = c; cc < nc; ++cc)
                if (!is_zero(a[row][cc])) a[r][cc] -= f * a[row][cc];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(nc);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace sbcoinv
