#pragma once

/**
 * @file coinvariants.hpp
 * @brief The type-B coinvariant ideals, their graded quotients, colon ideals,
 * the Vandermondian and the (super)harmonic spaces.
 *
 * An ideal is realized one bidegree at a time: the (d, k) piece is spanned by
 * all products  m * theta_K * g  with g a generator and m a monomial. Every
 * generator used here is homogeneous, so these products exhaust the piece.
 * In the supercommutative ring the two-sided ideal generated by homogeneous
 * elements equals the left ideal they generate.
 */

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "superspace.hpp"
#include "verdict.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbcoinv {

struct IdealSpec {
    int n = 0;
    std::vector<SuperElem> generators;

    IdealSpec() = default;
    IdealSpec(int rank, std::vector<SuperElem> gens) : n(rank), generators(std::move(gens)) {
        for (const auto& g : generators) {
            if (g.n() != n) throw std::invalid_argument("IdealSpec: generator rank mismatch");
            if (!g.is_homogeneous()) throw std::invalid_argument("IdealSpec: generator not homogeneous: " + g.to_string());
        }
    }

    static IdealSpec bosonic(int rank, const std::vector<Poly>& polys) {
        std::vector<SuperElem> gens;
        for (const auto& p : polys)
            if (!p.is_zero()) gens.push_back(SuperElem::from_poly(p));
        return IdealSpec(rank, std::move(gens));
    }
};

/// p_2, ..., p_2n and d p_2, ..., d p_2n.
inline IdealSpec si_b_generators(int n) {
    if (n < 1) throw std::invalid_argument("si_b_generators: n must be positive");
    std::vector<SuperElem> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(SuperElem::from_poly(power_sum(2 * i, n)));
    for (int i = 1; i <= n; ++i) gens.push_back(d_j(1, SuperElem::from_poly(power_sum(2 * i, n))));
    return IdealSpec(n, std::move(gens));
}

/// p_2, ..., p_2n in the polynomial ring.
inline IdealSpec ib_generators(int n) {
    std::vector<Poly> ps;
    for (int i = 1; i <= n; ++i) ps.push_back(power_sum(2 * i, n));
    return IdealSpec::bosonic(n, ps);
}

inline std::size_t binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

inline std::size_t piece_dimension(int n, int d, int k) {
    if (d < 0 || k < 0 || k > n) return 0;
    return binomial(d + n - 1, n - 1) * binomial(n, k);
}

/// Rows spanning I in bidegree (d, k).
inline GradedMatrix ideal_piece(const IdealSpec& I, int d, int k) {
    const int n = I.n;
    GradedMatrix M(graded_piece(n, d, k));
    for (const auto& g : I.generators) {
        auto bd = g.bidegree();
        if (!bd) continue;
        auto [dg, kg] = *bd;
        if (dg > d || kg > k) continue;
        auto monos = monomials_of_degree(n, d - dg);
        for (Word K = 0; K < (Word{1} << n); ++K) {
            if (word_size(K) != k - kg) continue;
            for (const Mono& m : monos) {
                GradedMatrix::Row row;
                row.reserve(g.size());
                bool ok = true;
                for (const auto& [key, c] : g.terms()) {
                    int s = merge_sign(K, key.word);
                    if (s == 0) continue;
                    auto col = M.column_of(SuperKey{K | key.word, m * key.mono});
                    if (!col) {
                        ok = false;
                        break;
                    }
                    row.emplace_back(*col, s * c);
                }
                if (ok && !row.empty()) M.add_row(std::move(row));
            }
        }
    }
    return M;
}

/// dim of the (d, k) piece of the quotient by I.
inline int quotient_dim(const IdealSpec& I, int d, int k, RankMethod method = RankMethod::exact) {
    GradedMatrix M = ideal_piece(I, d, k);
    return M.ncols() - rank(M, method);
}

/// Brute-force bigraded Hilbert series of the superspace quotient, degrees 0..dmax.
inline BiSeries hilbert_quotient(int n, int dmax, RankMethod method = RankMethod::exact) {
    if (dmax < n * n) throw std::invalid_argument("hilbert_quotient: dmax must be at least n^2");
    IdealSpec I = si_b_generators(n);
    BiSeries s;
    for (int k = 0; k <= n; ++k)
        for (int d = 0; d <= dmax; ++d) {
            int dim = quotient_dim(I, d, k, method);
            if (dim < 0) throw std::logic_error("hilbert_quotient: negative dimension");
            if (d > n * n && dim != 0)
                throw std::runtime_error("hilbert_quotient: non-zero piece beyond degree n^2 at (" + std::to_string(d) +
                                         "," + std::to_string(k) + ")");
            s.add(d, k, dim);
        }
    return s;
}

/// Hilbert series of C[x]/I for a bosonic ideal, degrees 0..dmax.
inline QPoly poly_quotient_hilbert(const IdealSpec& I, int dmax, RankMethod method = RankMethod::exact) {
    QPoly h;
    for (int d = 0; d <= dmax; ++d) h.add_term(d, quotient_dim(I, d, 0, method));
    return h;
}

/// prod_i x_i * prod_{i<j} (x_i^2 - x_j^2).
inline Poly delta_b(int n) {
    Poly p = Poly::constant(n, 1);
    for (int i = 1; i <= n; ++i) p *= Poly::var(n, i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p *= Poly::var(n, i).pow(2) - Poly::var(n, j).pow(2);
    return p;
}

/// g is annihilated by every generator of the superspace coinvariant ideal.
inline bool is_superharmonic(const SuperElem& g, int n) {
    if (g.n() != n) throw std::invalid_argument("is_superharmonic: rank mismatch");
    for (const auto& gen : si_b_generators(n).generators)
        if (!odot(gen, g).is_zero()) return false;
    return true;
}

/// 2I - 1 = {2i - 1 : i in I}.
inline std::vector<int> odd_indices(const SubsetJ& I) {
    std::vector<int> out;
    for (int i : I.elems()) out.push_back(2 * i - 1);
    return out;
}

struct HarmonicGenerator {
    SubsetJ I;
    SuperElem value;  // d_{2I-1}(delta)
};

inline std::vector<HarmonicGenerator> sh_prime_generators(int n) {
    SuperElem delta = SuperElem::from_poly(delta_b(n));
    std::vector<HarmonicGenerator> out;
    for (const auto& I : all_subsets(n)) out.push_back({I, d_set(odd_indices(I), delta)});
    return out;
}

/// All non-zero m ⊙ d_{2I-1}(delta), m a monomial of degree <= n^2.
inline std::vector<SuperElem> sh_prime_span(int n) {
    if (n > 4) throw std::invalid_argument("sh_prime_span: desk scale is n <= 4");
    std::vector<SuperElem> out;
    for (const auto& gen : sh_prime_generators(n)) {
        if (gen.value.is_zero()) continue;
        int top = gen.value.bidegree()->first;
        for (int e = 0; e <= std::min(top, n * n); ++e)
            for (const Mono& m : monomials_of_degree(n, e)) {
                SuperElem v = odot(Poly::monomial(m), gen.value);
                if (!v.is_zero()) out.push_back(std::move(v));
            }
    }
    return out;
}

/// Bidegree-wise dimensions of the span of m ⊙ d_{2I-1}(delta).
inline BiSeries sh_prime_dims(int n) {
    std::map<std::pair<int, int>, GradedMatrix> pieces;
    for (auto& v : sh_prime_span(n)) {
        auto [d, k] = *v.bidegree();
        auto it = pieces.find({d, k});
        if (it == pieces.end()) it = pieces.emplace(std::pair(d, k), GradedMatrix(graded_piece(n, d, k))).first;
        it->second.add_row(v);
    }
    BiSeries s;
    for (const auto& [key, M] : pieces) s.add(key.first, key.second, rank(M));
    return s;
}

/// Basis of (I : f)_d inside the degree-d polynomials. f must be bosonic and homogeneous.
inline GradedMatrix colon_piece(const IdealSpec& I, const Poly& f, int d) {
    if (!f.is_homogeneous() || f.is_zero()) throw std::invalid_argument("colon_piece: f must be non-zero homogeneous");
    const int n = I.n;
    const int D = d + f.degree();
    auto monos = monomials_of_degree(n, d);
    GradedMatrix target = ideal_piece(I, D, 0);
    // Columns: degree-D coordinates first, then one indicator per degree-d monomial.
    const int nD = target.ncols();
    IntegerEchelon ech(nD + static_cast<int>(monos.size()));
    for (const auto& r : target.rows()) ech.insert(IntegerEchelon::from_rational(r));
    for (std::size_t t = 0; t < monos.size(); ++t) {
        GradedMatrix::Row row = target.vector_of(f * Poly::monomial(monos[t]));
        row.emplace_back(nD + static_cast<int>(t), 1);
        ech.insert(IntegerEchelon::from_rational(row));
    }
    std::vector<SuperKey> basis;
    for (const Mono& m : monos) basis.push_back(SuperKey{0, m});
    GradedMatrix out(std::move(basis));
    for (const auto& r : ech.rows()) {
        if (r.front().first < nD) continue;
        GradedMatrix::Row c;
        for (const auto& [col, v] : r) c.emplace_back(col - nD, Rational(v));
        out.add_row(std::move(c));
    }
    return out;
}

/// dim (I : f)_d through ranks alone.
inline int colon_dim(const IdealSpec& I, const Poly& f, int d, RankMethod method = RankMethod::exact) {
    const int D = d + f.degree();
    GradedMatrix target = ideal_piece(I, D, 0);
    int base = rank(target, method);
    auto monos = monomials_of_degree(I.n, d);
    for (const Mono& m : monos) target.add_row(f * Poly::monomial(m));
    return static_cast<int>(monos.size()) - (rank(target, method) - base);
}

/// Operator theorem at rank n: the generators d_{2I-1}(delta) and everything
/// derived from them are superharmonic, and the span has the quotient's dimensions.
inline Verdict operator_theorem_check(int n, RankMethod method = RankMethod::exact) {
    Verdict v;
    for (const auto& el : sh_prime_span(n))
        if (!is_superharmonic(el, n)) return v.fail("not superharmonic: " + el.to_string());
    BiSeries sh = sh_prime_dims(n);
    BiSeries quo = hilbert_quotient(n, n * n + 2, method);
    if (auto diff = first_difference(sh, quo)) {
        return v.fail("dimension mismatch at (d,k)=(" + std::to_string(diff->first) + "," + std::to_string(diff->second) +
                      "): span " + std::to_string(sh.coeff(diff->first, diff->second)) + " vs quotient " +
                      std::to_string(quo.coeff(diff->first, diff->second)));
    }
    v.note("dim " + std::to_string(sh.total()));
    return v;
}

}  // namespace sbcoinv
