#pragma once

/**
 * @file pji.hpp
 * @brief The polynomials p_{J,i}, their superspace lifts q_{J,i}, the products
 * f_J, the lower-triangular matrix of squared complete symmetric functions, the
 * minors built from it, and the operators D_J, with the triangularity lemmas as
 * executable checks.
 */

#include "coinvariants.hpp"
#include "combinatorics.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "superspace.hpp"
#include "verdict.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbcoinv {

/// r_i = n - |J u {i..n}| + 1.
inline int r_index(const SubsetJ& J, int i) { return J.n() - static_cast<int>(J.unite(SubsetJ::range(J.n(), i, J.n())).size()) + 1; }

inline void check_index(const SubsetJ& J, int i, const char* who) {
    if (i < 1 || i > J.n()) throw std::invalid_argument(std::string(who) + ": index out of range");
}

inline Poly p_ji(const SubsetJ& J, int i) {
    check_index(J, i, "p_ji");
    const int n = J.n();
    Poly h = h2(r_index(J, i), J.unite(SubsetJ::range(n, i, n)));
    return J.contains(i) ? h.partial(i) : h;
}

inline SuperElem q_ji(const SubsetJ& J, int i) {
    check_index(J, i, "q_ji");
    const int n = J.n();
    SuperElem h = SuperElem::from_poly(h2(r_index(J, i), J.unite(SubsetJ::range(n, i, n))));
    if (!J.contains(i)) return smul(h, SuperElem::theta_word(n, J.mask()));
    return smul(d_j(1, h), SuperElem::theta_word(n, J.without(i).mask()));
}

struct PjiFamily {
    SubsetJ J;
    std::vector<Poly> p;
    std::vector<SuperElem> q;
    std::vector<int> r;
};

inline PjiFamily pji_family(const SubsetJ& J) {
    PjiFamily f{J, {}, {}, {}};
    for (int i = 1; i <= J.n(); ++i) {
        f.p.push_back(p_ji(J, i));
        f.q.push_back(q_ji(J, i));
        f.r.push_back(r_index(J, i));
    }
    return f;
}

inline IdealSpec pj_ideal(const SubsetJ& J) {
    std::vector<Poly> ps;
    for (int i = 1; i <= J.n(); ++i) ps.push_back(p_ji(J, i));
    return IdealSpec::bosonic(J.n(), ps);
}

/// prod_{j in J} x_j prod_{j < i <= n} (x_j^2 - x_i^2).
inline Poly f_j(const SubsetJ& J) {
    const int n = J.n();
    Poly p = Poly::constant(n, 1);
    for (int j : J.elems()) {
        p *= Poly::var(n, j);
        for (int i = j + 1; i <= n; ++i) p *= Poly::var(n, j).pow(2) - Poly::var(n, i).pow(2);
    }
    return p;
}

/// f_J without the linear factors.
inline Poly f_j_tilde(const SubsetJ& J) {
    const int n = J.n();
    Poly p = Poly::constant(n, 1);
    for (int j : J.elems())
        for (int i = j + 1; i <= n; ++i) p *= Poly::var(n, j).pow(2) - Poly::var(n, i).pow(2);
    return p;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Entry (i, j) = h2_{i-j}({i..n}), 1-based.
inline PolyMatrix h_matrix(int n) {
    if (n < 1) throw std::invalid_argument("h_matrix: n must be positive");
    PolyMatrix H(n, std::vector<Poly>(n, Poly(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) H[i - 1][j - 1] = h2(i - j, SubsetJ::range(n, i, n));
    return H;
}

/// Cached copy; the matrix is reused by every F_{J,K}.
inline const PolyMatrix& h_matrix_cached(int n) {
    static std::mutex mu;
    static std::map<int, PolyMatrix> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, h_matrix(n)).first;
    return it->second;
}

inline Poly minor(const PolyMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols, int n) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: non-square selection");
    PolyMatrix sub;
    for (int r : rows) {
        std::vector<Poly> row;
        for (int c : cols) row.push_back(M[r - 1][c - 1]);
        sub.push_back(std::move(row));
    }
    return poly_det(sub, n);
}

/// det(x_k^{2i-1}) with rows k in K and columns i in I.
inline Poly odd_power_det(const SubsetJ& K, const SubsetJ& I) {
    const int n = K.n();
    PolyMatrix m;
    for (int k : K.elems()) {
        std::vector<Poly> row;
        for (int i : I.elems()) row.push_back(Poly::monomial(Mono::var(n, k, 2 * i - 1)));
        m.push_back(std::move(row));
    }
    return poly_det(m, n);
}

/// The minor of the h-matrix paired with I in the expansion of D_J.
inline Poly h_minor(const SubsetJ& J, const SubsetJ& I) {
    const int n = J.n();
    return minor(h_matrix_cached(n), J.complement().elems(), I.complement().reversed().elems(), n);
}

/// F_{J,K} by its defining sum over |I| = |J|.
inline Poly f_jk(const SubsetJ& J, const SubsetJ& K) {
    if (J.size() != K.size() || J.n() != K.n()) throw std::invalid_argument("f_jk: |J| must equal |K|");
    const int n = J.n();
    Poly total(n);
    for (const auto& I : subsets_of_size(n, static_cast<int>(J.size()))) {
        Poly m = h_minor(J, I);
        if (m.is_zero()) continue;
        Poly term = m * odd_power_det(K, I);
        if (I.sum() % 2) total -= term;
        else total += term;
    }
    return total;
}

/// det of the stacked matrix: odd powers x_k^{2n-1} .. x_k on top, rows b_i of the h-matrix below.
inline Poly f_jk_det(const SubsetJ& J, const SubsetJ& K) {
    if (J.size() != K.size() || J.n() != K.n()) throw std::invalid_argument("f_jk_det: |J| must equal |K|");
    const int n = J.n();
    PolyMatrix A;
    for (int k : K.elems()) {
        std::vector<Poly> row;
        for (int j = 1; j <= n; ++j) row.push_back(Poly::monomial(Mono::var(n, k, 2 * (n + 1 - j) - 1)));
        A.push_back(std::move(row));
    }
    const SubsetJ rest = J.complement();
    for (int b : rest.elems()) {
        std::vector<Poly> row;
        for (int j = 1; j <= n; ++j) row.push_back(h2(b - j, SubsetJ::range(n, b, n)));
        A.push_back(std::move(row));
    }
    return poly_det(A, n);
}

/// D_J(f) = sum_K (F_{J,K} ⊙ f) theta_K.
inline SuperElem d_op(const SubsetJ& J, const SuperElem& f) {
    const int n = J.n();
    if (f.n() != n) throw std::invalid_argument("d_op: rank mismatch");
    SuperElem out(n);
    for (const auto& K : subsets_of_size(n, static_cast<int>(J.size()))) {
        Poly F = f_jk(J, K);
        if (F.is_zero()) continue;
        out += smul(odot(F, f), SuperElem::theta_word(n, K.mask()));
    }
    return out;
}

/// D_J through the minors and the operators d_{2I-1}; agrees with d_op up to (-1)^{r(r-1)/2}, r = |J|.
inline SuperElem d_op_defining(const SubsetJ& J, const SuperElem& f) {
    const int n = J.n();
    SuperElem out(n);
    for (const auto& I : subsets_of_size(n, static_cast<int>(J.size()))) {
        Poly m = h_minor(J, I);
        if (m.is_zero()) continue;
        SuperElem term = odot(m, d_set(odd_indices(I), f));
        if (I.sum() % 2) out -= term;
        else out += term;
    }
    return out;
}

inline int reorder_sign(int r) { return (r * (r - 1) / 2) % 2 ? -1 : 1; }

/// Shared cache of ideal pieces, one echelon per bidegree.
class MembershipOracle {
public:
    explicit MembershipOracle(IdealSpec I) : ideal_(std::move(I)) {}

    const IdealSpec& ideal() const { return ideal_; }

    bool contains(const SuperElem& f) {
        if (f.is_zero()) return true;
        auto bd = f.bidegree();
        if (!bd) throw std::invalid_argument("MembershipOracle: element not homogeneous");
        const Piece& p = piece(bd->first, bd->second);
        return p.ech.contains(IntegerEchelon::from_rational(p.matrix.vector_of(f)));
    }
    bool contains(const Poly& f) { return contains(SuperElem::from_poly(f)); }

    int rank(int d, int k) { return piece(d, k).ech.rank(); }
    int ncols(int d, int k) { return piece(d, k).matrix.ncols(); }

private:
    struct Piece {
        GradedMatrix matrix;
        IntegerEchelon ech;
    };

    const Piece& piece(int d, int k) {
        std::lock_guard lock(mu_);
        auto it = pieces_.find({d, k});
        if (it != pieces_.end()) return it->second;
        GradedMatrix m = ideal_piece(ideal_, d, k);
        IntegerEchelon e(m.ncols());
        for (const auto& r : m.rows()) e.insert(IntegerEchelon::from_rational(r));
        GradedMatrix bare(m.basis());
        return pieces_.emplace(std::pair(d, k), Piece{std::move(bare), std::move(e)}).first->second;
    }

    IdealSpec ideal_;
    std::mutex mu_;
    std::map<std::pair<int, int>, Piece> pieces_;
};

/// q_{J,i} lies in the superspace coinvariant ideal, is Gale-supported above J,
/// and carries +-p_{J,i} on theta_J.
inline Verdict verify_leading(const SubsetJ& J, int i, MembershipOracle& si) {
    Verdict v;
    const std::string at = "J=" + J.to_string() + " i=" + std::to_string(i);
    SuperElem q = q_ji(J, i);
    Poly p = p_ji(J, i);
    if (q.is_zero()) return v.fail(at + ": q vanishes");
    if (!si.contains(q)) return v.fail(at + ": q not in ideal: " + q.to_string());
    for (Word w : q.words()) {
        SubsetJ K = SubsetJ::from_mask(J.n(), w);
        if (K.size() != J.size() || !gale_leq(J, K)) return v.fail(at + ": support " + K.to_string() + " not Gale above J");
    }
    int s = sign_relation(q.coefficient(J.mask()), p);
    if (s == 0) return v.fail(at + ": theta_J coefficient " + q.coefficient(J.mask()).to_string() + " vs p " + p.to_string());
    v.note(at + (s > 0 ? " +" : " -"));
    return v;
}

inline Verdict verify_leading(const SubsetJ& J, int i) {
    MembershipOracle si(si_b_generators(J.n()));
    return verify_leading(J, i, si);
}

inline int top_degree(const SubsetJ& J) {
    int s = 0;
    for (int i = 1; i <= J.n(); ++i) s += p_ji(J, i).degree() - 1;
    return s;
}

/// Hilbert series of C[x]/(p_{J,1..n}) equals prod [st_i + 1]_q, with two guard degrees.
inline Verdict verify_regular(const SubsetJ& J, RankMethod method = RankMethod::exact) {
    Verdict v;
    QPoly got = poly_quotient_hilbert(pj_ideal(J), top_degree(J) + 2, method);
    QPoly want = staircase_product(J);
    if (!(got == want)) return v.fail("J=" + J.to_string() + ": quotient " + got.to_string() + " vs " + want.to_string());
    return v;
}

/// (I^B_n : f_J) = (p_{J,1..n}) degreewise: generators of the right side lie in the
/// colon, and the graded dimensions agree.
inline Verdict verify_colon(const SubsetJ& J, MembershipOracle& ib, RankMethod method = RankMethod::exact) {
    Verdict v;
    const std::string at = "J=" + J.to_string();
    Poly f = f_j(J);
    for (int i = 1; i <= J.n(); ++i) {
        Poly g = p_ji(J, i);
        if (!ib.contains(g * f)) return v.fail(at + ": p_" + std::to_string(i) + " * f_J not in I: " + g.to_string());
    }
    IdealSpec pj = pj_ideal(J);
    for (int d = 0; d <= top_degree(J) + 2; ++d) {
        int lhs = colon_dim(ib.ideal(), f, d, method);
        GradedMatrix m = ideal_piece(pj, d, 0);
        int rhs = rank(m, method);
        if (lhs != rhs)
            return v.fail(at + " d=" + std::to_string(d) + ": colon dim " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    }
    return v;
}

inline Verdict verify_colon(const SubsetJ& J, RankMethod method = RankMethod::exact) {
    MembershipOracle ib(ib_generators(J.n()));
    return verify_colon(J, ib, method);
}

/// F_{J,K} vanishes off the Gale cone, F_{J,J} = +-f_J, and the defining sum agrees with
/// the stacked determinant up to sign.
inline Verdict verify_gale_triangularity(int n) {
    Verdict v;
    for (int r = 0; r <= n; ++r)
        for (const auto& J : subsets_of_size(n, r))
            for (const auto& K : subsets_of_size(n, r)) {
                const std::string at = "J=" + J.to_string() + " K=" + K.to_string();
                Poly F = f_jk(J, K);
                Poly D = f_jk_det(J, K);
                if (sign_relation(F, D) == 0) return v.fail(at + ": sum " + F.to_string() + " vs det " + D.to_string());
                if (!gale_leq(K, J) && !F.is_zero()) return v.fail(at + ": non-zero outside Gale cone: " + F.to_string());
                if (J == K && sign_relation(F, f_j(J)) == 0) return v.fail(at + ": diagonal " + F.to_string());
            }
    return v;
}

/// The two routes to D_J agree up to the reordering sign.
inline Verdict verify_d_op_routes(const SubsetJ& J, const SuperElem& f) {
    Verdict v;
    SuperElem a = d_op(J, f);
    SuperElem b = d_op_defining(J, f);
    if (!(b == reorder_sign(static_cast<int>(J.size())) * a))
        return v.fail("J=" + J.to_string() + ": " + a.to_string() + " vs " + b.to_string());
    return v;
}

/// d_j h2_{n-|J|+1}(J) lies in (p_{J,1..n}) for each j in J.
inline Verdict verify_membership_ladder(const SubsetJ& J) {
    Verdict v;
    const int n = J.n();
    MembershipOracle pj(pj_ideal(J));
    Poly h = h2(n - static_cast<int>(J.size()) + 1, J);
    for (int j : J.elems()) {
        Poly g = h.partial(j);
        if (!pj.contains(g)) return v.fail("J=" + J.to_string() + " j=" + std::to_string(j) + ": " + g.to_string());
    }
    return v;
}

/// q_{J,i} ⊙ D_J(delta) = 0, p_{J,i} ⊙ (f_J ⊙ delta) = 0, and theta_J of D_J(delta) is +-(f_J ⊙ delta).
inline Verdict verify_annihilation(const SubsetJ& J) {
    Verdict v;
    const int n = J.n();
    const std::string at = "J=" + J.to_string();
    Poly delta = delta_b(n);
    SuperElem dd = d_op(J, SuperElem::from_poly(delta));
    Poly fd = odot(f_j(J), delta);
    if (sign_relation(dd.coefficient(J.mask()), fd) == 0) return v.fail(at + ": theta_J coefficient " + dd.coefficient(J.mask()).to_string());
    for (int i = 1; i <= n; ++i) {
        SuperElem a = odot(q_ji(J, i), dd);
        if (!a.is_zero()) return v.fail(at + " i=" + std::to_string(i) + ": q ⊙ D_J(delta) = " + a.to_string());
        Poly b = odot(p_ji(J, i), fd);
        if (!b.is_zero()) return v.fail(at + " i=" + std::to_string(i) + ": p ⊙ (f_J ⊙ delta) = " + b.to_string());
    }
    return v;
}

/// sum_i deg p_{J,i} - n + deg f_J = n^2, and deg p_{J,i} = st_i + 1.
inline Verdict verify_degrees(const SubsetJ& J) {
    Verdict v;
    const int n = J.n();
    auto st = staircase(J);
    int sum = 0;
    for (int i = 1; i <= n; ++i) {
        int d = p_ji(J, i).degree();
        if (d != st[i - 1] + 1)
            return v.fail("J=" + J.to_string() + " i=" + std::to_string(i) + ": degree " + std::to_string(d));
        sum += d;
    }
    if (sum - n + f_j(J).degree() != n * n) return v.fail("J=" + J.to_string() + ": socle degree mismatch");
    return v;
}

}  // namespace sbcoinv
