#pragma once

/**
 * @file arrangements.hpp
 * @brief Subarrangements of the type-B root arrangement, polynomial vector
 * fields, Saito certification, Solomon-Terao ideals and the explicit basis of
 * the superspace coinvariant ring.
 */

#include "coinvariants.hpp"
#include "combinatorics.hpp"
#include "linalg.hpp"
#include "pji.hpp"
#include "poly.hpp"
#include "superspace.hpp"
#include "verdict.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sbcoinv {

/// x_i, x_i - x_j or x_i + x_j, always with i < j.
struct LinearForm {
    enum class Kind { coord, minus, plus };

    Kind kind = Kind::coord;
    int i = 1;
    int j = 0;

    static LinearForm coord(int i) { return {Kind::coord, i, 0}; }
    static LinearForm minus(int i, int j) { return make(Kind::minus, i, j); }
    static LinearForm plus(int i, int j) { return make(Kind::plus, i, j); }

    Poly to_poly(int n) const {
        Poly p = Poly::var(n, i);
        if (kind == Kind::minus) p -= Poly::var(n, j);
        if (kind == Kind::plus) p += Poly::var(n, j);
        return p;
    }

    std::string to_string() const {
        std::string s = "x" + std::to_string(i);
        if (kind == Kind::minus) s += " - x" + std::to_string(j);
        if (kind == Kind::plus) s += " + x" + std::to_string(j);
        return s;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.kind == b.kind && a.i == b.i && a.j == b.j; }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return std::tie(a.i, a.j, a.kind) < std::tie(b.i, b.j, b.kind);
    }

private:
    static LinearForm make(Kind k, int i, int j) {
        if (i == j || i < 1 || j < 1) throw std::invalid_argument("LinearForm: bad indices");
        if (i > j) std::swap(i, j);
        return {k, i, j};
    }
};

class Arrangement {
public:
    explicit Arrangement(int n, std::vector<LinearForm> forms = {}) : n_(n) {
        for (const auto& f : forms) add(f);
    }

    int n() const { return n_; }
    std::size_t size() const { return forms_.size(); }
    const std::set<LinearForm>& forms() const { return forms_; }
    bool contains(const LinearForm& f) const { return forms_.count(f) > 0; }

    void add(const LinearForm& f) {
        if (f.i > n_ || f.j > n_) throw std::invalid_argument("Arrangement: form outside ambient rank");
        forms_.insert(f);
    }

    Arrangement without(const LinearForm& f) const {
        Arrangement a = *this;
        a.forms_.erase(f);
        return a;
    }

    /// Product of the forms.
    Poly defining_poly() const {
        Poly p = Poly::constant(n_, 1);
        for (const auto& f : forms_) p *= f.to_poly(n_);
        return p;
    }

private:
    int n_;
    std::set<LinearForm> forms_;
};

/// sum_i coeffs[i] d/dx_i.
class Derivation {
public:
    explicit Derivation(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("Derivation: empty");
        for (const auto& c : coeffs_)
            if (c.n() != n()) throw std::invalid_argument("Derivation: rank mismatch");
    }

    int n() const { return coeffs_.front().n(); }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(int i) const { return coeffs_[i - 1]; }

    Poly apply(const Poly& f) const {
        Poly r(n());
        for (int i = 1; i <= n(); ++i)
            if (!coeffs_[i - 1].is_zero()) r += coeffs_[i - 1] * f.partial(i);
        return r;
    }

    /// Common degree of the non-zero coefficients, -1 when none or mixed.
    int degree() const {
        int d = -1;
        for (const auto& c : coeffs_) {
            if (c.is_zero()) continue;
            if (!c.is_homogeneous()) return -1;
            if (d >= 0 && c.degree() != d) return -1;
            d = c.degree();
        }
        return d;
    }
    bool is_homogeneous() const { return degree() >= 0; }

    std::string to_string() const {
        std::string s;
        for (int i = 1; i <= n(); ++i) {
            if (coeffs_[i - 1].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i - 1].to_string() + ")*d" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    static Derivation euler(int n) {
        std::vector<Poly> c;
        for (int i = 1; i <= n; ++i) c.push_back(Poly::var(n, i));
        return Derivation(std::move(c));
    }

private:
    std::vector<Poly> coeffs_;
};

inline Arrangement b_phi_plus(int n) {
    if (n < 1) throw std::invalid_argument("b_phi_plus: n must be positive");
    Arrangement a(n);
    for (int i = 1; i <= n; ++i) {
        a.add(LinearForm::coord(i));
        for (int j = i + 1; j <= n; ++j) {
            a.add(LinearForm::minus(i, j));
            a.add(LinearForm::plus(i, j));
        }
    }
    return a;
}

/// x_j +- x_i for j not in J and i > j, and x_j for j not in J.
inline Arrangement b_j(const SubsetJ& J) {
    const int n = J.n();
    Arrangement a(n);
    for (int j = 1; j <= n; ++j) {
        if (J.contains(j)) continue;
        a.add(LinearForm::coord(j));
        for (int i = j + 1; i <= n; ++i) {
            a.add(LinearForm::minus(j, i));
            a.add(LinearForm::plus(j, i));
        }
    }
    return a;
}

inline Arrangement b_tilde_j(const SubsetJ& J) {
    Arrangement a = b_j(J);
    for (int j = 1; j <= J.n(); ++j) a.add(LinearForm::coord(j));
    return a;
}

/// Every form divides the derivation applied to it.
inline bool in_der(const Derivation& d, const Arrangement& A) {
    if (d.n() != A.n()) throw std::invalid_argument("in_der: rank mismatch");
    for (const auto& f : A.forms()) {
        Poly a = f.to_poly(A.n());
        if (!d.apply(a).divide_exact(a)) return false;
    }
    return true;
}

/// prod_{j not in J, j < i} (x_j^2 - x_k^2).
inline Poly staircase_factor(const SubsetJ& J, int i, int k) {
    const int n = J.n();
    Poly p = Poly::constant(n, 1);
    for (int j = 1; j < i; ++j)
        if (!J.contains(j)) p *= Poly::var(n, j).pow(2) - Poly::var(n, k).pow(2);
    return p;
}

inline Derivation mu_j(const SubsetJ& J, int i) {
    check_index(J, i, "mu_j");
    const int n = J.n();
    std::vector<Poly> c(n, Poly(n));
    for (int k = i; k <= n; ++k) c[k - 1] = staircase_factor(J, i, k) * Poly::var(n, k);
    return Derivation(std::move(c));
}

inline Derivation rho_j(const SubsetJ& J, int i) {
    check_index(J, i, "rho_j");
    if (!J.contains(i)) return mu_j(J, i);
    const int n = J.n();
    std::vector<Poly> c(n, Poly(n));
    c[i - 1] = staircase_factor(J, i, i);
    return Derivation(std::move(c));
}

inline std::vector<Derivation> rho_basis(const SubsetJ& J) {
    std::vector<Derivation> out;
    for (int i = 1; i <= J.n(); ++i) out.push_back(rho_j(J, i));
    return out;
}

inline std::vector<Derivation> mu_basis(const SubsetJ& J) {
    std::vector<Derivation> out;
    for (int i = 1; i <= J.n(); ++i) out.push_back(mu_j(J, i));
    return out;
}

/// 2 |{1..i-1} \ J| + 1.
inline int b_exponent(const SubsetJ& J, int i) {
    int c = 0;
    for (int j = 1; j < i; ++j)
        if (!J.contains(j)) ++c;
    return 2 * c + 1;
}

/// Saito: n homogeneous members of Der(A), degrees summing to |A|, coefficient
/// determinant a non-zero constant times the defining polynomial.
inline Verdict saito_check(const std::vector<Derivation>& ds, const Arrangement& A) {
    Verdict v;
    const int n = A.n();
    if (static_cast<int>(ds.size()) != n) return v.fail("expected " + std::to_string(n) + " derivations");
    int sum = 0;
    PolyMatrix m;
    for (std::size_t t = 0; t < ds.size(); ++t) {
        const auto& d = ds[t];
        if (!d.is_homogeneous()) return v.fail("derivation " + std::to_string(t + 1) + " not homogeneous: " + d.to_string());
        if (!in_der(d, A)) return v.fail("derivation " + std::to_string(t + 1) + " not tangent: " + d.to_string());
        sum += d.degree();
        m.push_back(d.coeffs());
    }
    if (sum != static_cast<int>(A.size()))
        return v.fail("degree sum " + std::to_string(sum) + " vs " + std::to_string(A.size()) + " hyperplanes");
    Poly det = poly_det(m, n);
    auto c = det.divide_exact(A.defining_poly());
    if (!c || c->is_zero() || c->degree() != 0) return v.fail("determinant " + det.to_string() + " not a multiple of Q");
    return v;
}

/// a(rho) = sum_i coeffs_i x_i.
inline Poly st_image(const Derivation& d) {
    Poly p(d.n());
    for (int i = 1; i <= d.n(); ++i) p += d.coeff(i) * Poly::var(d.n(), i);
    return p;
}

inline IdealSpec st_ideal(const std::vector<Derivation>& ds) {
    if (ds.empty()) throw std::invalid_argument("st_ideal: empty basis");
    std::vector<Poly> gens;
    for (const auto& d : ds) gens.push_back(st_image(d));
    return IdealSpec::bosonic(ds.front().n(), gens);
}

/// Basis of Der(A) in coefficient degree e, as a kernel of the tangency conditions.
inline std::vector<Derivation> der_piece(const Arrangement& A, int e) {
    const int n = A.n();
    auto monos = monomials_of_degree(n, e);
    const int nm = static_cast<int>(monos.size());
    std::vector<LinearForm> forms(A.forms().begin(), A.forms().end());
    // Equation (form, monomial of the restricted condition) -> row over unknowns (p, m).
    std::map<std::pair<int, Mono>, GradedMatrix::Row> eqs;
    for (int p = 1; p <= n; ++p)
        for (int t = 0; t < nm; ++t) {
            const int col = (p - 1) * nm + t;
            Poly u = Poly::monomial(monos[t]);
            for (int f = 0; f < static_cast<int>(forms.size()); ++f) {
                const auto& a = forms[f];
                Poly img(n);
                if (a.kind == LinearForm::Kind::coord) {
                    if (p == a.i) img = u.substitute(a.i, 0, 1);
                } else {
                    int s = a.kind == LinearForm::Kind::minus ? 1 : -1;
                    if (p == a.i) img = u.substitute(a.i, a.j, s);
                    if (p == a.j) img = u.substitute(a.i, a.j, s) * Rational(-s);
                }
                for (const auto& [m, c] : img.terms()) eqs[{f, m}].emplace_back(col, c);
            }
        }
    GradedMatrix M(n * nm);
    for (auto& [key, row] : eqs) M.add_row(std::move(row));
    std::vector<Derivation> out;
    for (const auto& k : kernel_basis(M)) {
        std::vector<Poly> c(n, Poly(n));
        for (int p = 1; p <= n; ++p)
            for (int t = 0; t < nm; ++t)
                if (!is_zero(k[(p - 1) * nm + t])) c[p - 1].add_term(monos[t], k[(p - 1) * nm + t]);
        out.emplace_back(std::move(c));
    }
    return out;
}

/// Hilbert series of C[x]/a(Der(A)), computed degreewise from Der(A) itself.
inline QPoly st_hilbert(const Arrangement& A, int dmax) {
    const int n = A.n();
    QPoly h;
    if (n == 0) return QPoly{1};
    h.add_term(0, 1);
    for (int d = 1; d <= dmax; ++d) {
        GradedMatrix M(graded_piece(n, d, 0));
        for (const auto& der : der_piece(A, d - 1)) M.add_row(st_image(der));
        h.add_term(d, M.ncols() - rank(M));
    }
    return h;
}

/// The arrangement in n - 1 variables obtained by forgetting x_n.
inline SubsetJ drop_last(const SubsetJ& J) {
    std::vector<int> e;
    for (int j : J.elems())
        if (j < J.n()) e.push_back(j);
    return SubsetJ(J.n() - 1, std::move(e));
}

/// Deletion sequence x_n, x_j1 + x_n, x_j1 - x_n, ... over j in [n-1] \ J.
inline std::vector<LinearForm> deletion_sequence(const SubsetJ& J) {
    const int n = J.n();
    std::vector<LinearForm> seq{LinearForm::coord(n)};
    for (int j = 1; j < n; ++j) {
        if (J.contains(j)) continue;
        seq.push_back(LinearForm::plus(j, n));
        seq.push_back(LinearForm::minus(j, n));
    }
    return seq;
}

/// Along the deletion sequence from the enlarged arrangement, Hilb(ST(B_i)) =
/// q Hilb(ST(B_{i+1})) + Hilb(ST(restriction)), and each B_i has the Hilbert
/// series of a free arrangement with exponents (b_1, ..., b_n - i).
inline Verdict verify_deletion_restriction(const SubsetJ& J) {
    Verdict v;
    const int n = J.n();
    const std::string at = "J=" + J.to_string();
    const int dmax = static_cast<int>(b_tilde_j(J).size()) + 2;
    QPoly rest{1};
    if (n > 1) rest = st_hilbert(b_tilde_j(drop_last(J)), dmax);
    QPoly lower{1};
    for (int k = 1; k < n; ++k) lower *= q_int(b_exponent(J, k) + 1);
    if (!(rest == lower)) return v.fail(at + ": restriction series " + rest.to_string());
    auto seq = deletion_sequence(J);
    Arrangement cur = b_tilde_j(J);
    QPoly hcur = st_hilbert(cur, dmax);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        QPoly expect = lower * q_int(b_exponent(J, n) - static_cast<int>(i) + 1);
        if (!(hcur == expect)) return v.fail(at + " step " + std::to_string(i) + ": series " + hcur.to_string());
        Arrangement next = cur.without(seq[i]);
        QPoly hnext = st_hilbert(next, dmax);
        QPoly sum = QPoly::monomial(1) * hnext + rest;
        if (!(hcur == sum)) return v.fail(at + " deleting " + seq[i].to_string() + ": " + hcur.to_string() + " vs " + sum.to_string());
        cur = std::move(next);
        hcur = std::move(hnext);
    }
    if (!(hcur == rest)) return v.fail(at + ": last arrangement " + hcur.to_string() + " vs restriction " + rest.to_string());
    return v;
}

/// Prefix products of x_i, x_j1 + x_i, x_j1 - x_i, ... over j in {1..i-1} \ J.
inline std::vector<Poly> prefix_products(const SubsetJ& J, int i, bool lead) {
    const int n = J.n();
    std::vector<Poly> factors;
    if (lead) factors.push_back(Poly::var(n, i));
    for (int j = 1; j < i; ++j) {
        if (J.contains(j)) continue;
        factors.push_back(Poly::var(n, j) + Poly::var(n, i));
        factors.push_back(Poly::var(n, j) - Poly::var(n, i));
    }
    std::vector<Poly> out{Poly::constant(n, 1)};
    for (const auto& f : factors) out.push_back(out.back() * f);
    return out;
}

inline std::vector<Poly> s_set(const SubsetJ& J, int i) {
    check_index(J, i, "s_set");
    return prefix_products(J, i, true);
}

inline std::vector<Poly> t_set(const SubsetJ& J, int i) {
    check_index(J, i, "t_set");
    return prefix_products(J, i, false);
}

inline std::vector<Poly> all_products(const std::vector<std::vector<Poly>>& choices, int n) {
    std::vector<Poly> out{Poly::constant(n, 1)};
    for (const auto& c : choices) {
        std::vector<Poly> next;
        for (const auto& a : out)
            for (const auto& b : c) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

/// p_1 ... p_n with p_i from s_{J,i} (i not in J) or t_{J,i} (i in J).
inline std::vector<Poly> m_j(const SubsetJ& J) {
    std::vector<std::vector<Poly>> choices;
    for (int i = 1; i <= J.n(); ++i) choices.push_back(J.contains(i) ? t_set(J, i) : s_set(J, i));
    return all_products(choices, J.n());
}

/// p_1 ... p_n with every p_i from s_{J,i}.
inline std::vector<Poly> m_tilde(const SubsetJ& J) {
    std::vector<std::vector<Poly>> choices;
    for (int i = 1; i <= J.n(); ++i) choices.push_back(s_set(J, i));
    return all_products(choices, J.n());
}

struct BasisElement {
    SubsetJ J;
    Poly poly;
    SuperElem value;
};

inline std::vector<BasisElement> m_basis_elements(int n) {
    std::vector<BasisElement> out;
    for (const auto& J : all_subsets(n))
        for (auto& p : m_j(J)) {
            SuperElem e = SuperElem::from_poly(p, J.mask());
            out.push_back({J, std::move(p), std::move(e)});
        }
    return out;
}

inline std::vector<SuperElem> m_basis(int n) {
    std::vector<SuperElem> out;
    for (auto& b : m_basis_elements(n)) out.push_back(std::move(b.value));
    return out;
}

inline BiSeries census(const std::vector<SuperElem>& elems) {
    BiSeries s;
    for (const auto& e : elems) {
        auto bd = e.bidegree();
        if (!bd) throw std::invalid_argument("census: element not homogeneous");
        s.add(bd->first, bd->second, 1);
    }
    return s;
}

/// The explicit family has the closed series as census, and in every bidegree it
/// spans a complement of the ideal piece.
inline Verdict verify_m_basis(int n, RankMethod method = RankMethod::exact) {
    Verdict v;
    auto elems = m_basis(n);
    BiSeries want = closed_hilbert(n);
    BiSeries got = census(elems);
    if (auto diff = first_difference(got, want))
        return v.fail("census differs at (d,k)=(" + std::to_string(diff->first) + "," + std::to_string(diff->second) + ")");
    std::map<std::pair<int, int>, std::vector<const SuperElem*>> by_piece;
    for (const auto& e : elems) by_piece[*e.bidegree()].push_back(&e);
    IdealSpec si = si_b_generators(n);
    for (const auto& [key, group] : by_piece) {
        GradedMatrix M = ideal_piece(si, key.first, key.second);
        int base = rank(M, method);
        for (const SuperElem* e : group) M.add_row(*e);
        int full = rank(M, method);
        const std::string at = "(d,k)=(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
        if (full - base != static_cast<int>(group.size())) return v.fail(at + ": dependent modulo the ideal");
        if (full != M.ncols()) return v.fail(at + ": does not span");
    }
    v.note(std::to_string(elems.size()) + " elements");
    return v;
}

/// M(J) is independent modulo (I^B_n : f_J) with counting series prod [st_i + 1]_q.
/// Independence of g_t modulo the colon ideal is independence of f_J g_t modulo I^B_n.
inline Verdict verify_mj_colon_basis(const SubsetJ& J, MembershipOracle& ib, RankMethod method = RankMethod::exact) {
    Verdict v;
    const std::string at = "J=" + J.to_string();
    auto elems = m_j(J);
    QPoly count;
    std::map<int, std::vector<const Poly*>> by_degree;
    for (const auto& p : elems) {
        if (!p.is_homogeneous()) return v.fail(at + ": inhomogeneous " + p.to_string());
        count.add_term(p.degree(), 1);
        by_degree[p.degree()].push_back(&p);
    }
    if (!(count == staircase_product(J))) return v.fail(at + ": counting series " + count.to_string());
    Poly f = f_j(J);
    for (const auto& [d, group] : by_degree) {
        GradedMatrix M = ideal_piece(ib.ideal(), d + f.degree(), 0);
        int base = rank(M, method);
        for (const Poly* p : group) M.add_row(f * *p);
        if (rank(M, method) - base != static_cast<int>(group.size()))
            return v.fail(at + " d=" + std::to_string(d) + ": dependent modulo the colon ideal");
    }
    return v;
}

/// Multiplying M(J) by prod_{j in J} x_j lands inside the enlarged family, as sets of polynomials.
inline Verdict verify_injection(const SubsetJ& J) {
    Verdict v;
    const int n = J.n();
    Poly xj = Poly::constant(n, 1);
    for (int j : J.elems()) xj *= Poly::var(n, j);
    auto big = m_tilde(J);
    for (const auto& p : m_j(J)) {
        Poly img = xj * p;
        if (std::find(big.begin(), big.end(), img) == big.end())
            return v.fail("J=" + J.to_string() + ": " + img.to_string() + " not in the enlarged family");
    }
    return v;
}

/// The Solomon-Terao ideal of B_J equals (I^B_n : f_J) degreewise.
inline Verdict verify_st_colon(const SubsetJ& J, MembershipOracle& ib, RankMethod method = RankMethod::exact) {
    Verdict v;
    const std::string at = "J=" + J.to_string();
    IdealSpec st = st_ideal(rho_basis(J));
    Poly f = f_j(J);
    for (const auto& g : st.generators) {
        Poly gp = g.coefficient(0);
        if (!ib.contains(gp * f)) return v.fail(at + ": " + gp.to_string() + " not in the colon ideal");
    }
    int top = 0;
    for (const auto& d : rho_basis(J)) top += d.degree();
    for (int d = 0; d <= top + 2; ++d) {
        int lhs = colon_dim(ib.ideal(), f, d, method);
        int rhs = rank(ideal_piece(st, d, 0), method);
        if (lhs != rhs) return v.fail(at + " d=" + std::to_string(d) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
    }
    return v;
}

struct LeadingEntry {
    SubsetJ J;
    Mono lead;
};

struct LeadingReport {
    std::vector<LeadingEntry> entries;
    bool matches = false;
};

/// Leading monomials of the explicit basis against {x^a theta_J : a_i <= st_i(J)}. Observational.
inline LeadingReport leading_monomial_report(int n) {
    LeadingReport r;
    std::multiset<std::pair<std::uint32_t, Mono>> got;
    std::multiset<std::pair<std::uint32_t, Mono>> want;
    for (const auto& b : m_basis_elements(n)) {
        Mono lead = b.poly.leading().first;
        r.entries.push_back({b.J, lead});
        got.emplace(b.J.mask(), lead);
    }
    for (const auto& J : all_subsets(n)) {
        auto st = staircase(J);
        std::vector<Mono> acc{Mono(n)};
        for (int i = 1; i <= n; ++i) {
            std::vector<Mono> next;
            for (const auto& m : acc)
                for (int a = 0; a <= st[i - 1]; ++a) next.push_back(m * Mono::var(n, i, a));
            acc = std::move(next);
        }
        for (const auto& m : acc) want.emplace(J.mask(), m);
    }
    r.matches = got == want;
    return r;
}

}  // namespace sbcoinv
