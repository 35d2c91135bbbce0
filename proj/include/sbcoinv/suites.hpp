#pragma once

/**
 * @file suites.hpp
 * @brief Named verification suites, their rank bounds, and a runner that fans
 * the checks of a suite out to a worker pool.
 */

#include "arrangements.hpp"
#include "coinvariants.hpp"
#include "combinatorics.hpp"
#include "pji.hpp"
#include "report.hpp"
#include "superspace.hpp"
#include "verdict.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace sbcoinv {

struct RunOptions {
    bool long_run = false;
    int jobs = 1;
    std::uint64_t seed = 1;
    bool timing = true;
    bool modular = false;
};

struct Check {
    std::string name;
    std::function<Verdict()> body;
    bool observational = false;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identity", "hilbert", "leading", "regular", "colon",
                                                "operator", "saito",   "stbasis", "mbasis",  "all"};
    return names;
}

inline bool is_suite(const std::string& s) {
    const auto& v = suite_names();
    return std::find(v.begin(), v.end(), s) != v.end();
}

/// Largest admissible n for a suite.
inline int suite_bound(const std::string& suite, bool long_run) {
    if (suite == "identity") return 8;
    if (suite == "saito" || suite == "regular" || suite == "leading") return 4;
    return long_run ? 4 : 3;
}

inline RankMethod rank_method(const RunOptions& o) { return o.modular ? RankMethod::multimodular : RankMethod::exact; }

namespace detail {

inline Verdict sweep(int n, const std::function<Verdict(const SubsetJ&)>& f) {
    Verdict v;
    for (const auto& J : all_subsets(n)) {
        v.absorb(f(J));
        if (!v) break;
    }
    return v;
}

inline Poly random_poly(int n, int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Poly p(n);
    for (const Mono& m : monomials_of_degree(n, d)) p.add_term(m, coeff(rng));
    return p;
}

inline SuperElem random_super(int n, int d, int k, std::mt19937_64& rng) {
    SuperElem f(n);
    for (const auto& K : subsets_of_size(n, k)) f += SuperElem::from_poly(random_poly(n, d, rng), K.mask());
    return f;
}

inline std::vector<Check> identity_checks(int n) {
    std::vector<Check> cs;
    cs.push_back({"stirling-recurrence", [n] {
                      Verdict v;
                      for (int m = 1; m <= n; ++m)
                          for (int k = 0; k <= m; ++k)
                              if (!(stir_b(m, k) == stir_b(m - 1, k - 1) + q_int(2 * k + 1) * stir_b(m - 1, k)))
                                  return v.fail("(" + std::to_string(m) + "," + std::to_string(k) + ")");
                      return v;
                  }});
    cs.push_back({"staircase-closed-form", [n] {
                      Verdict v;
                      for (int m = 1; m <= n; ++m)
                          for (const auto& J : all_subsets(m)) {
                              auto st = staircase(J);
                              for (int k = 1; k <= m; ++k)
                                  if (st[k - 1] != staircase_entry(J, k))
                                      return v.fail("J=" + J.to_string() + " k=" + std::to_string(k));
                          }
                      return v;
                  }});
    for (int m = 1; m <= n; ++m)
        cs.push_back({"identity n=" + std::to_string(m), [m] {
                          Verdict v;
                          for (int k = 0; k <= m; ++k)
                              if (!verify_identity(m, k)) return v.fail("k=" + std::to_string(k));
                          return v;
                      }});
    cs.push_back({"double-count", [n] {
                      Verdict v;
                      for (int m = 1; m <= n; ++m) {
                          std::int64_t total = closed_hilbert(m).total();
                          if (total != staircase_count(m))
                              return v.fail("n=" + std::to_string(m) + ": " + std::to_string(total) + " vs " +
                                            std::to_string(staircase_count(m)));
                      }
                      return v;
                  }});
    return cs;
}

inline std::vector<Check> hilbert_checks(int n, const RunOptions& o) {
    const RankMethod method = rank_method(o);
    std::vector<Check> cs;
    cs.push_back({"bigraded-series", [n, method] {
                      Verdict v;
                      BiSeries brute = hilbert_quotient(n, n * n + 2, method);
                      BiSeries closed = closed_hilbert(n);
                      if (auto d = first_difference(brute, closed))
                          return v.fail("differ at (d,k)=(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")");
                      return v.note(closed.to_string());
                  }});
    cs.push_back({"polynomial-quotient", [n, method] {
                      Verdict v;
                      QPoly want{1};
                      for (int i = 1; i <= n; ++i) want *= q_int(2 * i);
                      QPoly got = poly_quotient_hilbert(ib_generators(n), n * n + 2, method);
                      if (!(got == want)) return v.fail(got.to_string());
                      if (got.degree() != n * n || got.coeff(n * n) != 1) return v.fail("socle " + got.to_string());
                      return v;
                  }});
    cs.push_back({"vandermondian-outside-ideal", [n] {
                      Verdict v;
                      GradedMatrix m = ideal_piece(ib_generators(n), n * n, 0);
                      if (in_span(m.vector_of(delta_b(n)), m)) return v.fail(delta_b(n).to_string());
                      return v;
                  }});
    cs.push_back({"f_J-divides-vandermondian", [n] {
                      return sweep(n, [n](const SubsetJ& J) {
                          Verdict v;
                          if (!delta_b(n).divide_exact(f_j(J))) v.fail("J=" + J.to_string());
                          return v;
                      });
                  }});
    cs.push_back({"generators-invariant", [n, seed = o.seed] {
                      Verdict v;
                      std::mt19937_64 rng(seed);
                      auto gens = si_b_generators(n).generators;
                      for (int t = 0; t < 16; ++t) {
                          SignedPerm pi = SignedPerm::random(n, rng);
                          for (const auto& g : gens)
                              if (!(act(pi, g) == g)) return v.fail("generator " + g.to_string());
                      }
                      return v;
                  }});
    return cs;
}

inline std::vector<Check> leading_checks(int n) {
    auto si = std::make_shared<MembershipOracle>(si_b_generators(n));
    std::vector<Check> cs;
    cs.push_back({"degree-law", [n] { return sweep(n, verify_degrees); }});
    for (const auto& J : all_subsets(n))
        cs.push_back({"leading J=" + J.to_string(), [J, si] {
                          Verdict v;
                          for (int i = 1; i <= J.n(); ++i) v.absorb(verify_leading(J, i, *si));
                          return v;
                      }});
    return cs;
}

inline std::vector<Check> regular_checks(int n, const RunOptions& o) {
    const RankMethod method = rank_method(o);
    std::vector<Check> cs;
    for (const auto& J : all_subsets(n))
        cs.push_back({"regular J=" + J.to_string(), [J, method] { return verify_regular(J, method); }});
    cs.push_back({"membership-ladder", [n] { return sweep(n, verify_membership_ladder); }});
    return cs;
}

inline std::vector<Check> colon_checks(int n, const RunOptions& o) {
    const RankMethod method = rank_method(o);
    auto ib = std::make_shared<MembershipOracle>(ib_generators(n));
    std::vector<Check> cs;
    for (const auto& J : all_subsets(n))
        cs.push_back({"colon J=" + J.to_string(), [J, ib, method] { return verify_colon(J, *ib, method); }});
    return cs;
}

inline std::vector<Check> operator_checks(int n, const RunOptions& o) {
    const RankMethod method = rank_method(o);
    std::vector<Check> cs;
    cs.push_back({"gale-triangularity", [n] { return verify_gale_triangularity(n); }});
    cs.push_back({"operator-routes", [n, seed = o.seed] {
                      std::mt19937_64 rng(seed);
                      Verdict v;
                      for (const auto& J : all_subsets(n)) {
                          v.absorb(verify_d_op_routes(J, SuperElem::from_poly(delta_b(n))));
                          v.absorb(verify_d_op_routes(J, random_super(n, n + 1, 0, rng)));
                          if (!v) break;
                      }
                      return v;
                  }});
    cs.push_back({"annihilation", [n] { return sweep(n, verify_annihilation); }});
    cs.push_back({"operator-theorem", [n, method] { return operator_theorem_check(n, method); }});
    if (n >= 3)
        cs.push_back({"h-matrix-bottom-right",
                      [n] {
                          Verdict v;
                          v.note("entry (" + std::to_string(n) + "," + std::to_string(n) + ") = " +
                                 h_matrix(n)[n - 1][n - 1].to_string() + " = h2_0 of a singleton; a printed 0 for this entry contradicts the definition");
                          return v;
                      },
                      true});
    return cs;
}

inline std::vector<Check> saito_checks(int n) {
    std::vector<Check> cs;
    cs.push_back({"root-arrangement", [n] {
                      Verdict v;
                      if (static_cast<int>(b_phi_plus(n).size()) != n * n) return v.fail("size");
                      return saito_check(rho_basis(SubsetJ(n, {})), b_phi_plus(n));
                  }});
    cs.push_back({"arrangement-sizes", [n] {
                      return sweep(n, [](const SubsetJ& J) {
                          Verdict v;
                          int st = 0, b = 0;
                          for (int x : staircase(J)) st += x;
                          for (int i = 1; i <= J.n(); ++i) b += b_exponent(J, i);
                          if (static_cast<int>(b_j(J).size()) != st) v.fail("J=" + J.to_string() + ": |B_J|");
                          if (static_cast<int>(b_tilde_j(J).size()) != b) v.fail("J=" + J.to_string() + ": enlarged size");
                          return v;
                      });
                  }});
    for (const auto& J : all_subsets(n)) {
        cs.push_back({"rho J=" + J.to_string(), [J] { return saito_check(rho_basis(J), b_j(J)); }});
        cs.push_back({"mu J=" + J.to_string(), [J] { return saito_check(mu_basis(J), b_tilde_j(J)); }});
    }
    return cs;
}

inline std::vector<Check> stbasis_checks(int n, const RunOptions& o) {
    const RankMethod method = rank_method(o);
    auto ib = std::make_shared<MembershipOracle>(ib_generators(n));
    std::vector<Check> cs;
    cs.push_back({"root-ideal", [n, method] {
                      Verdict v;
                      IdealSpec st = st_ideal(rho_basis(SubsetJ(n, {})));
                      IdealSpec ib = ib_generators(n);
                      for (int d = 0; d <= n * n + 2; ++d) {
                          GradedMatrix a = ideal_piece(st, d, 0);
                          GradedMatrix b = ideal_piece(ib, d, 0);
                          int ra = rank(a, method), rb = rank(b, method);
                          for (const auto& r : b.rows()) a.add_row(r);
                          if (ra != rb || rank(a, method) != ra) return v.fail("d=" + std::to_string(d));
                      }
                      return v;
                  }});
    for (const auto& J : all_subsets(n))
        cs.push_back({"colon-basis J=" + J.to_string(), [J, ib, method] {
                          Verdict v;
                          v.absorb(verify_mj_colon_basis(J, *ib, method));
                          v.absorb(verify_injection(J));
                          v.absorb(verify_st_colon(J, *ib, method));
                          return v;
                      }});
    for (const auto& J : all_subsets(n))
        cs.push_back({"deletion J=" + J.to_string(), [J] { return verify_deletion_restriction(J); }});
    return cs;
}

inline std::vector<Check> mbasis_checks(int n, const RunOptions& o) {
    const RankMethod method = rank_method(o);
    std::vector<Check> cs;
    cs.push_back({"explicit-basis", [n, method] { return verify_m_basis(n, method); }});
    cs.push_back({"leading-monomials",
                  [n] {
                      Verdict v;
                      LeadingReport r = leading_monomial_report(n);
                      v.note(std::string(r.matches ? "match" : "no match") + " over " + std::to_string(r.entries.size()) +
                             " elements");
                      return v;
                  },
                  true});
    return cs;
}

inline std::vector<Check> suite_checks(const std::string& suite, int n, const RunOptions& o) {
    if (suite == "identity") return identity_checks(n);
    if (suite == "hilbert") return hilbert_checks(n, o);
    if (suite == "leading") return leading_checks(n);
    if (suite == "regular") return regular_checks(n, o);
    if (suite == "colon") return colon_checks(n, o);
    if (suite == "operator") return operator_checks(n, o);
    if (suite == "saito") return saito_checks(n);
    if (suite == "stbasis") return stbasis_checks(n, o);
    if (suite == "mbasis") return mbasis_checks(n, o);
    if (suite == "all") {
        std::vector<Check> all;
        for (const auto& s : suite_names()) {
            if (s == "all") continue;
            for (auto& c : suite_checks(s, n, o)) {
                c.name = s + "/" + c.name;
                all.push_back(std::move(c));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace detail

/// Runs every check of the suite; records keep the suite's order whatever the pool size.
inline Report run_suite(const std::string& suite, int n, const RunOptions& o) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    auto checks = detail::suite_checks(suite, n, o);
    Report rep{suite, n, std::vector<CheckRecord>(checks.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < checks.size(); t = next++) {
            auto t0 = std::chrono::steady_clock::now();
            CheckRecord rec{checks[t].name, Status::pass, "", 0};
            try {
                Verdict v = checks[t].body();
                rec.witness = v.witness;
                rec.status = checks[t].observational ? Status::note : (v.ok ? Status::pass : Status::fail);
            } catch (const std::exception& e) {
                rec.status = Status::fail;
                rec.witness = std::string("exception: ") + e.what();
            }
            if (o.timing)
                rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
            rep.checks[t] = std::move(rec);
        }
    };
    const int jobs = std::max(1, std::min<int>(o.jobs, static_cast<int>(checks.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rep;
}

}  // namespace sbcoinv
