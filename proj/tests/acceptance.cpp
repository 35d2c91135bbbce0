// One line per acceptance criterion. Set SBCOINV_LONG=1 to add the rank-4 runs.

#include <sbcoinv/sbcoinv.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

using namespace sbcoinv;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void require(const Verdict& v) {
        if (!v.ok) fail(v.witness);
    }
};

int failures = 0;

void criterion(int k, const std::string& title, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << title << " (" << s << " s)";
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
}

bool long_run() {
    const char* v = std::getenv("SBCOINV_LONG");
    return v && std::string(v) != "0";
}

Outcome hilbert_series() {
    Outcome o;
    const int top = long_run() ? 4 : 3;
    for (int n = 1; n <= top; ++n) {
        BiSeries brute = hilbert_quotient(n, n * n + 2);
        if (auto d = first_difference(brute, closed_hilbert(n)))
            o.fail("n=" + std::to_string(n) + " differs at (" + std::to_string(d->first) + "," + std::to_string(d->second) + ")");
    }
    return o;
}

Outcome combinatorial_identity() {
    Outcome o;
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            if (!verify_identity(n, k)) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
    return o;
}

Outcome leading_terms() {
    Outcome o;
    const int top = long_run() ? 4 : 3;
    for (int n = 1; n <= top; ++n) {
        MembershipOracle si(si_b_generators(n));
        for (const auto& J : all_subsets(n))
            for (int i = 1; i <= n; ++i) o.require(verify_leading(J, i, si));
    }
    return o;
}

Outcome regular_sequences() {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (const auto& J : all_subsets(n)) o.require(verify_regular(J));
    return o;
}

Outcome colon_ideals() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        MembershipOracle ib(ib_generators(n));
        for (const auto& J : all_subsets(n)) o.require(verify_colon(J, ib));
    }
    return o;
}

Outcome gale_triangularity() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) o.require(verify_gale_triangularity(n));
    return o;
}

Outcome operator_theorem() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) o.require(operator_theorem_check(n));
    return o;
}

Outcome saito() {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (const auto& J : all_subsets(n)) {
            o.require(saito_check(rho_basis(J), b_j(J)));
            o.require(saito_check(mu_basis(J), b_tilde_j(J)));
        }
    return o;
}

Outcome explicit_basis() {
    Outcome o;
    const int top = long_run() ? 4 : 3;
    for (int n = 1; n <= top; ++n) {
        auto m = m_basis(n);
        if (static_cast<std::int64_t>(m.size()) != closed_hilbert(n).total()) o.fail("n=" + std::to_string(n) + ": size");
        o.require(verify_m_basis(n));
    }
    return o;
}

Outcome worked_examples() {
    Outcome o;
    auto expect = [&o](const std::string& what, const std::string& got, const std::string& want) {
        if (got != want) o.fail(what + ": got " + got + ", want " + want);
    };
    auto norm = [](const char* text, int n) { return parse_poly(text, n).to_string(); };

    std::string st;
    for (int v : staircase(SubsetJ(6, {2, 5, 6}))) st += (st.empty() ? "" : ",") + std::to_string(v);
    expect("staircase", "(" + st + ")", "(1,2,3,5,6,6)");

    SubsetJ J(4, {2, 4});
    expect("p_1", p_ji(J, 1).to_string(), norm("x1^2+x2^2+x3^2+x4^2", 4));
    expect("p_2", p_ji(J, 2).to_string(), norm("4*x2^3+2*x2*x3^2+2*x2*x4^2", 4));
    expect("p_3", p_ji(J, 3).to_string(), norm("x2^4+x3^4+x4^4+x2^2*x3^2+x3^2*x4^2+x2^2*x4^2", 4));
    expect("p_4", p_ji(J, 4).to_string(), norm("6*x4^5+2*x2^4*x4+4*x2^2*x4^3", 4));

    SuperElem q = q_ji(J, 2);
    expect("q_2 on t2t4", q.coefficient(letter(2) | letter(4)).to_string(), norm("4*x2^3+2*x2*x3^2+2*x2*x4^2", 4));
    expect("q_2 on t3t4", q.coefficient(letter(3) | letter(4)).to_string(), norm("4*x3^3+2*x2^2*x3+2*x3*x4^2", 4));
    if (q.words().size() != 2) o.fail("q_2 has " + std::to_string(q.words().size()) + " theta words");

    SubsetJ K(3, {1, 3});
    Poly c13 = -(parse_poly("x1", 3) * parse_poly("x1^2-x2^2", 3) * parse_poly("x1^2-x3^2", 3) * parse_poly("x3", 3));
    expect("D coefficient t1t2", f_jk(K, SubsetJ(3, {1, 2})).to_string(), norm("x1^3*x2^3+x1^3*x2*x3^2-x1^5*x2-x1*x2^3*x3^2", 3));
    expect("D coefficient t1t3", f_jk(K, SubsetJ(3, {1, 3})).to_string(), c13.to_string());
    expect("D coefficient t2t3", f_jk(K, SubsetJ(3, {2, 3})).to_string(), "0");
    return o;
}

}  // namespace

int main() {
    const std::string top = long_run() ? "4" : "3";
    std::cout << "acceptance" << (long_run() ? " (long)" : "") << std::endl;
    criterion(1, "bigraded Hilbert series equals the closed form, n <= " + top, hilbert_series);
    criterion(2, "q-Stirling staircase identity, n <= 8", combinatorial_identity);
    criterion(3, "leading terms of q_{J,i}, n <= " + top, leading_terms);
    criterion(4, "regular sequences, n <= 4", regular_sequences);
    criterion(5, "colon ideal equality, n <= 3", colon_ideals);
    criterion(6, "Gale triangularity of F, n <= 4", gale_triangularity);
    criterion(7, "operator theorem, n <= 3", operator_theorem);
    criterion(8, "Saito certificates for rho and mu, n <= 4", saito);
    criterion(9, "explicit basis, n <= " + top, explicit_basis);
    criterion(10, "worked examples reproduced", worked_examples);
    std::cout << (failures ? "FAILED " + std::to_string(failures) : std::string("all criteria pass")) << std::endl;
    return failures ? 1 : 0;
}
