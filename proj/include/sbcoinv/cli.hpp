#pragma once

/**
 * @file cli.hpp
 * @brief Command-line driver for the verification suites.
 *
 *   verify --suite <name> --n <N> [--long] [--jobs J] [--seed S] [--out PATH]
 *          [--format text|json] [--no-timing] [--modular]
 *   verify series --n <N> [--brute] [--format text|json]
 *
 * Exit codes: 0 all checks pass, 1 a check failed, 2 usage error or unknown
 * suite, 3 n above the suite's bound.
 */

#include "coinvariants.hpp"
#include "combinatorics.hpp"
#include "report.hpp"
#include "suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace sbcoinv {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOverBound = 3;

inline int exit_code_for(const Report& r) { return r.ok() ? kExitPass : kExitCheckFailed; }

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the type-B superspace coinvariant ring"};
    std::string suite;
    int n = 0;
    bool long_run = false;
    int jobs = 1;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "text";
    bool no_timing = false;
    bool modular = false;

    app.add_option("--suite", suite, "identity|hilbert|leading|regular|colon|operator|saito|stbasis|mbasis|all");
    app.add_option("--n", n, "rank");
    app.add_flag("--long", long_run, "raise the rank bound to 4 for the heavy suites");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-timing", no_timing, "report 0 ms for every check");
    app.add_flag("--modular", modular, "rank modulo two large primes, exact fallback when they disagree");

    auto* series = app.add_subcommand("series", "print the closed Hilbert series, optionally next to the brute-force one");
    int series_n = 0;
    bool brute = false;
    std::string series_format = "text";
    series->add_option("--n", series_n, "rank")->required();
    series->add_flag("--brute", brute, "also compute the quotient by linear algebra");
    series->add_option("--format", series_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    if (series->parsed()) {
        if (series_n < 1) {
            err << "usage error: --n must be positive\n";
            return kExitUsage;
        }
        if (series_n > 4) {
            err << "refusing n=" << series_n << ": above bound 4 for series\n";
            return kExitOverBound;
        }
        std::optional<BiSeries> b;
        if (brute) b = hilbert_quotient(series_n, series_n * series_n + 2);
        BiSeries closed = closed_hilbert(series_n);
        out << emit_hilbert(series_n, closed, b, series_format == "json" ? Format::json : Format::text);
        return (b && first_difference(closed, *b)) ? kExitCheckFailed : kExitPass;
    }

    if (suite.empty()) {
        err << "usage error: --suite is required\n" << app.help();
        return kExitUsage;
    }
    if (!is_suite(suite)) {
        err << "usage error: unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    if (n < 1) {
        err << "usage error: --n must be positive\n";
        return kExitUsage;
    }
    if (n > suite_bound(suite, long_run)) {
        err << "refusing n=" << n << ": above bound " << suite_bound(suite, long_run) << " for suite " << suite
            << (long_run ? "" : " (try --long)") << "\n";
        return kExitOverBound;
    }

    RunOptions opts;
    opts.long_run = long_run;
    opts.jobs = jobs > 0 ? jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    opts.seed = seed;
    opts.timing = !no_timing;
    opts.modular = modular;

    Report rep = run_suite(suite, n, opts);
    std::string text = render(rep, format == "json" ? Format::json : Format::text);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return exit_code_for(rep);
}

}  // namespace sbcoinv
