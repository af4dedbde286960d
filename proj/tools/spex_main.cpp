// spex: spectral extremal checks for H(4,3)-free graphs.
//
// Exit codes: 0 pass, 1 check failed, 2 usage/input error, 3 hypothesis
// skipped.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "spex/families.hpp"
#include "spex/forbidden.hpp"
#include "spex/graph.hpp"
#include "spex/partitions.hpp"
#include "spex/search.hpp"
#include "spex/spectral.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSkipped = 3;

struct GlobalConfig {
    double tol = 1e-12;
    long max_iters = 1'000'000;
    int budget = 12;  // the hard ceiling without --force
    int workers = 1;
    std::uint64_t seed = 20240901;
    bool force = false;
};

spex::PowerOptions power_options(const GlobalConfig& cfg) {
    return spex::PowerOptions{cfg.tol, cfg.max_iters};
}

spex::Graph read_graph6_arg(const std::string& arg) {
    std::string text = arg;
    if (arg == "-") {
        if (!std::getline(std::cin, text))
            throw spex::Graph6Error(0, "no input on stdin");
    }
    return spex::from_graph6(text);
}

std::string format_lambda(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

int run_family(const std::string& kind, long m, bool want_g6, bool want_lambda,
               bool want_poly) {
    spex::FamilyKind fk;
    spex::Poly poly;
    double lambda;
    if (kind == "book") {
        fk = spex::FamilyKind::Book;
        spex::family_spec(fk, m);  // validates parity before anything prints
        poly = spex::Poly(std::vector<spex::Rational>{spex::Rational(-(m - 1)),
                                                      spex::Rational(-1), spex::Rational(1)});
        lambda = spex::book_lambda(m);
    } else if (kind == "theorem-extremal") {
        fk = spex::FamilyKind::TheoremExtremal;
        spex::family_spec(fk, m);
        poly = spex::theorem_quartic(m);
        lambda = spex::largest_real_root(poly);
    } else if (kind == "s-minus") {
        fk = spex::FamilyKind::SMinus;
        spex::family_spec(fk, m);
        poly = spex::even_quartic(m);
        lambda = spex::largest_real_root(poly);
    } else {
        std::cerr << "unknown family kind '" << kind
                  << "' (expected book, theorem-extremal or s-minus)\n";
        return kExitUsage;
    }
    bool all = !(want_g6 || want_lambda || want_poly);
    if (want_poly || all) std::cout << poly.to_string() << '\n';
    if (want_lambda || all) std::cout << format_lambda(lambda) << '\n';
    if (want_g6 || all) {
        spex::Graph g = fk == spex::FamilyKind::Book ? spex::book_graph(m)
                        : fk == spex::FamilyKind::TheoremExtremal
                            ? spex::theorem_extremal(m)
                            : spex::s_minus(m);
        std::cout << spex::to_graph6(g) << '\n';
    }
    return kExitPass;
}

int run_check_h43(const spex::Graph& g) {
    auto witness = spex::contains_h_l3(g, 4);
    if (!witness) {
        std::cout << "H(4,3)-FREE\n";
        return kExitPass;
    }
    json w = {{"apex", witness->apex},
              {"triangle", witness->triangle},
              {"cycle", witness->cycle}};
    std::cout << "CONTAINS H(4,3): witness " << w.dump() << '\n';
    return kExitFail;
}

int run_check_spectral(const spex::Graph& g, const GlobalConfig& cfg) {
    try {
        auto r = spex::spectral_radius(g, power_options(cfg));
        std::cout << "lambda " << format_lambda(r.lambda) << "  residual " << r.residual
                  << "  iterations " << r.iterations << "  connected "
                  << (r.connected ? "yes" : "no") << '\n';
        return kExitPass;
    } catch (const spex::ConvergenceError& e) {
        std::cout << "NOT CONVERGED: " << e.what() << "  best lambda "
                  << format_lambda(e.best.lambda) << "  residual " << e.best.residual << '\n';
        return kExitFail;
    }
}

int run_check_identities(const spex::Graph& g, const GlobalConfig& cfg) {
    if (!spex::is_connected(g)) {
        std::cout << "SKIPPED: identities need a connected graph\n";
        return kExitSkipped;
    }
    auto opts = power_options(cfg);
    opts.tol = std::min(opts.tol, 1e-13);  // headroom so 10*tol is honest
    auto d = spex::neighborhood_decomposition(g, opts);
    auto rep = spex::check_eigen_identities(g, d, 10 * cfg.tol);
    std::cout << "counting identity m = |U| + e(U+) + e(U,W) + e(W): "
              << (rep.counting_exact ? "exact" : "VIOLATED") << '\n'
              << "weight sum deviation      " << rep.dev_weight_sum << '\n'
              << "second-moment deviation   " << rep.dev_square << '\n'
              << "difference-form deviation " << rep.dev_square_minus << '\n'
              << (rep.pass ? "PASS" : "FAIL") << " at tol " << rep.tol << '\n';
    return rep.pass ? kExitPass : kExitFail;
}

int run_check_star_neighborhoods(const spex::Graph& g) {
    if (!spex::is_h43_free(g)) {
        std::cout << "SKIPPED: hypothesis requires an H(4,3)-free graph\n";
        return kExitSkipped;
    }
    auto violations = spex::star_neighborhood_check(g);
    if (violations.empty()) {
        std::cout << "PASS: every dense neighbourhood decomposes into stars\n";
        return kExitPass;
    }
    for (const auto& v : violations)
        std::cout << "violation at vertex " << v.vertex << ": " << v.what << '\n';
    return kExitFail;
}

int run_verify(const std::string& range, bool exclude_book_only, bool battery,
               const std::string& out_path, const GlobalConfig& cfg) {
    long lo, hi;
    auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stol(range);
        } else {
            lo = std::stol(range.substr(0, dots));
            hi = std::stol(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "bad m range '" << range << "' (expected m or a..b)\n";
        return kExitUsage;
    }
    if (lo == hi && lo % 2 == 0) {
        std::cerr << "m must be odd (even sizes have their own extremal family; "
                     "see `family s-minus`)\n";
        return kExitUsage;
    }
    if (lo % 2 == 0) ++lo;

    spex::EnumerationOptions eopts;
    eopts.budget = cfg.budget;
    eopts.workers = cfg.workers;
    auto popts = power_options(cfg);

    std::ofstream csv;
    if (!out_path.empty()) {
        csv.open(out_path);
        if (!csv) {
            std::cerr << "cannot open " << out_path << '\n';
            return kExitUsage;
        }
    }
    std::ostream& out = csv.is_open() ? static_cast<std::ostream&>(csv) : std::cout;
    out << "m,mode,observational,lambda_bound,maximizer_graph6,maximizer_lambda,"
           "maximizer_is_extremal,book_is_overall_max,verdict\n";

    bool any_asserted_failure = false;
    for (long m = lo; m <= hi; m += 2) {
        if (!battery && m > eopts.budget) {
            std::cerr << "m=" << m << " exceeds the enumeration budget " << eopts.budget
                      << "; rerun with --battery (or raise --budget)\n";
            return kExitUsage;
        }
        auto rep = spex::verify_theorem_at(static_cast<int>(m), battery, eopts, popts, cfg.seed);

        std::string book_overall = "n/a";
        if (!rep.battery_mode && !exclude_book_only) {
            auto all = spex::extremal_scan(
                static_cast<int>(m), {}, [](const spex::Graph& g) { return spex::is_h43_free(g); },
                eopts, popts);
            book_overall =
                all.best_graph6 == spex::canonical_form(spex::book_graph(m)) ? "yes" : "no";
        }

        std::string verdict;
        if (rep.observational)
            verdict = rep.pass ? "observational-consistent" : "observational-exceeds-bound";
        else
            verdict = rep.pass ? "pass" : "FAIL";
        if (!rep.observational && !rep.pass) any_asserted_failure = true;

        out << m << ',' << (rep.battery_mode ? "battery" : "scan") << ','
            << (rep.observational ? 1 : 0) << ',' << format_lambda(rep.lambda_bound) << ','
            << rep.maximizer_graph6 << ',' << format_lambda(rep.maximizer_lambda) << ','
            << (rep.maximizer_is_extremal ? 1 : 0) << ',' << book_overall << ',' << verdict
            << '\n';
        std::cerr << "m=" << m << ": " << verdict << ": " << rep.message << '\n';
    }
    return any_asserted_failure ? kExitFail : kExitPass;
}

int run_scan(int m, const std::string& predicate, const std::string& out_path,
             const std::string& report_path, const GlobalConfig& cfg) {
    spex::GraphPredicate pred;
    if (predicate == "h43-free")
        pred = [](const spex::Graph& g) { return spex::is_h43_free(g); };
    else if (predicate == "all")
        pred = [](const spex::Graph&) { return true; };
    else {
        std::cerr << "unknown predicate '" << predicate << "' (h43-free or all)\n";
        return kExitUsage;
    }

    spex::EnumerationOptions eopts;
    eopts.budget = cfg.force ? std::max(cfg.budget, m) : cfg.budget;
    eopts.workers = cfg.workers;

    std::ofstream csv;
    if (!out_path.empty()) {
        csv.open(out_path);
        if (!csv) {
            std::cerr << "cannot open " << out_path << '\n';
            return kExitUsage;
        }
        csv << spex::scan_csv_header() << '\n';
    }
    auto sink = [&](const spex::ScanRow& row) {
        if (csv.is_open()) csv << spex::to_csv(row) << '\n';
    };

    auto rec = spex::extremal_scan(m, {}, pred, eopts, power_options(cfg), sink);
    json summary = {{"m", rec.m},
                    {"classes_scanned", rec.scanned},
                    {"h43_free_classes", rec.h43_free_count},
                    {"maximizer_graph6", rec.best_graph6},
                    {"lambda", rec.lambda},
                    {"runtime_seconds", rec.runtime_seconds}};
    if (!report_path.empty()) {
        std::ofstream rep(report_path);
        if (!rep) {
            std::cerr << "cannot open " << report_path << '\n';
            return kExitUsage;
        }
        rep << summary.dump(2) << '\n';
    }
    std::cout << summary.dump(2) << '\n';
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spectral extremal toolkit for H(4,3)-free graphs: family constructors, "
        "spectral and structural checks, exhaustive small-size scans and the "
        "theorem verification battery"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    app.add_option("--tol", cfg.tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-iters", cfg.max_iters, "power iteration cap");
    app.add_option("--budget", cfg.budget, "largest m for exhaustive enumeration");
    app.add_option("--workers", cfg.workers, "worker threads for enumeration");
    app.add_option("--seed", cfg.seed, "seed for all randomized constructions");
    app.add_flag("--force", cfg.force, "allow enumeration budgets past the default");

    // family <kind> <m> [--graph6|--lambda|--poly]
    auto* family = app.add_subcommand("family", "print an extremal family member");
    std::string family_kind;
    long family_m = 0;
    bool f_g6 = false, f_lambda = false, f_poly = false;
    family->add_option("kind", family_kind, "book | theorem-extremal | s-minus")->required();
    family->add_option("m", family_m, "edge count")->required();
    family->add_flag("--graph6", f_g6, "print graph6");
    family->add_flag("--lambda", f_lambda, "print the spectral radius to 12 digits");
    family->add_flag("--poly", f_poly, "print the defining polynomial");

    // check <graph6> --h43|--spectral|--identities|--lemma23
    auto* check = app.add_subcommand("check", "run a named checker on a graph6 input");
    std::string check_g6;
    bool c_h43 = false, c_spectral = false, c_ident = false, c_lemma23 = false;
    check->add_option("graph6", check_g6, "graph6 text, or - for stdin")->required();
    check->add_flag("--h43", c_h43, "H(4,3) subgraph detection with witness");
    check->add_flag("--spectral", c_spectral, "spectral radius and residual");
    check->add_flag("--identities", c_ident, "counting and eigenvector identities around u*");
    check->add_flag("--lemma23", c_lemma23, "dense neighbourhoods decompose into stars");

    // verify <m|a..b> [--exclude-book] [--battery] [--out csv]
    auto* verify = app.add_subcommand(
        "verify", "check the odd-size spectral bound per m (scan or battery)");
    std::string verify_range, verify_out;
    bool v_exclude = false, v_battery = false;
    verify->add_option("m", verify_range, "odd m, or an a..b range")->required();
    verify->add_flag("--exclude-book", v_exclude,
                     "only report the book-excluded bound (skip the overall-maximizer column)");
    verify->add_flag("--battery", v_battery, "use the rival battery instead of a full scan");
    verify->add_option("--out", verify_out,
                       "write CSV here instead of stdout (columns: m,mode,observational,"
                       "lambda_bound,maximizer_graph6,maximizer_lambda,maximizer_is_extremal,"
                       "book_is_overall_max,verdict)");

    // scan <m> [--predicate p] [--out csv] [--report json]
    auto* scan = app.add_subcommand("scan", "exhaustive isomorph-free extremality scan");
    int scan_m = 0;
    std::string scan_pred = "h43-free", scan_out, scan_report;
    scan->add_option("m", scan_m, "edge count")->required();
    scan->add_option("--predicate", scan_pred, "h43-free (default) or all");
    scan->add_option("--out", scan_out,
                     "write one CSV row per isomorphism class "
                     "(columns: m,graph6,lambda,is_h43_free,is_connected)");
    scan->add_option("--report", scan_report, "also write the JSON summary record here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }
    if (cfg.budget > 12 && !cfg.force) {
        std::cerr << "budgets past 12 need --force\n";
        return kExitUsage;
    }

    try {
        if (*family) return run_family(family_kind, family_m, f_g6, f_lambda, f_poly);
        if (*check) {
            if (c_h43 + c_spectral + c_ident + c_lemma23 != 1) {
                std::cerr << "pick exactly one of --h43, --spectral, --identities, --lemma23\n";
                return kExitUsage;
            }
            spex::Graph g = read_graph6_arg(check_g6);
            if (c_h43) return run_check_h43(g);
            if (c_spectral) return run_check_spectral(g, cfg);
            if (c_ident) return run_check_identities(g, cfg);
            return run_check_star_neighborhoods(g);
        }
        if (*verify) return run_verify(verify_range, v_exclude, v_battery, verify_out, cfg);
        if (*scan) return run_scan(scan_m, scan_pred, scan_out, scan_report, cfg);
    } catch (const spex::BudgetError& e) {
        std::cerr << e.what() << " (pass --force to raise the budget to 12)\n";
        return kExitUsage;
    } catch (const spex::Graph6Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
