#include "sinai/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sinai/asymptotics.hpp"
#include "sinai/bijection.hpp"
#include "sinai/errors.hpp"
#include "sinai/excursion_counts.hpp"
#include "sinai/montecarlo.hpp"
#include "sinai/report_format.hpp"
#include "sinai/sterneck.hpp"
#include "sinai/verify.hpp"

namespace sinai::cli {

namespace {

struct RunConfig {
    std::string kind;
    int n = 0;
    int max_n = Defaults::max_n;
    std::string route = "recurrence";
    std::int64_t trials = Defaults::trials;
    std::uint64_t seed = Defaults::seed;
    std::int64_t horizon = Defaults::horizon;
    int terms = Defaults::terms;
    int digits = Defaults::digits;
    int chunks = Defaults::chunks;
    int threads = Defaults::threads;
    std::string format = "csv";
    std::string output;
    bool demo = false;
    std::int64_t k = -1;
    std::int64_t modulus = -1;
    std::int64_t residue = -1;
};

OutputFormat parse_format(const std::string& f) {
    return f == "json" ? OutputFormat::Json : OutputFormat::Csv;
}

Route parse_route(const std::string& r) {
    if (r == "brute") return Route::Brute;
    if (r == "dp") return Route::DP;
    return Route::Recurrence;
}

CountTable count_table(const RunConfig& cfg) {
    const Route route = parse_route(cfg.route);
    if (cfg.kind == "phi") {
        return phi_table(cfg.max_n, route);
    }
    if (cfg.kind == "xi") {
        CountTable t{"xi", {BigCount(0)}};
        for (int n = 1; n <= cfg.max_n; ++n) {
            t.entries.push_back(route == Route::Brute ? brute_count({4 * n - 1, 2 * n, 3 * n, 4 * n, false})
                                                      : xi(n));
        }
        return t;
    }
    if (cfg.kind == "bridges") {
        if (route != Route::Brute) {
            return zero_area_bridges_table(cfg.max_n);
        }
        CountTable t{"zero_area_bridges", {}};
        for (int n = 0; n <= cfg.max_n; ++n) {
            t.entries.push_back(zero_area_bridges_subset_dp(n));
        }
        return t;
    }
    // irreducible
    if (route == Route::Brute) {
        CountTable t{"phi_irreducible", {BigCount(0)}};
        for (int n = 1; n <= cfg.max_n; ++n) {
            t.entries.push_back(phi_irreducible_bruteforce(n));
        }
        return t;
    }
    return phi_irreducible(phi_table(cfg.max_n, route));
}

ReportTable exact_report(const std::string& name, const std::vector<ExactRow>& rows, double limit) {
    ReportTable r{name, {"n", "value", "decimal", "scaled", "limit", "ratio_to_limit"}, {}};
    for (const auto& row : rows) {
        r.rows.push_back({std::int64_t{row.n}, format_rational(row.value), row.value.get_d(), row.scaled, limit,
                          row.ratio_to_limit});
    }
    return r;
}

ReportTable table_report(const RunConfig& cfg) {
    if (cfg.kind == "levy") {
        const auto lambda = lambda_enclosure(std::max(cfg.max_n, 1000));
        const auto report = levy_checks(cfg.max_n, lambda.value.midpoint());
        ReportTable r{"levy", {"n", "scaled_xi", "scaled_xi_target", "nu_ratio", "convolution_ratio"}, {}};
        for (int n = 1; n <= cfg.max_n; ++n) {
            const auto i = static_cast<std::size_t>(n);
            Cell ratio = n < cfg.max_n ? Cell(report.nu_ratio[i]) : Cell(std::string());
            r.rows.push_back({std::int64_t{n}, report.scaled_xi[i], report.scaled_xi_target, ratio,
                              report.convolution_ratio[i]});
        }
        return r;
    }
    const auto lambda = lambda_enclosure(cfg.terms);
    const auto c = limit_constants(lambda.value);
    if (cfg.kind == "pn") {
        return exact_report("pn", exact_pn_table(cfg.max_n, c.excursion.midpoint()), c.excursion.midpoint());
    }
    if (cfg.kind == "local") {
        return exact_report("local", local_limit_table(cfg.max_n, c.local.midpoint()), c.local.midpoint());
    }
    return exact_report("meander", exact_meander_table(cfg.max_n, c.meander.midpoint()), c.meander.midpoint());
}

ReportTable lambda_report(const RunConfig& cfg) {
    const auto lambda = lambda_enclosure(cfg.terms, cfg.digits);
    const auto c = limit_constants(lambda.value);
    ReportTable r{"lambda", {"quantity", "lower", "upper", "note"}, {}};
    auto add = [&](const std::string& name, const Enclosure& e, std::string note) {
        r.rows.push_back({name, e.lower.to_string(cfg.digits, MPFR_RNDD), e.upper.to_string(cfg.digits, MPFR_RNDU),
                          std::move(note)});
    };
    std::ostringstream note;
    note << "lower rigorous; upper heuristic: terms " << lambda.terms << ", tail constant "
         << format_double(lambda.tail_constant) << ", tail bound " << format_double(lambda.tail_bound)
         << ", k^(3/2) xi_k non-increasing " << (lambda.scaled_xi_monotone ? "yes" : "no");
    add("lambda", lambda.value, note.str());
    add("c_excursion", c.excursion, "lim sqrt(n) p_n");
    add("c_phi", c.phi, "lim n^(5/2) phi_n");
    add("c_local", c.local, "lim n^2 P(S_4n = A_4n = 0)");
    add("c_meander", c.meander, "lim n^(1/4) P(A_1..A_2n >= 0 | S_2n = 0)");
    add("c_tau", c.tau, "P(A_tau = 0)");
    return r;
}

ReportTable bijection_report(const RunConfig& cfg) {
    if (cfg.demo) {
        ReportTable r{"bijection_demo", {"excursion", "down_times", "first_part_up_times", "j", "subset"}, {}};
        for (const auto& m : enumerate_marked(2)) {
            std::string ups;
            for (int u : first_part_up_times(m.excursion)) {
                ups += (ups.empty() ? "" : ",") + std::to_string(u);
            }
            r.rows.push_back({m.excursion.to_string(), down_times(m.excursion).to_string(), ups, std::int64_t{m.j},
                              upsilon(m).times.to_string()});
        }
        return r;
    }
    ReportTable r{"bijection", {"excursion", "j", "subset"}, {}};
    for (const auto& m : enumerate_marked(cfg.n)) {
        r.rows.push_back({m.excursion.to_string(), std::int64_t{m.j}, upsilon(m).times.to_string()});
    }
    return r;
}

ReportTable simulate_report(const RunConfig& cfg) {
    SimulationOptions opts{cfg.seed, cfg.trials, cfg.chunks, cfg.threads};
    Estimate e;
    if (cfg.kind == "persistence") {
        e = estimate_sinai_persistence(cfg.n, opts);
    } else if (cfg.kind == "bridge") {
        e = estimate_bridge_persistence(cfg.n, opts);
    } else {
        e = estimate_atau_zero(cfg.horizon, opts);
    }
    ReportTable r{"simulate",
                  {"kind", "n", "horizon", "value", "stderr", "trials", "successes", "censored", "censored_fraction",
                   "seed", "chunks"},
                  {}};
    r.rows.push_back({cfg.kind, std::int64_t{cfg.n}, cfg.kind == "atau" ? cfg.horizon : std::int64_t{0}, e.value,
                      e.std_error, e.trials, e.successes, e.censored, e.censored_fraction(),
                      std::to_string(e.seed), std::int64_t{cfg.chunks}});
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact counts, bijections, constants and simulations for Sinai excursions"};
    app.require_subcommand(1);
    app.add_option("--output", cfg.output, "Write the report here instead of standard output");
    app.add_option("--threads", cfg.threads, "Worker threads for simulations (results do not depend on it)")
        ->default_val(Defaults::threads)
        ->check(CLI::PositiveNumber);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->default_val("csv")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* count = app.add_subcommand("count", "Exact count tables");
    count->add_option("kind", cfg.kind, "phi | xi | bridges | irreducible")
        ->required()
        ->check(CLI::IsMember({"phi", "xi", "bridges", "irreducible"}));
    count->add_option("--max-n", cfg.max_n, "Largest index")->default_val(Defaults::max_n)->check(CLI::NonNegativeNumber);
    count->add_option("--route", cfg.route, "brute | dp | recurrence")
        ->default_val("recurrence")
        ->check(CLI::IsMember({"brute", "dp", "recurrence"}));
    add_format(count);

    auto* xi_cmd = app.add_subcommand("xi", "Xi_n from the closed form");
    xi_cmd->add_option("--n", cfg.n, "Index n >= 1")->required()->check(CLI::PositiveNumber);

    auto* lambda_cmd = app.add_subcommand(
        "lambda", "Either the lambda enclosure (--terms/--digits) or von Sterneck's Lambda_k(n, s) (--k/--modulus/--residue)");
    auto* terms_opt = lambda_cmd->add_option("--terms", cfg.terms, "Series terms K")->default_val(Defaults::terms)->check(CLI::PositiveNumber);
    auto* digits_opt = lambda_cmd->add_option("--digits", cfg.digits, "Printed significant digits")->default_val(Defaults::digits)->check(CLI::Range(1, 1000));
    auto* k_opt = lambda_cmd->add_option("--k", cfg.k, "Multiset size k")->check(CLI::NonNegativeNumber);
    auto* mod_opt = lambda_cmd->add_option("--modulus", cfg.modulus, "Modulus n")->check(CLI::PositiveNumber);
    auto* res_opt = lambda_cmd->add_option("--residue", cfg.residue, "Residue s")->check(CLI::NonNegativeNumber);
    k_opt->excludes(terms_opt)->excludes(digits_opt);
    mod_opt->excludes(terms_opt)->excludes(digits_opt);
    res_opt->excludes(terms_opt)->excludes(digits_opt);
    add_format(lambda_cmd);

    auto* table = app.add_subcommand("table", "Exact convergence tables");
    table->add_option("kind", cfg.kind, "pn | meander | levy | local")
        ->required()
        ->check(CLI::IsMember({"pn", "meander", "levy", "local"}));
    table->add_option("--max-n", cfg.max_n, "Largest index")->default_val(Defaults::max_n)->check(CLI::PositiveNumber);
    table->add_option("--terms", cfg.terms, "Series terms for the limit constants")->default_val(Defaults::terms)->check(CLI::PositiveNumber);
    add_format(table);

    auto* bij = app.add_subcommand("bijection", "The cyclic-shift bijection on marked excursions");
    bij->add_option("--n", cfg.n, "Half-length index n (excursions of length 4n)")->default_val(2)->check(CLI::PositiveNumber);
    bij->add_flag("--demo", cfg.demo, "Print the n = 2 worked table");
    add_format(bij);

    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo estimates");
    sim->add_option("kind", cfg.kind, "persistence | bridge | atau")
        ->required()
        ->check(CLI::IsMember({"persistence", "bridge", "atau"}));
    sim->add_option("--n", cfg.n, "Walk length (persistence) or half-length index (bridge)")->default_val(1)->check(CLI::PositiveNumber);
    sim->add_option("--trials", cfg.trials, "Number of trials")->default_val(Defaults::trials)->check(CLI::PositiveNumber);
    sim->add_option("--seed", cfg.seed, "RNG seed")->default_val(Defaults::seed)->envname("SINAI_SEED");
    sim->add_option("--horizon", cfg.horizon, "Censoring horizon for atau")->default_val(Defaults::horizon)->check(CLI::Range(std::int64_t{4}, std::int64_t{1} << 40));
    sim->add_option("--chunks", cfg.chunks, "Fixed chunk count (part of the reproducibility key)")->default_val(Defaults::chunks)->check(CLI::PositiveNumber);
    add_format(sim);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidArguments;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file = std::make_unique<std::ofstream>(cfg.output);
        if (!*file) {
            err << "error: cannot open " << cfg.output << "\n";
            return kInvalidArguments;
        }
        sink = file.get();
    }
    const OutputFormat format = parse_format(cfg.format);

    try {
        if (*count) {
            count_report(count_table(cfg), cfg.kind).write(*sink, format);
        } else if (*xi_cmd) {
            *sink << xi(cfg.n).get_str() << "\n";
        } else if (*lambda_cmd) {
            const bool sterneck = k_opt->count() + mod_opt->count() + res_opt->count() > 0;
            if (sterneck) {
                if (k_opt->count() == 0 || mod_opt->count() == 0 || res_opt->count() == 0) {
                    err << "error: --k, --modulus and --residue go together\n";
                    return kInvalidArguments;
                }
                *sink << lambda_vs(cfg.k, cfg.modulus, cfg.residue).get_str() << "\n";
            } else {
                lambda_report(cfg).write(*sink, format);
            }
        } else if (*table) {
            table_report(cfg).write(*sink, format);
        } else if (*bij) {
            bijection_report(cfg).write(*sink, format);
        } else if (*sim) {
            simulate_report(cfg).write(*sink, format);
        } else if (*verify) {
            bool ok = true;
            for (const auto& check : run_verification()) {
                *sink << check.name << ": " << (check.passed ? "pass" : "fail");
                if (!check.passed) {
                    *sink << " (" << check.detail << ")";
                }
                *sink << "\n";
                ok = ok && check.passed;
            }
            return ok ? kOk : kVerificationFailed;
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidArguments;
    } catch (const ResourceGuard& e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kOk;
}

}  // namespace sinai::cli
