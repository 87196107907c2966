// Command-line front end: verification scenarios, residual grids, record
// simulation, and the exponentiality diagnostic, emitted as CSV or JSON.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recreg/recreg.hpp"

namespace {

using namespace recreg;

struct CommonOpts {
    std::uint64_t seed = 42; // fixed default keeps bare invocations reproducible
    std::string out = "-";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->fallthrough(); // lets --config reach the parent app from any position
    cmd->add_option("--seed", opts.seed, "random stream seed (default 42)");
    cmd->add_option("--out", opts.out, "output path, '-' for stdout");
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

int write_output(const std::string& content, const std::string& out) {
    if (out == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << out << "'\n";
        return 1;
    }
    f << content;
    return 0;
}

/// h spec strings: power:<p> | power:auto | recip | negrecip:<k> | dsqrt
DerivableFunction parse_h_spec(const std::string& spec, int k, int r) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "power") {
        if (arg.empty() || arg == "auto") return power_normalized(k + r);
        return power_normalized(std::stoi(arg));
    }
    if (head == "recip") return plain_reciprocal();
    if (head == "negrecip") return neg_reciprocal(arg.empty() ? k : std::stoi(arg));
    if (head == "dsqrt") return double_sqrt();
    throw ParamError("unknown h spec '" + spec + "'");
}

std::vector<Scenario> resolve_scenarios(const std::vector<std::string>& wanted) {
    if (wanted.empty()) return all_scenarios();
    std::vector<Scenario> out;
    for (const auto& name : wanted) {
        const std::string group = name.substr(0, name.find('/'));
        auto scns = make_scenario_group(group); // throws ParamError when unknown
        bool found = false;
        for (auto& s : scns) {
            if (name == group || s.name == name) {
                out.push_back(std::move(s));
                found = true;
            }
        }
        if (!found) throw ParamError("no scenario matches '" + name + "'");
    }
    return out;
}

int emit_reports(std::vector<ResidualReport> reports, const CommonOpts& opts) {
    std::sort(reports.begin(), reports.end(),
              [](const ResidualReport& a, const ResidualReport& b) {
                  return a.scenario < b.scenario;
              });
    const std::string content =
        opts.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports);
    const int rc = write_output(content, opts.out);
    if (rc != 0) return rc;
    for (const auto& rep : reports) {
        if (rep.expected && rep.verdict != *rep.expected) {
            std::cerr << "verdict mismatch: " << rep.scenario << " expected "
                      << verdict_name(*rep.expected) << ", got " << verdict_name(rep.verdict)
                      << "\n";
            return 2;
        }
    }
    return 0;
}

int run_verify(const std::vector<std::string>& names, const VerdictThresholds& thr,
               const CommonOpts& opts) {
    std::vector<ResidualReport> reports;
    for (const auto& scn : resolve_scenarios(names)) {
        reports.push_back(run_scenario(scn, thr));
    }
    return emit_reports(std::move(reports), opts);
}

struct GridArgs {
    std::string dist_spec;
    std::string h_spec = "power:auto";
    int k = 1;
    int r = 1;
    int n = 0; // 0 -> k+1
    std::optional<double> u, v, q1, q2;
    std::string variant = "standard";
    bool mc = false;
    std::int64_t samples = 100000;
};

int run_residual_grid(const GridArgs& args, const CommonOpts& opts) {
    const DistributionModel dist = parse_dist_spec(args.dist_spec);
    const DerivableFunction h = parse_h_spec(args.h_spec, args.k, args.r);
    const IdentityVariant variant = args.variant == "shifted-prime"
                                        ? IdentityVariant::shifted_prime
                                        : IdentityVariant::standard;
    const RegressionIdentity ident(h, args.k, args.r, variant);
    const int n = args.n > 0 ? args.n : args.k + 1;

    std::vector<ConditioningContext> grid;
    if (args.u && args.v) {
        grid.push_back({n, args.k, args.r, *args.u, *args.v});
    } else if (args.q1 && args.q2) {
        grid.push_back({n, args.k, args.r, dist.quantile(*args.q1), dist.quantile(*args.q2)});
    } else {
        for (const auto& [p1, p2] : default_quantile_pairs()) {
            grid.push_back({n, args.k, args.r, dist.quantile(p1), dist.quantile(p2)});
        }
    }

    ResidualReport report;
    report.scenario = "residual-grid/" + dist.label();
    std::uint64_t replicate = 0;
    for (const auto& ctx : grid) {
        try {
            report.rows.push_back(residual(dist, ctx, ident));
            if (args.mc) {
                RandomStream rng(opts.seed, report.scenario, replicate);
                report.rows.push_back(residual_mc(dist, ctx, ident, rng, args.samples));
            }
        } catch (const Error& e) {
            ResidualRow row;
            row.ctx = ctx;
            row.lhs = row.rhs = row.residual = std::numeric_limits<double>::quiet_NaN();
            row.error = e.what();
            report.rows.push_back(row);
        }
        ++replicate;
    }
    for (const auto& row : report.rows) {
        if (row.error.empty()) {
            report.max_abs_residual = std::max(report.max_abs_residual, std::abs(row.residual));
        }
    }
    report.verdict = compute_verdict(report.rows, VerdictThresholds{});
    return emit_reports({std::move(report)}, opts);
}

struct SimArgs {
    std::string dist_spec;
    int records = 0;
    std::string method = "gamma";
    std::int64_t horizon = 1000000;
    bool conditional = false;
    int k = 1, r = 1;
    double u = 0.0, v = 1.0;
    std::int64_t samples = 1000;
};

int run_simulate(const SimArgs& args, const CommonOpts& opts) {
    const DistributionModel dist = parse_dist_spec(args.dist_spec);
    SimulationResult sim;
    if (args.conditional) {
        const ConditioningContext ctx{args.k + 1, args.k, args.r, args.u, args.v};
        sim.label = "conditional/" + dist.label();
        std::vector<double> draws;
        draws.reserve(static_cast<std::size_t>(args.samples));
        RandomStream rng(opts.seed, sim.label);
        for (std::int64_t i = 0; i < args.samples; ++i) {
            const double t = sample_conditional(dist, ctx, rng);
            draws.push_back(t);
            sim.summary.add(t);
        }
        sim.replicates.push_back(std::move(draws));
    } else if (args.records > 0) {
        sim.label = "records-" + args.method + "/" + dist.label();
        for (std::int64_t rep = 0; rep < args.samples; ++rep) {
            RandomStream rng(opts.seed, sim.label, static_cast<std::uint64_t>(rep));
            RecordSequence seq =
                args.method == "stream"
                    ? sample_records_stream_n(dist, rng, args.records, args.horizon)
                    : sample_records_gamma(dist, rng, args.records);
            sim.summary.add(seq.values.back()); // summary tracks the n-th record
            sim.replicates.push_back(std::move(seq.values));
        }
    } else {
        std::cerr << "error: simulate needs --records N or --conditional\n";
        return 1;
    }
    const std::string content =
        opts.format == "csv" ? simulation_to_csv(sim) : simulation_to_json(sim);
    return write_output(content, opts.out);
}

int run_diagnose(const std::string& dist_spec, const VerdictThresholds& thr,
                 const CommonOpts& opts) {
    GridSpec spec;
    spec.thresholds = thr;
    ResidualReport report = diagnose_exponentiality(parse_dist_spec(dist_spec), spec);
    // diagnosis has no expected verdict: completing the grid is success
    return emit_reports({std::move(report)}, opts);
}

int run_means(int k, double c, const VerdictThresholds& thr, const CommonOpts& opts) {
    std::vector<ResidualReport> reports;
    reports.push_back(run_scenario(
        scenario_arithmetic_mean(cubic_g(), k, c, 0.0), thr));
    reports.push_back(run_scenario(
        scenario_geometric_mean(inv_square_g(), 1, c, 0.0), thr));
    reports.push_back(run_scenario(scenario_harmonic_mean(reciprocal_g(), c, 0.0), thr));
    return emit_reports(std::move(reports), opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"record-value regression identities: verification and simulation"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file ([subcommand] sections)");

    CommonOpts opts;
    VerdictThresholds thr;

    auto* verify = app.add_subcommand("verify", "run named scenarios and report verdicts");
    std::vector<std::string> scenario_names;
    bool list_only = false;
    verify->add_option("--scenario", scenario_names,
                       "scenario group or full sub-scenario name (repeatable; default all)");
    verify->add_flag("--list", list_only, "list scenario groups and exit");
    verify->add_option("--hold-tol", thr.hold_tol, "verdict `holds` tolerance");
    verify->add_option("--fail-floor", thr.fail_floor, "verdict `fails` floor");
    add_common(verify, opts);

    auto* grid = app.add_subcommand("residual-grid", "evaluate identity residual rows");
    GridArgs grid_args;
    grid->set_help_flag("--help", "print help"); // frees -h / --h for the function spec
    grid->add_option("--dist", grid_args.dist_spec, "distribution spec")->required();
    grid->add_option("--h", grid_args.h_spec, "h spec: power:<p>|power:auto|recip|negrecip:<k>|dsqrt");
    grid->add_option("--k", grid_args.k, "inner gap k")->required();
    grid->add_option("--r", grid_args.r, "outer gap r")->required();
    grid->add_option("--n", grid_args.n, "record index n (default k+1)");
    auto* opt_u = grid->add_option("--u", grid_args.u, "left conditioning value");
    auto* opt_v = grid->add_option("--v", grid_args.v, "right conditioning value");
    auto* opt_q1 = grid->add_option("--q1", grid_args.q1, "left conditioning quantile");
    auto* opt_q2 = grid->add_option("--q2", grid_args.q2, "right conditioning quantile");
    opt_u->needs(opt_v);
    opt_v->needs(opt_u);
    opt_q1->needs(opt_q2);
    opt_q2->needs(opt_q1);
    grid->add_option("--variant", grid_args.variant, "standard | shifted-prime")
        ->check(CLI::IsMember({"standard", "shifted-prime"}));
    grid->add_flag("--mc", grid_args.mc, "add Monte Carlo rows");
    grid->add_option("--samples", grid_args.samples, "Monte Carlo draw count");
    add_common(grid, opts);

    auto* sim = app.add_subcommand("simulate", "record sequences and conditional draws");
    SimArgs sim_args;
    sim->add_option("--dist", sim_args.dist_spec, "distribution spec")->required();
    sim->add_option("--records", sim_args.records, "records per sequence");
    sim->add_option("--method", sim_args.method, "gamma | stream")
        ->check(CLI::IsMember({"gamma", "stream"}));
    sim->add_option("--horizon", sim_args.horizon, "stream draw horizon");
    sim->add_flag("--conditional", sim_args.conditional, "draw X(n) given X(n-k)=u, X(n+r)=v");
    sim->add_option("--k", sim_args.k, "inner gap k");
    sim->add_option("--r", sim_args.r, "outer gap r");
    sim->add_option("--u", sim_args.u, "left conditioning value");
    sim->add_option("--v", sim_args.v, "right conditioning value");
    sim->add_option("--samples", sim_args.samples, "replicates (records) or draws (conditional)");
    add_common(sim, opts);

    auto* diag = app.add_subcommand("diagnose", "exponentiality diagnostic over a residual grid");
    std::string diag_dist;
    diag->add_option("--dist", diag_dist, "distribution spec")->required();
    diag->add_option("--hold-tol", thr.hold_tol, "verdict `holds` tolerance");
    diag->add_option("--fail-floor", thr.fail_floor, "verdict `fails` floor");
    add_common(diag, opts);

    auto* means = app.add_subcommand("means", "arithmetic / geometric / harmonic mean scenarios");
    int means_k = 2;
    double means_c = 1.0;
    means->add_option("--k", means_k, "arithmetic-mean gap k");
    means->add_option("--c", means_c, "rate constant c");
    means->add_option("--hold-tol", thr.hold_tol, "verdict `holds` tolerance");
    means->add_option("--fail-floor", thr.fail_floor, "verdict `fails` floor");
    add_common(means, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) {
            if (list_only) {
                for (const auto& name : scenario_group_names()) std::cout << name << "\n";
                return 0;
            }
            return run_verify(scenario_names, thr, opts);
        }
        if (grid->parsed()) return run_residual_grid(grid_args, opts);
        if (sim->parsed()) return run_simulate(sim_args, opts);
        if (diag->parsed()) return run_diagnose(diag_dist, thr, opts);
        if (means->parsed()) return run_means(means_k, means_c, thr, opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
