#include "storalloc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "storalloc/exact.hpp"
#include "storalloc/model.hpp"
#include "storalloc/phi.hpp"
#include "storalloc/randomgraph.hpp"
#include "storalloc/sampler.hpp"
#include "storalloc/symmetric.hpp"

namespace storalloc::cli {

namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

// One invocation produces one params object plus a list of uniform records;
// the same data renders as a CSV table or a JSON document.
struct Output {
    OrderedJson params = OrderedJson::object();
    std::vector<std::string> columns;
    std::vector<OrderedJson> results;
};

std::string cell_text(const OrderedJson& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    return value.dump();
}

void emit_csv(const Output& output, std::ostream& os) {
    for (size_t i = 0; i < output.columns.size(); ++i) {
        os << (i ? "," : "") << output.columns[i];
    }
    os << "\n";
    for (const OrderedJson& row : output.results) {
        for (size_t i = 0; i < output.columns.size(); ++i) {
            os << (i ? "," : "");
            if (auto it = row.find(output.columns[i]); it != row.end()) {
                os << cell_text(*it);
            }
        }
        os << "\n";
    }
}

void emit_json(const Output& output, std::ostream& os) {
    OrderedJson doc;
    doc["version"] = kVersion;
    doc["params"] = output.params;
    doc["results"] = output.results;
    os << doc.dump(2) << "\n";
}

OrderedJson big_to_json(const BigInt& value) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (value >= lo && value <= hi) return value.convert_to<long long>();
    return value.str();
}

std::string decimal(double x) { return significant(x, 12); }
std::string decimal(const Rational& q) { return significant(to_double(q), 12); }

std::string alloc_text(const std::vector<long long>& counts) {
    std::ostringstream os;
    for (size_t i = 0; i < counts.size(); ++i) os << (i ? " " : "") << counts[i];
    return os.str();
}

struct CommonArgs {
    int n = 0;
    int r = 0;
    int F = 0;
    std::string format;  // per-subcommand default applied at emit time
    std::string out_path;
};

void add_problem_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--n", args.n, "storage node count")->required();
    cmd->add_option("--r", args.r, "access-subset size")->required();
    cmd->add_option("--F", args.F, "file size in symbols")->required();
}

void add_output_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", args.out_path, "write records to this file");
}

int finish(const Output& output, const CommonArgs& args, const std::string& default_format,
           std::ostream& out, std::ostream& err) {
    const std::string format = args.format.empty() ? default_format : args.format;
    const auto render = [&](std::ostream& os) {
        if (format == "json") {
            emit_json(output, os);
        } else {
            emit_csv(output, os);
        }
    };
    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open --out path " << args.out_path << "\n";
            return 2;
        }
        render(file);
    } else {
        render(out);
    }
    return 0;
}

Allocation parse_allocation(const std::vector<long long>& entries, const Problem& problem) {
    return make_allocation(entries, problem);
}

long long sum_of(const std::vector<long long>& entries) {
    return std::accumulate(entries.begin(), entries.end(), 0LL);
}

OrderedJson sandwich_row(const Allocation& alloc, const Problem& problem) {
    const SandwichReport report = sandwich_check(alloc, problem);
    OrderedJson row;
    row["alloc"] = alloc_text(alloc.counts);
    row["phi"] = fraction_string(report.phi);
    row["phi_decimal"] = decimal(report.phi);
    row["scaled_psi"] = fraction_string(report.scaled_psi);
    row["scaled_psi_decimal"] = decimal(report.scaled_psi);
    row["slack_upper"] = fraction_string(report.slack_upper);
    row["bound"] = fraction_string(report.bound);
    row["lower_holds"] = report.lower_holds;
    row["upper_holds"] = report.upper_holds;
    return row;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact and approximate recovery probabilities for coded storage allocations"};
    app.require_subcommand(1);

    // exact
    auto* exact_cmd = app.add_subcommand("exact", "count failing r-subsets of an allocation");
    CommonArgs exact_args;
    std::vector<long long> exact_alloc;
    long long exact_T = -1;
    add_problem_flags(exact_cmd, exact_args);
    exact_cmd->add_option("--alloc", exact_alloc, "comma-separated symbol counts")
        ->required()
        ->delimiter(',');
    exact_cmd->add_option("--T", exact_T, "budget (defaults to the allocation sum)");
    add_output_flags(exact_cmd, exact_args);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "with-repetition failure probability of an allocation");
    CommonArgs phi_args;
    std::vector<long long> phi_alloc;
    add_problem_flags(phi_cmd, phi_args);
    phi_cmd->add_option("--alloc", phi_alloc, "comma-separated symbol counts")
        ->required()
        ->delimiter(',');
    add_output_flags(phi_cmd, phi_args);

    // symmetric
    auto* sym_cmd = app.add_subcommand("symmetric", "evaluate or optimize symmetric plans");
    CommonArgs sym_args;
    long long sym_T = 0;
    int sym_j = 0;
    bool sym_full = false;
    bool sym_candidates = false;
    add_problem_flags(sym_cmd, sym_args);
    sym_cmd->add_option("--T", sym_T, "budget")->required();
    sym_cmd->add_option("--j", sym_j, "evaluate this chunk size instead of optimizing");
    auto* sym_full_flag = sym_cmd->add_flag("--full-scan", sym_full, "scan every j in [1..F] (default)");
    sym_cmd->add_flag("--candidates-only", sym_candidates, "scan only the candidate chunk sizes")
        ->excludes(sym_full_flag);
    add_output_flags(sym_cmd, sym_args);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "optimal symmetric plan per budget");
    CommonArgs sweep_args;
    long long sweep_tmin = 0;
    long long sweep_tmax = 0;
    long long sweep_tstep = 1;
    bool sweep_perj = false;
    bool sweep_full = false;
    bool sweep_candidates = false;
    add_problem_flags(sweep_cmd, sweep_args);
    sweep_cmd->add_option("--t-min", sweep_tmin, "first budget")->required();
    sweep_cmd->add_option("--t-max", sweep_tmax, "last budget")->required();
    sweep_cmd->add_option("--t-step", sweep_tstep, "budget increment");
    sweep_cmd->add_flag("--per-j", sweep_perj, "emit one success curve per candidate chunk size");
    auto* sweep_full_flag = sweep_cmd->add_flag("--full-scan", sweep_full, "scan every j in [1..F] (default)");
    sweep_cmd->add_flag("--candidates-only", sweep_candidates, "scan only the candidate chunk sizes")
        ->excludes(sweep_full_flag);
    add_output_flags(sweep_cmd, sweep_args);

    // sandwich
    auto* sand_cmd = app.add_subcommand("sandwich", "two-sided phi bounds on the scaled subset count");
    CommonArgs sand_args;
    std::vector<long long> sand_alloc;
    long long sand_T = -1;
    long long sand_samples = 0;
    std::uint64_t sand_seed = 0;
    add_problem_flags(sand_cmd, sand_args);
    sand_cmd->add_option("--alloc", sand_alloc, "comma-separated symbol counts")->delimiter(',');
    sand_cmd->add_option("--T", sand_T, "budget (required with --samples)");
    sand_cmd->add_option("--samples", sand_samples, "check this many random allocations");
    sand_cmd->add_option("--seed", sand_seed, "random-allocation seed");
    add_output_flags(sand_cmd, sand_args);

    // poisson
    auto* poisson_cmd = app.add_subcommand("poisson", "symmetric optimum in the Poisson limit");
    CommonArgs poisson_args;
    double poisson_mu = 0.0;
    bool poisson_full = false;
    poisson_cmd->add_option("--mu", poisson_mu, "mean accessible symbols per receiver")->required();
    poisson_cmd->add_option("--F", poisson_args.F, "file size in symbols")->required();
    poisson_cmd->add_option("--r", poisson_args.r, "access size")->required();
    poisson_cmd->add_flag("--full-scan", poisson_full, "scan every j in [1..F], not just candidates");
    add_output_flags(poisson_cmd, poisson_args);

    // gnp
    auto* gnp_cmd = app.add_subcommand("gnp", "random-graph neighborhood recovery simulation");
    CommonArgs gnp_args;
    GraphTrialConfig gnp_cfg;
    gnp_cmd->add_option("--n", gnp_cfg.n, "vertex count")->required();
    gnp_cmd->add_option("--d", gnp_cfg.d, "connectivity constant, p = d ln(n)/n")->required();
    gnp_cmd->add_option("--j", gnp_cfg.j, "chunk size")->required();
    gnp_cmd->add_option("--T", gnp_cfg.T, "budget")->required();
    gnp_cmd->add_option("--F", gnp_args.F, "file size in symbols")->required();
    gnp_cmd->add_option("--trials", gnp_cfg.trials, "graph samples")->required();
    gnp_cmd->add_option("--seed", gnp_cfg.seed, "trial seed");
    gnp_cmd->add_flag("--open-neighborhood", gnp_cfg.open_neighborhood,
                      "exclude the node's own storage from recovery");
    add_output_flags(gnp_cmd, gnp_args);

    // mc
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo failure estimate for an allocation");
    CommonArgs mc_args;
    std::vector<long long> mc_alloc;
    std::string mc_mode = "with_repetition";
    long long mc_samples = 1'000'000;
    std::uint64_t mc_seed = 0;
    add_problem_flags(mc_cmd, mc_args);
    mc_cmd->add_option("--alloc", mc_alloc, "comma-separated symbol counts")
        ->required()
        ->delimiter(',');
    mc_cmd->add_option("--mode", mc_mode, "sampling mode")
        ->check(CLI::IsMember({"with_repetition", "without_repetition"}));
    mc_cmd->add_option("--samples", mc_samples, "sample count");
    mc_cmd->add_option("--seed", mc_seed, "sampler seed");
    add_output_flags(mc_cmd, mc_args);

    // brute
    auto* brute_cmd = app.add_subcommand("brute", "exhaustive optimum over all allocations");
    CommonArgs brute_args;
    long long brute_T = 0;
    long long brute_max_space = 5'000'000;
    add_problem_flags(brute_cmd, brute_args);
    brute_cmd->add_option("--T", brute_T, "budget")->required();
    brute_cmd->add_option("--max-space", brute_max_space, "enumeration size limit");
    add_output_flags(brute_cmd, brute_args);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("storalloc");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (app.got_subcommand(exact_cmd)) {
            const long long T = exact_T >= 0 ? exact_T : sum_of(exact_alloc);
            const Problem problem = make_problem(exact_args.n, exact_args.r, exact_args.F, T);
            const Allocation alloc = parse_allocation(exact_alloc, problem);
            const ExactResult result = count_failing_subsets(alloc, problem);
            Output output;
            output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F},
                             {"T", problem.T}, {"alloc", alloc_text(alloc.counts)}};
            output.columns = {"psi", "total", "success", "success_decimal"};
            output.results.push_back({{"psi", big_to_json(result.psi)},
                                      {"total", big_to_json(result.total)},
                                      {"success", fraction_string(result.success)},
                                      {"success_decimal", decimal(result.success)}});
            return finish(output, exact_args, "json", out, err);
        }

        if (app.got_subcommand(phi_cmd)) {
            const long long T = sum_of(phi_alloc);
            const Problem problem = make_problem(phi_args.n, phi_args.r, phi_args.F, T);
            const Allocation alloc = parse_allocation(phi_alloc, problem);
            const Rational phi = phi_from_profile(alpha_of_allocation(alloc, problem), problem.r);
            Output output;
            output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F},
                             {"T", problem.T}, {"alloc", alloc_text(alloc.counts)}};
            output.columns = {"phi", "phi_decimal"};
            output.results.push_back(
                {{"phi", fraction_string(phi)}, {"phi_decimal", decimal(phi)}});
            return finish(output, phi_args, "json", out, err);
        }

        if (app.got_subcommand(sym_cmd)) {
            const Problem problem = make_problem(sym_args.n, sym_args.r, sym_args.F, sym_T);
            Output output;
            output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F}, {"T", problem.T}};
            if (sym_j > 0) {
                const SymmetricPlan plan = make_plan(problem, sym_j);
                const Rational success = hypergeo_success_exact(plan, problem);
                OrderedJson row;
                row["j"] = plan.j;
                row["m"] = plan.m;
                row["alpha_j"] = fraction_string(plan.alpha_j);
                row["capped"] = plan.capped;
                row["success"] = decimal(success);
                row["success_exact"] = fraction_string(success);
                row["method"] = method_name(Method::hypergeometric_exact);
                // The idealized two-point profile only exists for T <= n*j.
                if (problem.T <= static_cast<long long>(problem.n) * sym_j) {
                    row["phi_binomial"] = decimal(phi_symmetric_exact(sym_j, problem));
                } else {
                    row["phi_binomial"] = nullptr;
                }
                output.columns = {"j", "m", "alpha_j", "capped", "success",
                                  "success_exact", "method", "phi_binomial"};
                output.params["mode"] = "evaluate";
                output.results.push_back(std::move(row));
            } else {
                const ScanMode mode =
                    sym_candidates ? ScanMode::candidates_only : ScanMode::full_scan;
                const SymmetricOptimum best = optimize_symmetric(problem, mode);
                output.params["mode"] =
                    sym_candidates ? "candidates_only" : "full_scan";
                output.columns = {"j_star", "m", "success", "success_exact", "method"};
                output.results.push_back(
                    {{"j_star", best.j_star},
                     {"m", best.plan.m},
                     {"success", decimal(best.success_exact)},
                     {"success_exact", fraction_string(best.success_exact)},
                     {"method", method_name(best.row.method)}});
            }
            return finish(output, sym_args, "json", out, err);
        }

        if (app.got_subcommand(sweep_cmd)) {
            Output output;
            output.params = {{"n", sweep_args.n}, {"r", sweep_args.r}, {"F", sweep_args.F},
                             {"t_min", sweep_tmin}, {"t_max", sweep_tmax},
                             {"t_step", sweep_tstep}};
            if (sweep_perj) {
                output.params["mode"] = "per_j";
                output.columns = {"T", "budget_ratio", "j", "success", "method"};
                for (const PerJRow& row : sweep_budget_per_j(sweep_args.n, sweep_args.r,
                                                             sweep_args.F, sweep_tmin,
                                                             sweep_tmax, sweep_tstep)) {
                    output.results.push_back(
                        {{"T", row.T},
                         {"budget_ratio", decimal(row.budget_ratio)},
                         {"j", row.j},
                         {"success", decimal(row.success)},
                         {"method", method_name(Method::hypergeometric_exact)}});
                }
            } else {
                const ScanMode mode =
                    sweep_candidates ? ScanMode::candidates_only : ScanMode::full_scan;
                output.params["mode"] =
                    sweep_candidates ? "candidates_only" : "full_scan";
                output.columns = {"T", "budget_ratio", "j_star", "success", "method"};
                for (const SweepRow& row :
                     sweep_budget(sweep_args.n, sweep_args.r, sweep_args.F, sweep_tmin,
                                  sweep_tmax, sweep_tstep, mode)) {
                    output.results.push_back({{"T", row.T},
                                              {"budget_ratio", decimal(row.budget_ratio)},
                                              {"j_star", row.j_star},
                                              {"success", decimal(row.success)},
                                              {"method", method_name(row.method)}});
                }
            }
            return finish(output, sweep_args, "csv", out, err);
        }

        if (app.got_subcommand(sand_cmd)) {
            Output output;
            output.columns = {"alloc", "phi", "phi_decimal", "scaled_psi",
                              "scaled_psi_decimal", "slack_upper", "bound",
                              "lower_holds", "upper_holds"};
            if (!sand_alloc.empty()) {
                const long long T = sand_T >= 0 ? sand_T : sum_of(sand_alloc);
                const Problem problem = make_problem(sand_args.n, sand_args.r, sand_args.F, T);
                const Allocation alloc = parse_allocation(sand_alloc, problem);
                output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F},
                                 {"T", problem.T}};
                output.results.push_back(sandwich_row(alloc, problem));
            } else {
                if (sand_samples < 1) {
                    throw InvalidParameter("sandwich needs --alloc or --samples >= 1");
                }
                if (sand_T < 0) throw InvalidParameter("--T is required with --samples");
                const Problem problem = make_problem(sand_args.n, sand_args.r, sand_args.F, sand_T);
                output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F},
                                 {"T", problem.T}, {"samples", sand_samples},
                                 {"seed", sand_seed}};
                for (long long i = 0; i < sand_samples; ++i) {
                    const Allocation alloc =
                        random_allocation(problem, sand_seed, static_cast<std::uint64_t>(i));
                    output.results.push_back(sandwich_row(alloc, problem));
                }
            }
            return finish(output, sand_args, "json", out, err);
        }

        if (app.got_subcommand(poisson_cmd)) {
            if (poisson_args.F < 1) throw InvalidParameter("F must be >= 1");
            if (poisson_args.r < 1) throw InvalidParameter("r must be >= 1");
            if (poisson_mu <= 0) throw InvalidParameter("mu must be positive");
            const ScanMode mode =
                poisson_full ? ScanMode::full_scan : ScanMode::candidates_only;
            const auto [j_star, best_failure] =
                optimize_symmetric_poisson(poisson_mu, poisson_args.F, poisson_args.r, mode);
            Output output;
            output.params = {{"mu", decimal(poisson_mu)}, {"F", poisson_args.F},
                             {"r", poisson_args.r},
                             {"mode", poisson_full ? "full_scan" : "candidates_only"}};
            output.columns = {"j", "failure", "success", "optimal"};
            std::vector<int> js;
            if (poisson_full) {
                for (int j = poisson_args.F; j >= 1; --j) js.push_back(j);
            } else {
                for (int i = 1; i <= poisson_args.r; ++i) {
                    const int j = (poisson_args.F + i - 1) / i;
                    if (js.empty() || js.back() != j) js.push_back(j);
                }
            }
            for (int j : js) {
                const double failure = poisson_failure(j, poisson_mu, poisson_args.F);
                output.results.push_back({{"j", j},
                                          {"failure", decimal(failure)},
                                          {"success", decimal(1.0 - failure)},
                                          {"optimal", j == j_star}});
            }
            (void)best_failure;
            return finish(output, poisson_args, "json", out, err);
        }

        if (app.got_subcommand(gnp_cmd)) {
            if (gnp_args.F < 1) throw InvalidParameter("F must be >= 1");
            const GnpEstimate estimate = gnp_recovery_rate(gnp_cfg, gnp_args.F);
            const double p = gnp_cfg.d * std::log(static_cast<double>(gnp_cfg.n)) / gnp_cfg.n;
            const double reach = 1.0 + (gnp_cfg.n - 1) * p;  // expected closed neighborhood
            const long long placed = (gnp_cfg.T / gnp_cfg.j) * gnp_cfg.j;
            const double mu = reach * static_cast<double>(placed) / gnp_cfg.n;
            Output output;
            output.params = {{"n", gnp_cfg.n}, {"d", decimal(gnp_cfg.d)}, {"j", gnp_cfg.j},
                             {"T", gnp_cfg.T}, {"F", gnp_args.F},
                             {"trials", gnp_cfg.trials}, {"seed", gnp_cfg.seed},
                             {"open_neighborhood", gnp_cfg.open_neighborhood}};
            output.columns = {"mean_success", "stderr", "trials", "p", "mu",
                              "poisson_success"};
            output.results.push_back(
                {{"mean_success", decimal(estimate.mean)},
                 {"stderr", decimal(estimate.stderr_)},
                 {"trials", estimate.trials},
                 {"p", decimal(p)},
                 {"mu", decimal(mu)},
                 {"poisson_success",
                  decimal(1.0 - poisson_failure(gnp_cfg.j, mu, gnp_args.F))}});
            return finish(output, gnp_args, "json", out, err);
        }

        if (app.got_subcommand(mc_cmd)) {
            const long long T = sum_of(mc_alloc);
            const Problem problem = make_problem(mc_args.n, mc_args.r, mc_args.F, T);
            const Allocation alloc = parse_allocation(mc_alloc, problem);
            const SampleMode mode = mc_mode == "with_repetition"
                                        ? SampleMode::with_repetition
                                        : SampleMode::without_repetition;
            const McEstimate estimate = mc_failure(alloc, problem, mode, mc_samples, mc_seed);
            Output output;
            output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F},
                             {"T", problem.T}, {"alloc", alloc_text(alloc.counts)},
                             {"mode", mc_mode}};
            output.columns = {"mean", "stderr", "samples", "seed", "mode"};
            output.results.push_back({{"mean", decimal(estimate.mean)},
                                      {"stderr", decimal(estimate.stderr_)},
                                      {"samples", estimate.samples},
                                      {"seed", estimate.seed},
                                      {"mode", mc_mode}});
            return finish(output, mc_args, "json", out, err);
        }

        if (app.got_subcommand(brute_cmd)) {
            const Problem problem = make_problem(brute_args.n, brute_args.r, brute_args.F, brute_T);
            const BruteForceReport report = brute_force_optimal(problem, BigInt(brute_max_space));
            Output output;
            output.params = {{"n", problem.n}, {"r", problem.r}, {"F", problem.F},
                             {"T", problem.T}, {"max_space", brute_max_space}};
            output.columns = {"best_psi", "search_space", "alloc"};
            for (const auto& alloc : report.optimal_allocations) {
                output.results.push_back({{"best_psi", big_to_json(report.best_psi)},
                                          {"search_space", big_to_json(report.search_space_size)},
                                          {"alloc", alloc_text(alloc)}});
            }
            return finish(output, brute_args, "json", out, err);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const SearchSpaceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace storalloc::cli
