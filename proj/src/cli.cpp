#include "grover/cli.hpp"

#include "grover/circuit.hpp"
#include "grover/planner.hpp"
#include "grover/state.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace grover {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_unattainable = 2;

// JSON carries 12 significant digits, CSV 10; below that, golden files churn
// on benign floating-point differences across platforms.
std::string json_num(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string csv_num(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

const char* bool_str(bool value) { return value ? "true" : "false"; }

// ---------------------------------------------------------------------------
// target resolution
// ---------------------------------------------------------------------------

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            tokens.push_back(text.substr(start));
            return tokens;
        }
        tokens.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

// A token of exactly n characters over {0,1} is a bitstring in ket order
// (leftmost character is qubit n-1); anything else is a decimal index.
std::uint64_t parse_target_token(const std::string& token, int n) {
    if (token.empty())
        throw std::invalid_argument("empty target token");
    const bool binary = std::all_of(token.begin(), token.end(),
                                    [](char c) { return c == '0' || c == '1'; });
    if (binary && token.size() == static_cast<std::size_t>(n)) {
        std::uint64_t index = 0;
        for (char c : token)
            index = index * 2 + static_cast<std::uint64_t>(c - '0');
        return index;
    }
    if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("target '" + token + "' is neither a length-" +
                                    std::to_string(n) + " bitstring nor a decimal index");
    try {
        return std::stoull(token);
    } catch (const std::exception&) {
        throw std::invalid_argument("target index '" + token + "' is out of range");
    }
}

std::vector<std::uint64_t> parse_targets(const std::string& csv, int n) {
    std::vector<std::uint64_t> targets;
    for (const std::string& token : split_commas(csv))
        targets.push_back(parse_target_token(token, n));
    return targets;
}

// Unbiased draw in [0, bound) by rejection; mt19937_64 output is specified by
// the standard, so draws are identical across platforms.
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t raw = rng();
        if (raw >= threshold)
            return raw % bound;
    }
}

// Floyd's sampling: m distinct indices from [0, 2^n), sorted ascending.
std::vector<std::uint64_t> draw_targets(int n, std::uint64_t count, std::uint64_t seed) {
    const std::uint64_t size = std::uint64_t{1} << n;
    if (count < 1 || count > size)
        throw std::domain_error("target count must be in [1, 2^n], got " + std::to_string(count));
    std::mt19937_64 rng(seed);
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = size - count; j < size; ++j) {
        const std::uint64_t pick = bounded_random(rng, j + 1);
        if (!chosen.insert(pick).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

struct TargetArgs {
    std::string explicit_targets;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    bool has_explicit = false;
    bool has_count = false;
};

std::vector<std::uint64_t> resolve_targets(int n, const TargetArgs& args) {
    if (args.has_explicit == args.has_count)
        throw std::invalid_argument("exactly one of --targets and --m must be given");
    if (args.has_explicit)
        return parse_targets(args.explicit_targets, n);
    return draw_targets(n, args.count, args.seed);
}

// Number of targets for commands that do not care about their identities.
std::uint64_t resolve_target_count(int n, const TargetArgs& args) {
    if (args.has_explicit == args.has_count)
        throw std::invalid_argument("exactly one of --targets and --m must be given");
    if (args.has_explicit)
        return SearchSpec(n, parse_targets(args.explicit_targets, n)).target_count();
    return args.count;
}

// ---------------------------------------------------------------------------
// output documents
// ---------------------------------------------------------------------------

std::string bound_json(const BoundReport& report, const std::string& indent) {
    std::string body = "{\n";
    body += indent + "  \"rational\": " + bool_str(report.rational) + ",\n";
    if (report.rational) {
        body += indent + "  \"a\": " + std::to_string(report.numerator) + ",\n";
        body += indent + "  \"b\": " + std::to_string(report.denominator) + ",\n";
        body += indent + "  \"achievable_set\": [";
        for (std::size_t i = 0; i < report.achievable_set.size(); ++i) {
            if (i > 0)
                body += ", ";
            body += json_num(report.achievable_set[i]);
        }
        body += "],\n";
    }
    body += indent + "  \"supremum\": " + json_num(report.supremum) + ",\n";
    body += indent + "  \"supremum_attained\": " + bool_str(report.supremum_attained) + "\n";
    body += indent + "}";
    return body;
}

int run_plan(int n, std::uint64_t target_count, double delta, const std::string& format,
             std::ostream& out) {
    const std::uint64_t size = std::uint64_t{1} << n;
    const Plan result = plan(size, target_count, delta);
    const std::int64_t base_k = baseline_k(size, target_count);
    const double base_success = success_probability(result.theta, base_k);

    if (format == "csv") {
        out << "n,N,M,theta,delta,p,k,predicted_success,attainable,degenerate_half,"
               "baseline_k,baseline_success\n";
        out << n << ',' << size << ',' << target_count << ',' << csv_num(result.theta) << ','
            << csv_num(result.delta) << ',' << result.p_opt << ',' << result.k_opt << ','
            << csv_num(result.predicted_success) << ',' << bool_str(result.attainable) << ','
            << bool_str(result.degenerate_half) << ',' << base_k << ',' << csv_num(base_success)
            << '\n';
    } else {
        out << "{\n";
        out << "  \"n\": " << n << ",\n";
        out << "  \"N\": " << size << ",\n";
        out << "  \"M\": " << target_count << ",\n";
        out << "  \"theta\": " << json_num(result.theta) << ",\n";
        out << "  \"delta\": " << json_num(result.delta) << ",\n";
        out << "  \"p\": " << result.p_opt << ",\n";
        out << "  \"k\": " << result.k_opt << ",\n";
        out << "  \"predicted_success\": " << json_num(result.predicted_success) << ",\n";
        out << "  \"attainable\": " << bool_str(result.attainable) << ",\n";
        out << "  \"degenerate_half\": " << bool_str(result.degenerate_half) << ",\n";
        out << "  \"baseline_k\": " << base_k << ",\n";
        out << "  \"baseline_success\": " << json_num(base_success);
        if (!result.attainable) {
            out << ",\n";
            out << "  \"best_k\": " << result.best_k << ",\n";
            out << "  \"best_success\": " << json_num(result.best_success);
            if (result.bound) {
                out << ",\n";
                out << "  \"bound\": " << bound_json(*result.bound, "  ");
            }
        }
        out << "\n}\n";
    }
    return result.attainable ? exit_ok : exit_unattainable;
}

int run_simulate(int n, const std::vector<std::uint64_t>& targets, std::int64_t k,
                 bool per_state, const std::string& dump_path, const std::string& format,
                 std::ostream& out) {
    const SearchSpec spec(n, targets);
    const Circuit circuit = build_grover(spec, k);
    if (!dump_path.empty()) {
        std::ofstream file(dump_path);
        if (!file)
            throw std::invalid_argument("cannot open '" + dump_path + "' for writing");
        file << format_circuit(circuit);
    }

    State state = basis_state(n, 0);
    apply_circuit(state, circuit);
    const double success = success_probability_of<double>(state, spec.targets());
    const double others = std::max(0.0, state.amplitudes.squaredNorm() - success);

    if (format == "csv") {
        if (per_state) {
            out << "index,bitstring,probability,is_target\n";
            for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
                const auto index = static_cast<std::uint64_t>(i);
                out << index << ',' << to_bitstring(index, n) << ','
                    << csv_num(std::norm(state.amplitudes[i])) << ','
                    << bool_str(spec.is_target(index)) << '\n';
            }
        } else {
            out << "k,success_probability,others_combined\n";
            out << k << ',' << csv_num(success) << ',' << csv_num(others) << '\n';
        }
        return exit_ok;
    }

    out << "{\n";
    out << "  \"n\": " << n << ",\n";
    out << "  \"N\": " << spec.database_size() << ",\n";
    out << "  \"M\": " << spec.target_count() << ",\n";
    out << "  \"k\": " << k << ",\n";
    out << "  \"success_probability\": " << json_num(success) << ",\n";
    out << "  \"per_target\": [\n";
    for (std::size_t i = 0; i < spec.targets().size(); ++i) {
        const std::uint64_t target = spec.targets()[i];
        out << "    {\"index\": " << target << ", \"bitstring\": \"" << to_bitstring(target, n)
            << "\", \"probability\": "
            << json_num(std::norm(state.amplitudes[static_cast<Eigen::Index>(target)])) << "}"
            << (i + 1 < spec.targets().size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"others_combined\": " << json_num(others);
    if (per_state) {
        out << ",\n  \"per_state\": [";
        for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
            if (i > 0)
                out << ", ";
            out << json_num(std::norm(state.amplitudes[i]));
        }
        out << "]";
    }
    out << "\n}\n";
    return exit_ok;
}

int run_sweep(int n, const std::vector<std::uint64_t>& targets, std::int64_t k_max,
              const std::string& format, std::ostream& out) {
    const SearchSpec spec(n, targets);
    const double angle = theta(spec.database_size(), spec.target_count());
    const Circuit oracle = build_oracle(spec);
    const Circuit diffusion = build_diffusion(n);

    // Incremental simulation: the state after k iterations is a prefix of the
    // state after k+1, so one pass covers every row.
    State state = uniform_state(n);
    std::vector<std::pair<double, double>> rows;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        if (k > 0) {
            apply_circuit(state, oracle);
            apply_circuit(state, diffusion);
        }
        rows.emplace_back(success_probability(angle, k),
                          success_probability_of<double>(state, spec.targets()));
    }

    if (format == "json") {
        out << "{\n";
        out << "  \"n\": " << n << ",\n";
        out << "  \"N\": " << spec.database_size() << ",\n";
        out << "  \"M\": " << spec.target_count() << ",\n";
        out << "  \"rows\": [\n";
        for (std::size_t k = 0; k < rows.size(); ++k) {
            out << "    {\"k\": " << k << ", \"analytic_success\": " << json_num(rows[k].first)
                << ", \"simulated_success\": " << json_num(rows[k].second) << "}"
                << (k + 1 < rows.size() ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
    } else {
        out << "k,analytic_success,simulated_success\n";
        for (std::size_t k = 0; k < rows.size(); ++k)
            out << k << ',' << csv_num(rows[k].first) << ',' << csv_num(rows[k].second) << '\n';
    }
    return exit_ok;
}

int run_bound(int n, std::uint64_t target_count, const std::string& format, std::ostream& out) {
    const std::uint64_t size = std::uint64_t{1} << n;
    const BoundReport report = achievable_bound(size, target_count);
    const double angle = theta(size, target_count);

    if (format == "csv") {
        out << "rational,a,b,supremum,supremum_attained,achievable_set\n";
        out << bool_str(report.rational) << ',';
        if (report.rational)
            out << report.numerator << ',' << report.denominator;
        else
            out << ',';
        out << ',' << csv_num(report.supremum) << ',' << bool_str(report.supremum_attained) << ',';
        for (std::size_t i = 0; i < report.achievable_set.size(); ++i) {
            if (i > 0)
                out << '|';
            out << csv_num(report.achievable_set[i]);
        }
        out << '\n';
        return exit_ok;
    }

    out << "{\n";
    out << "  \"n\": " << n << ",\n";
    out << "  \"N\": " << size << ",\n";
    out << "  \"M\": " << target_count << ",\n";
    out << "  \"theta\": " << json_num(angle) << ",\n";
    out << "  \"rational\": " << bool_str(report.rational) << ",\n";
    if (report.rational) {
        out << "  \"a\": " << report.numerator << ",\n";
        out << "  \"b\": " << report.denominator << ",\n";
        out << "  \"achievable_set\": [";
        for (std::size_t i = 0; i < report.achievable_set.size(); ++i) {
            if (i > 0)
                out << ", ";
            out << json_num(report.achievable_set[i]);
        }
        out << "],\n";
    }
    out << "  \"supremum\": " << json_num(report.supremum) << ",\n";
    out << "  \"supremum_attained\": " << bool_str(report.supremum_attained) << "\n";
    out << "}\n";
    return exit_ok;
}

int run_compare(int n, double delta, const std::string& format, std::ostream& out) {
    const std::uint64_t size = std::uint64_t{1} << n;
    struct Row {
        std::uint64_t m;
        std::int64_t baseline;
        double baseline_success;
        std::int64_t k_opt;
        double opt_success;
    };
    std::vector<Row> rows;
    for (std::uint64_t m = 1; m <= size; ++m) {
        const Plan result = plan(size, m, delta);
        const std::int64_t base_k = baseline_k(size, m);
        rows.push_back({m, base_k, success_probability(result.theta, base_k), result.k_opt,
                        result.predicted_success});
    }

    if (format == "json") {
        out << "{\n";
        out << "  \"n\": " << n << ",\n";
        out << "  \"delta\": " << json_num(delta) << ",\n";
        out << "  \"rows\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Row& row = rows[i];
            out << "    {\"m\": " << row.m << ", \"baseline_k\": " << row.baseline
                << ", \"baseline_success\": " << json_num(row.baseline_success)
                << ", \"k_opt\": " << row.k_opt
                << ", \"opt_success\": " << json_num(row.opt_success) << "}"
                << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
    } else {
        out << "m,baseline_k,baseline_success,k_opt,opt_success,delta\n";
        for (const Row& row : rows)
            out << row.m << ',' << row.baseline << ',' << csv_num(row.baseline_success) << ','
                << row.k_opt << ',' << csv_num(row.opt_success) << ',' << csv_num(delta) << '\n';
    }
    return exit_ok;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact statevector simulation and optimal-iteration planning for Grover search",
                 "grover"};
    app.require_subcommand(1);

    int n = 0;
    TargetArgs targets;
    double delta = 0.95;
    std::int64_t k = 0;
    std::int64_t k_max = 0;
    std::string format = "json";
    std::string table_format = "csv";
    bool per_state = false;
    std::string dump_path;

    const auto add_common = [&](CLI::App* cmd, std::string& fmt) {
        cmd->add_option("--n", n, "qubit count (database size 2^n)")
            ->required()
            ->check(CLI::Range(1, max_state_qubits));
        cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember({"json", "csv"}));
    };
    const auto add_target_choice = [&](CLI::App* cmd) {
        auto* opt_targets =
            cmd->add_option("--targets", targets.explicit_targets,
                            "comma-separated targets: length-n bitstrings or decimal indices");
        auto* opt_count = cmd->add_option("--m", targets.count,
                                          "number of targets, drawn without replacement");
        opt_targets->excludes(opt_count);
        cmd->add_option("--seed", targets.seed, "seed for the --m target draw");
        cmd->parse_complete_callback([&, opt_targets, opt_count] {
            targets.has_explicit = opt_targets->count() > 0;
            targets.has_count = opt_count->count() > 0;
        });
    };

    CLI::App* plan_cmd = app.add_subcommand("plan", "optimal iteration count for a threshold");
    add_common(plan_cmd, format);
    add_target_choice(plan_cmd);
    plan_cmd->add_option("--delta", delta, "success-probability threshold in (0, 1]")->required();

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "exact statevector run at fixed k");
    add_common(simulate_cmd, format);
    add_target_choice(simulate_cmd);
    simulate_cmd->add_option("--k", k, "iteration count")->required()->check(CLI::NonNegativeNumber);
    simulate_cmd->add_flag("--per-state", per_state, "list every basis-state probability");
    simulate_cmd->add_option("--dump-circuit", dump_path, "write the gate list to a file");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "success probability for k = 0..k_max");
    add_common(sweep_cmd, table_format);
    add_target_choice(sweep_cmd);
    sweep_cmd->add_option("--k-max", k_max, "largest iteration count")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* bound_cmd = app.add_subcommand("bound", "achievable success-probability analysis");
    add_common(bound_cmd, format);
    add_target_choice(bound_cmd);

    CLI::App* compare_cmd = app.add_subcommand("compare", "asymptotic baseline vs optimal, m = 1..N");
    add_common(compare_cmd, table_format);
    compare_cmd->add_option("--delta", delta, "success-probability threshold in (0, 1]");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (plan_cmd->parsed())
            return run_plan(n, resolve_target_count(n, targets), delta, format, out);
        if (simulate_cmd->parsed())
            return run_simulate(n, resolve_targets(n, targets), k, per_state, dump_path, format,
                                out);
        if (sweep_cmd->parsed())
            return run_sweep(n, resolve_targets(n, targets), k_max, table_format, out);
        if (bound_cmd->parsed())
            return run_bound(n, resolve_target_count(n, targets), format, out);
        if (compare_cmd->parsed())
            return run_compare(n, delta, table_format, out);
        err << "error: no command given\n";
        return exit_usage;
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace grover
