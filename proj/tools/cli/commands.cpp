#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dictlp/model.hpp"
#include "format.hpp"
#include "random_instance.hpp"

namespace dictlp::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

StandardLP load(const CliConfig& cfg, Io io) {
    if (cfg.input == "-") return parse_lp(io.in);
    std::ifstream file(cfg.input);
    if (!file) throw UsageError("cannot open '" + cfg.input + "'");
    return parse_lp(file);
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size() || item.empty())
            throw UsageError("expected a comma-separated list of indices, got '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty index list");
    return out;
}

void print_block(std::ostream& os, const Dictionary& d) { os << format_dictionary(d); }

void print_step(std::ostream& os, const PivotStep& step, bool dual_view) {
    os << "\npivot: enter " << variable_name(Side::Primal, step.entering) << ", leave "
       << variable_name(Side::Primal, step.leaving) << '\n';
    print_block(os, step.after);
    if (dual_view) {
        os << "\npivot: enter " << variable_name(Side::Dual, step.leaving) << ", leave "
           << variable_name(Side::Dual, step.entering) << '\n';
        print_block(os, negative_transpose(step.after));
    }
}

void print_trace(std::ostream& os, const PivotTrace& trace, bool dual_view) {
    print_block(os, trace.start);
    if (dual_view) {
        os << '\n';
        print_block(os, negative_transpose(trace.start));
    }
    for (const auto& step : trace.steps) print_step(os, step, dual_view);
}

void print_vector(std::ostream& os, const std::string& key, const QVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << key << i + 1 << " = " << v[i] << '\n';
}

void print_outcome(std::ostream& os, const SolveOutcome& outcome) {
    if (const auto* opt = std::get_if<Optimal>(&outcome)) {
        os << "outcome = optimal\n";
        os << "value = " << opt->value << '\n';
        print_vector(os, "x", opt->point);
    } else if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
        os << "outcome = unbounded\n";
        print_vector(os, "x", unb->point);
        print_vector(os, "ray", unb->ray);
    } else {
        os << "outcome = infeasible\n";
        print_vector(os, "farkas", std::get<Infeasible>(outcome).farkas);
    }
}

}  // namespace

int exit_status(const SolveOutcome& outcome) {
    if (std::holds_alternative<Optimal>(outcome)) return exit_code::kOk;
    if (std::holds_alternative<Unbounded>(outcome)) return exit_code::kUnbounded;
    return exit_code::kInfeasible;
}

int cmd_solve(const CliConfig& cfg, Io io) {
    const StandardLP lp = load(cfg, io);
    const SolveReport report = solve(lp, cfg.rule);
    print_outcome(io.out, report.outcome);
    io.out << "pivots = " << report.pivot_count() << '\n';
    return exit_status(report.outcome);
}

int cmd_trace(const CliConfig& cfg, Io io) {
    const StandardLP lp = load(cfg, io);
    if (!cfg.forced_pivots.empty()) {
        PivotTrace trace{initial_dictionary(lp), {}};
        for (auto [enter, leave] : cfg.forced_pivots)
            trace.steps.push_back(PivotStep{enter, leave, pivot(trace.last(), enter, leave)});
        print_trace(io.out, trace, cfg.dual_view);
        return exit_code::kOk;
    }
    const SolveReport report = solve(lp, cfg.rule);
    for (std::size_t i = 0; i < report.phases.size(); ++i) {
        if (i) io.out << '\n';
        io.out << "phase: " << to_string(report.phases[i].kind) << '\n';
        print_trace(io.out, report.phases[i].run.trace, cfg.dual_view);
    }
    io.out << '\n';
    print_outcome(io.out, report.outcome);
    io.out << "pivots = " << report.pivot_count() << '\n';
    return exit_code::kOk;
}

int cmd_dual(const CliConfig& cfg, Io io) {
    io.out << serialize_lp(dual_lp(load(cfg, io)).first);
    return exit_code::kOk;
}

int cmd_dict(const CliConfig& cfg, Io io) {
    const StandardLP lp = load(cfg, io);
    const Dictionary d = dictionary_from_basis(augment(lp), cfg.basis);
    print_block(io.out, d);
    if (cfg.dual_view) {
        io.out << '\n';
        print_block(io.out, negative_transpose(d));
    }
    return exit_code::kOk;
}

int cmd_verify(const CliConfig& cfg, Io io) {
    const StandardLP lp = load(cfg, io);
    std::vector<BijectionReport> reports;
    try {
        reports = verify_all_bases(lp, cfg.limit, cfg.threads);
    } catch (const BudgetExceededError& e) {
        io.err << "dictlp: refusing to enumerate: C(" << lp.m() + lp.n() << ", " << lp.m() << ") = " << e.candidates()
               << " exceeds limit " << cfg.limit << '\n';
        return exit_code::kBudget;
    }
    std::size_t passed = 0;
    for (const auto& r : reports) {
        io.out << "basis ";
        for (std::size_t i = 0; i < r.basis.size(); ++i) io.out << (i ? "," : "") << r.basis[i];
        io.out << ": negative-transpose " << (r.negative_transpose_matches ? "ok" : "FAIL") << ", row-space "
               << (r.rowspace_matches ? "ok" : "FAIL");
        if (!r.passed()) io.out << " (" << r.details << ')';
        io.out << '\n';
        passed += r.passed() ? 1 : 0;
    }
    io.out << "verified " << passed << '/' << reports.size() << " bases\n";
    return passed == reports.size() ? exit_code::kOk : exit_code::kVerifyFailed;
}

int cmd_random(const CliConfig& cfg, Io io) {
    io.out << serialize_lp(random_lp(cfg.m, cfg.n, cfg.seed, cfg.bound));
    return exit_code::kOk;
}

int run(const std::vector<std::string>& args, Io io) {
    CliConfig cfg;
    CLI::App app{"Exact dictionary-based linear programming", "dictlp"};
    app.require_subcommand(1);

    std::string rule_name = "bland";
    std::vector<std::string> pivots;
    std::string basis_text;

    auto add_input = [&](CLI::App* sub) { sub->add_option("FILE", cfg.input, "LP file, '-' for stdin")->required(); };
    auto add_rule = [&](CLI::App* sub) {
        sub->add_option("--rule", rule_name, "pivot rule")->check(CLI::IsMember({"bland", "dantzig"}));
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve an LP and print the outcome with its certificate");
    add_input(solve_cmd);
    add_rule(solve_cmd);

    auto* trace_cmd = app.add_subcommand("trace", "print every dictionary along the pivot sequence");
    add_input(trace_cmd);
    add_rule(trace_cmd);
    trace_cmd->add_option("--pivot", pivots, "forced pivot 'enter,leave' (repeatable)");
    trace_cmd->add_flag("--dual-view", cfg.dual_view, "also print the dual dictionary after each step");

    auto* dual_cmd = app.add_subcommand("dual", "emit the dual LP in max form");
    add_input(dual_cmd);

    auto* dict_cmd = app.add_subcommand("dict", "print the dictionary for a basis");
    add_input(dict_cmd);
    dict_cmd->add_option("--basis", basis_text, "basic variables i1,...,im")->required();
    dict_cmd->add_flag("--dual-view", cfg.dual_view, "also print the dual dictionary");

    auto* verify_cmd = app.add_subcommand("verify", "check the primal/dual dictionary bijection on every basis");
    add_input(verify_cmd);
    verify_cmd->add_option("--limit", cfg.limit, "maximum number of candidate subsets");
    verify_cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* random_cmd = app.add_subcommand("random", "emit a seeded random LP");
    random_cmd->add_option("--m", cfg.m, "constraints")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--n", cfg.n, "decision variables")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", cfg.seed, "generator seed")->required();
    random_cmd->add_option("--bound", cfg.bound, "entries drawn from [-bound, bound]")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, io.out, io.err);
        return status == 0 ? exit_code::kOk : exit_code::kUsage;
    }

    try {
        cfg.rule = *parse_pivot_rule(rule_name);
        for (const auto& text : pivots) {
            auto pair = parse_index_list(text);
            if (pair.size() != 2) throw UsageError("--pivot expects 'enter,leave', got '" + text + "'");
            cfg.forced_pivots.emplace_back(pair[0], pair[1]);
        }
        if (!basis_text.empty()) cfg.basis = parse_index_list(basis_text);

        if (*solve_cmd) return cmd_solve(cfg, io);
        if (*trace_cmd) return cmd_trace(cfg, io);
        if (*dual_cmd) return cmd_dual(cfg, io);
        if (*dict_cmd) return cmd_dict(cfg, io);
        if (*verify_cmd) return cmd_verify(cfg, io);
        return cmd_random(cfg, io);
    } catch (const ParseError& e) {
        io.err << "dictlp: parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        io.err << "dictlp: " << e.what() << '\n';
    }
    return exit_code::kUsage;
}

}  // namespace dictlp::cli
