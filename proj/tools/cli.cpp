#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

#include <CLI11.hpp>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/directions.hpp"
#include "simplexwidth/error.hpp"
#include "simplexwidth/geometry.hpp"
#include "simplexwidth/optimizer.hpp"
#include "simplexwidth/table.hpp"
#include "simplexwidth/verify.hpp"

namespace simplexwidth::cli {

namespace {

struct Settings {
    int n = 0;
    int max_n = 0;
    std::string kind = "regular";
    std::string format = "csv";
    bool exact = false;
    bool include_numeric = false;
    bool list = false;
    int restarts = 64;
    std::uint64_t seed = 0;
    double tol = 1e-10;
};

std::string render(const Direction& u) {
    std::string s = "[";
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (i > 0) s += ", ";
        s += format_decimal(u[i]);
    }
    return s + "]";
}

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << "\n";
    return kExitUsage;
}

int cmd_table(const Settings& s, std::ostream& out, std::ostream& err) {
    const int cap = s.include_numeric ? kMaxNumericTableDimension : kMaxTableDimension;
    if (s.max_n < 1 || s.max_n > cap) {
        return usage_error(err, "--max-n must lie in [1, " + std::to_string(cap) + "]");
    }
    const bool csv = s.format == "csv";
    if (csv) out << csv_header(s.include_numeric) << "\n";
    for (int n = 1; n <= s.max_n; ++n) {
        TableRow row = make_table_row(n);
        if (s.include_numeric) attach_numeric_width(row, s.seed);
        out << (csv ? to_csv(row, s.include_numeric) : to_json_line(row)) << "\n";
    }
    return kExitOk;
}

int cmd_width(const Settings& s, std::ostream& out) {
    const ExactScalar sq = width_squared(s.n, parse_simplex_kind(s.kind));
    if (s.exact) {
        out << "width^2 = " << sq.str() << "\n";
    } else {
        out << "width = " << format_decimal(sq.sqrt()) << "\n";
    }
    return kExitOk;
}

int cmd_optimize(const Settings& s, std::ostream& out) {
    OptimizerConfig cfg;
    cfg.restarts = s.restarts;
    cfg.seed = s.seed;
    cfg.tol = s.tol;
    cfg.constrain_sum_zero = true;
    const double closed = width_squared(s.n, SimplexKind::standard).sqrt();
    const WidthResult r = minimize_width(standard_simplex_vertices(s.n), cfg);
    out << "n: " << s.n << "\n"
        << "width: " << format_decimal(r.width) << "\n"
        << "closed-form: " << format_decimal(closed) << "\n"
        << "direction: " << render(r.direction) << "\n"
        << "iterations: " << r.iterations << "\n"
        << "converged: " << (r.converged ? "true" : "false") << "\n"
        << "optimal-family: " << (is_optimal_direction(s.n, r.direction) ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_directions(const Settings& s, std::ostream& out) {
    const std::vector<Direction> family = enumerate_optimal_directions(s.n);
    const double width = width_squared(s.n, SimplexKind::standard).sqrt();
    out << "count: " << family.size() << "\n"
        << "width: " << format_decimal(width) << "\n";
    if (s.list) {
        for (const Direction& u : family) out << render(u) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err, bool color) {
    if (s.max_n < 1 || s.max_n > kMaxVerifyDimension) {
        return usage_error(err, "--max-n must lie in [1, " + std::to_string(kMaxVerifyDimension) + "]");
    }
    const std::vector<CheckResult> checks = run_verification(s.max_n, s.seed);
    int failed = 0;
    for (const CheckResult& c : checks) {
        const char* tag = c.passed ? "PASS" : "FAIL";
        if (color) {
            out << (c.passed ? "\033[32m" : "\033[31m") << tag << "\033[0m";
        } else {
            out << tag;
        }
        out << "  " << c.name << "  (" << c.detail << ")\n";
        if (!c.passed) ++failed;
    }
    out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    if (failed > 0) {
        for (const CheckResult& c : checks) {
            if (!c.passed) err << "failed check: " << c.name << "\n";
        }
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Options options) {
    CLI::App app{"Exact and numerical widths of regular simplices", "simplexwidth"};
    app.require_subcommand(1);
    Settings s;

    auto* table = app.add_subcommand("table", "Closed-form widths and radii for n = 1..max-n");
    table->add_option("--max-n", s.max_n, "Largest dimension")->required();
    table->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    table->add_flag("--include-numeric", s.include_numeric, "Add optimizer widths (max-n <= 100)");
    table->add_option("--seed", s.seed, "Optimizer seed");

    auto* width = app.add_subcommand("width", "Width of one simplex");
    width->add_option("--n", s.n, "Simplex dimension")->required();
    width->add_option("--kind", s.kind, "Simplex kind")->check(CLI::IsMember({"standard", "regular"}));
    width->add_flag("--exact", s.exact, "Print the squared width as a rational");

    auto* optimize = app.add_subcommand("optimize", "Numerically minimize the width of the standard simplex");
    optimize->add_option("--n", s.n, "Simplex dimension")->required();
    optimize->add_option("--restarts", s.restarts, "Random restarts");
    optimize->add_option("--seed", s.seed, "Root seed");
    optimize->add_option("--tol", s.tol, "Convergence tolerance");

    auto* directions = app.add_subcommand("directions", "Optimal direction family of the standard simplex");
    directions->add_option("--n", s.n, "Simplex dimension")->required();
    directions->add_flag("--list", s.list, "Print every direction");

    auto* verify = app.add_subcommand("verify", "Run every self-check");
    verify->add_option("--max-n", s.max_n, "Largest dimension (<= 64)")->required();
    verify->add_option("--seed", s.seed, "Root seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return usage_error(err, e.what());
    }

    try {
        if (*table) return cmd_table(s, out, err);
        if (*width) return cmd_width(s, out);
        if (*optimize) return cmd_optimize(s, out);
        if (*directions) return cmd_directions(s, out);
        if (*verify) return cmd_verify(s, out, err, options.color);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::invalid_dimension:
            case ErrorKind::domain:
            case ErrorKind::invalid_argument:
            case ErrorKind::cap_exceeded:
                return kExitUsage;
            default:
                return kExitFailure;
        }
    }
    return kExitUsage;
}

}  // namespace simplexwidth::cli
