#include "simplexwidth/table.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/error.hpp"
#include "simplexwidth/geometry.hpp"
#include "simplexwidth/optimizer.hpp"

namespace simplexwidth {

std::string format_decimal(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

TableRow make_table_row(int n) {
    if (n < 1 || n > kMaxTableDimension) {
        throw Error(ErrorKind::invalid_dimension,
                    "table rows need 1 <= n <= " + std::to_string(kMaxTableDimension));
    }
    TableRow row{n,
                 n % 2 == 1 ? "odd" : "even",
                 width_squared(n, SimplexKind::standard),
                 width_squared(n, SimplexKind::regular),
                 0.0,
                 inradius_squared(n).sqrt(),
                 circumradius_squared(n).sqrt(),
                 std::nullopt,
                 std::nullopt};
    row.width_reg = row.width_reg_sq.sqrt();
    return row;
}

void attach_numeric_width(TableRow& row, std::uint64_t seed) {
    if (row.n > kMaxNumericTableDimension) {
        throw Error(ErrorKind::invalid_dimension,
                    "numeric widths need n <= " + std::to_string(kMaxNumericTableDimension));
    }
    OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.constrain_sum_zero = true;
    const WidthResult result = minimize_width(regular_simplex_vertices(row.n), cfg);
    row.numeric_width = result.width;
    row.abs_error = std::abs(result.width - row.width_reg);
}

std::vector<TableRow> build_table(int max_n, bool include_numeric, std::uint64_t seed) {
    const int cap = include_numeric ? kMaxNumericTableDimension : kMaxTableDimension;
    if (max_n < 1 || max_n > cap) {
        throw Error(ErrorKind::invalid_dimension, "max-n must lie in [1, " + std::to_string(cap) + "]");
    }
    std::vector<TableRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        rows.push_back(make_table_row(n));
        if (include_numeric) attach_numeric_width(rows.back(), seed);
    }
    return rows;
}

std::string csv_header(bool include_numeric) {
    std::string h = "n,parity,width_std_sq,width_reg_sq,width_reg,inradius,circumradius";
    if (include_numeric) h += ",numeric_width,abs_error";
    return h;
}

std::string to_csv(const TableRow& row, bool include_numeric) {
    std::string line = std::to_string(row.n) + "," + row.parity + "," + row.width_std_sq.str() + "," +
                       row.width_reg_sq.str() + "," + format_decimal(row.width_reg) + "," +
                       format_decimal(row.inradius) + "," + format_decimal(row.circumradius);
    if (include_numeric) {
        line += "," + (row.numeric_width ? format_decimal(*row.numeric_width) : std::string());
        line += "," + (row.abs_error ? format_decimal(*row.abs_error) : std::string());
    }
    return line;
}

std::string to_json_line(const TableRow& row) {
    // Decimals go through the 12-digit text so JSON and CSV agree.
    auto decimal = [](double v) { return std::stod(format_decimal(v)); };
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["parity"] = row.parity;
    j["width_std_sq"] = row.width_std_sq.str();
    j["width_reg_sq"] = row.width_reg_sq.str();
    j["width_reg"] = decimal(row.width_reg);
    j["inradius"] = decimal(row.inradius);
    j["circumradius"] = decimal(row.circumradius);
    if (row.numeric_width) j["numeric_width"] = decimal(*row.numeric_width);
    if (row.abs_error) j["abs_error"] = decimal(*row.abs_error);
    return j.dump();
}

}  // namespace simplexwidth
