#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simplexwidth/exact.hpp"

namespace simplexwidth {

/// Decimal with 12 significant digits, shortest form ("1", "0.866025403784").
std::string format_decimal(double value);

/// One line of the closed-form table for a given n.
struct TableRow {
    int n;
    std::string parity;  // "odd" | "even"
    ExactScalar width_std_sq;
    ExactScalar width_reg_sq;
    double width_reg;
    double inradius;
    double circumradius;
    std::optional<double> numeric_width;
    std::optional<double> abs_error;
};

inline constexpr int kMaxTableDimension = 10'000;
inline constexpr int kMaxNumericTableDimension = 100;

TableRow make_table_row(int n);

/// Adds the optimizer's width of the regular simplex and its deviation from
/// the closed form.
void attach_numeric_width(TableRow& row, std::uint64_t seed);

std::vector<TableRow> build_table(int max_n, bool include_numeric, std::uint64_t seed);

std::string csv_header(bool include_numeric);
std::string to_csv(const TableRow& row, bool include_numeric);
std::string to_json_line(const TableRow& row);

}  // namespace simplexwidth
