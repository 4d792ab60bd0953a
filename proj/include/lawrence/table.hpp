#ifndef LAWRENCE_TABLE_HPP
#define LAWRENCE_TABLE_HPP

#include "lawrence/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lawrence {

/// One row of the binary K×2×2×2 complexity table.
struct TableRow {
    std::string model;
    std::optional<int> m_expected;  // blank entries are unknown
    int g_expected;
};

/// Rows that finish in minutes on one core.
inline std::vector<TableRow> core_suite() {
    return {
        {"[123][124][134][234]", 2, 2}, {"[123][34]", 2, 2},    {"[123][14]", 2, 2},
        {"[234][12]", 2, 4},            {"[12][34]", 2, 4},     {"[12][13][4]", 2, 3},
        {"[12][14][23]", 2, 4},         {"[234][1]", 2, 8},     {"[123][4]", 2, 2},
    };
}

/// Longer rows.
inline std::vector<TableRow> extended_suite() {
    return {
        {"[12][13][23][24][34]", 4, 16},
        {"[234][12][13]", 2, 10},
        {"[34][1][2]", 2, 12},
        {"[1][2][3][4]", 2, 10},
    };
}

/// The whole table (35 rows).
inline std::vector<TableRow> full_table() {
    return {
        {"[123][124][134][234]", 2, 2},
        {"[123][124][134]", 2, 2},
        {"[123][124][234]", 2, 2},
        {"[123][124][34]", 2, 2},
        {"[123][234][14]", 4, 4},
        {"[123][14][24][34]", 4, 4},
        {"[234][12][13][14]", std::nullopt, 12},
        {"[12][13][14][23][24][34]", std::nullopt, 10},
        {"[123][124]", 2, 2},
        {"[123][234]", 2, 2},
        {"[123][24][34]", 4, 4},
        {"[234][12][13]", 2, 10},
        {"[123][14][24]", 2, 2},
        {"[12][13][23][24][34]", 4, 16},
        {"[12][13][14][23][24]", 2, 4},
        {"[123][34]", 2, 2},
        {"[123][14]", 2, 2},
        {"[234][12]", 2, 4},
        {"[12][13][23][34]", 2, 10},
        {"[12][13][23][14]", 2, 2},
        {"[12][23][24][34]", 4, 8},
        {"[12][14][23][34]", 4, 5},
        {"[123][4]", 2, 2},
        {"[234][1]", 2, 8},
        {"[12][13][23][4]", 2, 8},
        {"[23][24][34][1]", 4, 16},
        {"[12][23][34]", 2, 6},
        {"[12][14][23]", 2, 4},
        {"[12][23][4]", 2, 6},
        {"[12][13][4]", 2, 3},
        {"[23][34][1]", 2, 14},
        {"[12][34]", 2, 4},
        {"[12][3][4]", 2, 4},
        {"[34][1][2]", 2, 12},
        {"[1][2][3][4]", 2, 10},
    };
}

inline std::vector<TableRow> suite_rows(const std::string& name) {
    if (name == "core") return core_suite();
    if (name == "extended") return extended_suite();
    if (name == "full") return full_table();
    throw precondition_error("unknown suite '" + name + "' (core, extended, full)");
}

}  // namespace lawrence

#endif
