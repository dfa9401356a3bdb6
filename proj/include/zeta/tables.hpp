#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zeta::tables {

// Rows of the three shipped reference tables (data/*.csv).

struct Row33 {
    std::int64_t k = 0;
    double b = 0.0, a = 0.0;
    double value = 0.0;
    int decimals = 5;  // digits printed after the point in `value`
};

struct Row42 {
    std::int64_t k = 0;
    double b_neg = 0.0, b_pos = 0.0;
    double t7_value = 0.0;
    double b0 = 0.0;
    double t6_value = 0.0;
    double best = 0.0;
};

struct Row66 {
    int m = 0;
    std::int64_t k = 0;
    double value = 0.0;
    int r = 0;
};

// Loaders skip '#' comments and require the exact header row; they throw
// std::runtime_error on malformed input.
std::vector<Row33> load_table33(std::istream& in);
std::vector<Row42> load_table42(std::istream& in);
std::vector<Row66> load_table66(std::istream& in);
std::vector<Row33> load_table33_file(const std::string& path);
std::vector<Row42> load_table42_file(const std::string& path);
std::vector<Row66> load_table66_file(const std::string& path);

// Row extents of the shipped files.
std::vector<std::int64_t> table33_ks();
std::vector<std::int64_t> table42_ks();
std::vector<int> table66_ms();
std::vector<std::int64_t> table66_ks();

// Recompute tables from the optimizers.  Rows come back in extent order no
// matter how the work is split.
std::vector<Row33> generate_table33(const std::vector<std::int64_t>& ks,
                                    int workers = 1);
std::vector<Row42> generate_table42(const std::vector<std::int64_t>& ks,
                                    int workers = 1);
std::vector<Row66> generate_table66(const std::vector<int>& ms,
                                    const std::vector<std::int64_t>& ks,
                                    int r_max = 10, int workers = 1,
                                    std::uint64_t seed = 0x600dbeefull);

struct DiffReport {
    int rows_checked = 0;
    int rows_skipped = 0;
    double max_dev = 0.0;
    bool pass = true;
    std::vector<std::string> failures;  // one line per failing row
};

// Reference-vs-recomputed comparisons.  Tolerances are fixed here, not
// caller-tunable:
//  - 3.3: bound at the row's (b, a) within 1.5e-{decimals} of the printed
//    value, and the k-optimum at least printed - 1e-5.
//  - 4.2: both optima within 1e-6 of the printed values, best column equals
//    max of the two, and the stronger theorem flips exactly at k = 10/11.
//  - 6.6: rows with r <= r_cap only; best_bound(k, m, max(r, 1)) within
//    relative 1e-3 below the printed value and never above it by more than
//    print rounding (5e-7 + 1e-9).
DiffReport diff_table33(const std::vector<Row33>& ref, int workers = 1);
DiffReport diff_table42(const std::vector<Row42>& ref, int workers = 1);
DiffReport diff_table66(const std::vector<Row66>& ref, int r_cap = 4,
                        int workers = 1,
                        std::uint64_t seed = 0x600dbeefull);

}  // namespace zeta::tables
