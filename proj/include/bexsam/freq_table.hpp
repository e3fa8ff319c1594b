#pragma once

#include <cstdint>
#include <vector>

#include "bexsam/dataset.hpp"
#include "bexsam/model.hpp"

namespace bexsam {

// Contingency table over the active variable set. Index encoding follows the
// labels order, first label most significant. Weights are exact integers in
// count mode; in probability mode the same structure carries an exact joint
// distribution (total == 1) so empirical and analytic paths share one code
// path.
struct FrequencyTable {
    std::vector<VarLabel> labels;
    std::vector<double> weights;  // 2^m entries
    double total = 0.0;
    bool count_mode = true;

    int width() const { return static_cast<int>(labels.size()); }
    std::size_t size() const { return weights.size(); }

    // Index of a label within labels; -1 if absent.
    int slot_of(VarLabel j) const;
};

inline constexpr int kDefaultMaxWidth = 24;

// Counts every row into a 2^m table. Throws std::length_error when m exceeds
// max_width (the table is dense, O(2^m) memory).
FrequencyTable build_frequency_table(const Dataset& data, int max_width = kDefaultMaxWidth);

// Sums out one variable; total is preserved.
FrequencyTable marginalize(const FrequencyTable& ft, VarLabel i);

// Per-selection conditional statistics for one target variable. A selection
// fixes every active variable except the target; selections with zero weight
// are void.
struct SelectionStats {
    VarLabel target = -1;
    std::vector<double> sel_weight;  // c(V) per selection, 2^(m-1) entries
    std::vector<double> p1;          // p(target=1 | V); meaningless where void
    std::vector<std::uint8_t> defined;
    long n_defined = 0;              // N_i
};

SelectionStats selection_stats(const FrequencyTable& ft, VarLabel i);

// Optional debug dump: one "bits,count" line per assignment.
std::string dump_csv(const FrequencyTable& ft);

}  // namespace bexsam
