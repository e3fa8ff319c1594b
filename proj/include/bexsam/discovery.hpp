#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bexsam/freq_table.hpp"

namespace bexsam {

enum class TtEntry : std::uint8_t { Zero = 0, One = 1, Void = 2 };

// Estimated Boolean function of one target. Entries are indexed over the
// conditioning labels with the same bit encoding as FrequencyTable; an entry
// is void iff its selection never occurred.
struct TruthTableEstimate {
    VarLabel target = -1;
    std::vector<VarLabel> conditioning;
    std::vector<TtEntry> entries;  // 2^|conditioning|
};

struct DiscoveryStep {
    VarLabel target = -1;
    double mi_score = 0.0;
    TruthTableEstimate tt;
};

// Steps in elimination order: the bottom of the causal order comes first.
struct DiscoveryResult {
    std::vector<DiscoveryStep> steps;

    // Causal order, top first (reverse of elimination order).
    std::vector<VarLabel> causal_order() const;
};

// Mutual information between the target and the remaining variables after
// sorting the target's conditional distribution ascending in every non-void
// selection. Zero iff the sorted target is independent of the selections,
// which characterizes a childless variable.
double sorted_mutual_information(const FrequencyTable& ft, VarLabel i);

// Label with the minimum sorted mutual information (ties: lowest label id),
// plus the full score vector for tracing.
std::pair<VarLabel, std::vector<std::pair<VarLabel, double>>> find_sink(const FrequencyTable& ft);

// Majority decision per selection: 1 iff p(x_i=1|V) strictly exceeds
// p(x_i=0|V), 0 otherwise; void where the selection is unobserved.
TruthTableEstimate find_truth_table(const FrequencyTable& ft, VarLabel i);

// Full elimination loop: repeatedly find a sink, estimate its function, and
// marginalize it out of the table.
DiscoveryResult discover(const FrequencyTable& ft);
DiscoveryResult discover(const Dataset& data, int max_width = kDefaultMaxWidth);

}  // namespace bexsam
