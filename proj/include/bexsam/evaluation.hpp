#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bexsam/discovery.hpp"
#include "bexsam/generator.hpp"
#include "bexsam/model.hpp"

namespace bexsam {

// Precision/recall/F triple. Empty denominators follow a fixed convention:
// both sides empty -> F = 1, exactly one empty -> F = 0.
struct FMeasure {
    double precision = 0.0;
    double recall = 0.0;
    double f = 0.0;
    bool defined_empty = false;  // set when both sides were empty
};

struct EvalReport {
    FMeasure adjacency;
    FMeasure truth_tables;
    double ct_ms = 0.0;  // wall-clock time of discover only
};

// Estimated adjacency: h -> target iff some pair of selections differing only
// in h's coordinate has non-void, unequal truth-table entries.
AdjacencyMatrix adjacency_from_estimate(const DiscoveryResult& result, int d);

FMeasure f_measure_adjacency(const AdjacencyMatrix& truth, const AdjacencyMatrix& estimate);

// Truth-table F-measure. Each estimated table is compared against the true
// function expanded over the same conditioning set; true parents outside the
// set make the true entry undefined (never a match), and void estimates are
// skipped entirely.
FMeasure f_measure_truth_tables(const BexsamModel& truth, const DiscoveryResult& result);

EvalReport evaluate(const BexsamModel& truth, const DiscoveryResult& result, double ct_ms = 0.0);

struct BenchGrid {
    std::vector<int> d_values;
    std::vector<int> n_values;
    double p_a = 0.5;
    std::optional<double> fixed_noise;
    int trials = 1;
    std::uint64_t base_seed = 0;
    int jobs = 1;
};

struct BenchCell {
    int d = 0;
    int n = 0;
    int trials = 0;
    double mean_fa = 0.0;
    double mean_ftt = 0.0;
    double mean_ct_ms = 0.0;
};

// One generate/sample/discover/evaluate cycle per trial and cell, with seeds
// derived from (base seed, d, n, trial). CT times discover on the prebuilt
// frequency table.
std::vector<BenchCell> run_benchmark(const BenchGrid& grid);

// Confusion counts over ordered variable pairs, aggregated over trials:
// rows {true directed, true non-edge}, columns {directed, no edge,
// undirected}. The undirected column is structurally zero for this
// estimator.
struct ConfusionCounts {
    std::array<std::array<long, 3>, 2> counts{};
};

ConfusionCounts y_structure_confusion(int trials, int n, YVariant variant, std::uint64_t seed);

}  // namespace bexsam
