#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bexsam/dataset.hpp"
#include "bexsam/freq_table.hpp"
#include "bexsam/model.hpp"

namespace bexsam {

struct GenConfig {
    int d = 1;
    int n = 1;
    double p_a = 0.5;                   // parent-inclusion probability
    std::optional<double> fixed_noise;  // shared p_e; empty -> per-variable uniform (0,0.5)
    std::uint64_t seed = 0;
};

// Random model: for each causal position k > 1 every earlier variable is a
// parent with probability p_a, function-table entries are uniform bits, and
// the position-1 variable gets a uniform constant. Labels coincide with
// causal positions here; sample_dataset hides the order by permuting columns.
BexsamModel random_model(const GenConfig& config, std::mt19937_64& rng);

// Draws n rows by evaluating the structural equations in causal order with
// fresh noise bits, then permutes the columns uniformly at random. The
// permutation is recorded in Dataset.labels.
Dataset sample_dataset(const BexsamModel& model, int n, std::uint64_t seed);

// Exact joint distribution over {0,1}^d, indexed with label 0 as the most
// significant bit. Refuses d > 20 (dense enumeration).
std::vector<double> exact_distribution(const BexsamModel& model);

// exact_distribution wrapped as a probability-mode FrequencyTable over
// labels 0..d-1 (total == 1).
FrequencyTable exact_table(const BexsamModel& model);

enum class YVariant { And, Or };

// Four-variable Y-structure: two roots feed a collider (AND or OR of the
// roots) which feeds a single child.
BexsamModel y_structure_model(const std::vector<double>& p, YVariant variant);

}  // namespace bexsam
