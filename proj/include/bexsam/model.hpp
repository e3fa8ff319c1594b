#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bexsam {

// Observation-order variable label in [0, d). Labels identify columns of a
// data set; they carry no information about causal position.
using VarLabel = int;

// Boolean function of one variable: the parent list fixes the table layout.
// Parents are ordered by causal position, and the parent with the lowest
// causal position maps to the most significant bit of the table index.
struct ParentFunction {
    std::vector<VarLabel> parents;
    std::vector<std::uint8_t> table;  // 2^parents.size() entries, each 0/1
};

// Generative model: x at causal position k equals f(parents) XOR e, where e
// is Bernoulli noise with P(e=1) strictly inside (0, 0.5).
struct BexsamModel {
    int d = 0;
    std::vector<VarLabel> order;            // causal position k -> label
    std::vector<ParentFunction> functions;  // indexed by label
    std::vector<double> noise;              // P(e=1), indexed by label

    // Causal position of a label; throws std::out_of_range for unknown labels.
    int position_of(VarLabel j) const;
};

// Returns one human-readable string per violated invariant; empty means valid.
std::vector<std::string> validate_model(const BexsamModel& model);

// Evaluates f_j on the parent bits extracted from a full assignment
// (indexed by label). Non-parent bits are ignored.
bool eval_function(const BexsamModel& model, VarLabel j,
                   const std::vector<std::uint8_t>& assignment);

// f_j(assignment) XOR noise_bit.
bool structural_equation(const BexsamModel& model, VarLabel j,
                         const std::vector<std::uint8_t>& assignment,
                         bool noise_bit);

struct AdjacencyMatrix {
    int d = 0;
    std::vector<std::uint8_t> bits;  // row-major; (h, j) = 1 iff h -> j

    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int dim) : d(dim), bits(static_cast<size_t>(dim) * dim, 0) {}

    std::uint8_t at(int h, int j) const { return bits[static_cast<size_t>(h) * d + j]; }
    void set(int h, int j, std::uint8_t v) { bits[static_cast<size_t>(h) * d + j] = v; }
    int ones() const;
};

// Adjacency of the structural dependence relation. A listed parent whose flip
// never changes the function value is pruned.
AdjacencyMatrix adjacency_of_model(const BexsamModel& model);

}  // namespace bexsam
