#pragma once

#include <vector>

#include "bexsam/generator.hpp"
#include "bexsam/model.hpp"

namespace bexsam::testing {

// Four-variable reference model:
//   x1 = e1, x2 = x1 ^ e2, x3 = (x1 & x2) ^ e3, x4 = (x1 | x3) ^ e4
// (labels 0-based).
inline BexsamModel example1_model(double p1 = 0.2, double p2 = 0.3,
                                  double p3 = 0.1, double p4 = 0.25) {
    BexsamModel m;
    m.d = 4;
    m.order = {0, 1, 2, 3};
    m.noise = {p1, p2, p3, p4};
    m.functions.resize(4);
    m.functions[0] = {{}, {0}};
    m.functions[1] = {{0}, {0, 1}};
    m.functions[2] = {{0, 1}, {0, 0, 0, 1}};
    m.functions[3] = {{0, 2}, {0, 1, 1, 1}};
    return m;
}

// True iff label j has no child among `remaining` under the pruned adjacency.
inline bool is_childless_in(const AdjacencyMatrix& adj, VarLabel j,
                            const std::vector<VarLabel>& remaining) {
    for (VarLabel c : remaining) {
        if (c != j && adj.at(j, c)) return false;
    }
    return true;
}

}  // namespace bexsam::testing
