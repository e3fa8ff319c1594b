#include "bexsam/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace bexsam {

int BexsamModel::position_of(VarLabel j) const {
    for (int k = 0; k < static_cast<int>(order.size()); ++k) {
        if (order[k] == j) return k;
    }
    throw std::out_of_range("unknown variable label " + std::to_string(j));
}

std::vector<std::string> validate_model(const BexsamModel& model) {
    std::vector<std::string> violations;
    const int d = model.d;

    if (d < 1) {
        violations.push_back("variable count d must be >= 1");
        return violations;
    }
    if (static_cast<int>(model.order.size()) != d ||
        static_cast<int>(model.functions.size()) != d ||
        static_cast<int>(model.noise.size()) != d) {
        violations.push_back("order/functions/noise sizes do not match d");
        return violations;
    }

    std::vector<int> position(d, -1);
    for (int k = 0; k < d; ++k) {
        const VarLabel j = model.order[k];
        if (j < 0 || j >= d) {
            violations.push_back("label " + std::to_string(j) + ": out of range in order");
            return violations;
        }
        if (position[j] != -1) {
            violations.push_back("label " + std::to_string(j) + ": duplicated in order");
            return violations;
        }
        position[j] = k;
    }

    for (VarLabel j = 0; j < d; ++j) {
        const ParentFunction& f = model.functions[j];
        for (VarLabel h : f.parents) {
            if (h < 0 || h >= d) {
                violations.push_back("label " + std::to_string(j) +
                                     ": parent label out of range");
            } else if (position[h] >= position[j]) {
                violations.push_back("label " + std::to_string(j) +
                                     ": parent " + std::to_string(h) +
                                     " is not earlier in the causal order (acyclicity)");
            }
        }
        for (size_t a = 0; a + 1 < f.parents.size(); ++a) {
            if (position[f.parents[a]] >= position[f.parents[a + 1]]) {
                violations.push_back("label " + std::to_string(j) +
                                     ": parents not sorted by causal position");
                break;
            }
        }
        const size_t expected = size_t{1} << f.parents.size();
        if (f.table.size() != expected) {
            violations.push_back("label " + std::to_string(j) +
                                 ": function table length != 2^|parents|");
        }
        for (std::uint8_t v : f.table) {
            if (v > 1) {
                violations.push_back("label " + std::to_string(j) +
                                     ": function table entry not 0/1");
                break;
            }
        }
        if (position[j] == 0 && !f.parents.empty()) {
            violations.push_back("label " + std::to_string(j) +
                                 ": position-1 variable must have empty parents");
        }
        if (!(model.noise[j] > 0.0 && model.noise[j] < 0.5)) {
            violations.push_back("label " + std::to_string(j) +
                                 ": noise probability not in (0,0.5)");
        }
    }
    return violations;
}

bool eval_function(const BexsamModel& model, VarLabel j,
                   const std::vector<std::uint8_t>& assignment) {
    if (j < 0 || j >= model.d) {
        throw std::out_of_range("unknown variable label " + std::to_string(j));
    }
    const ParentFunction& f = model.functions[j];
    size_t idx = 0;
    for (VarLabel h : f.parents) {
        idx = (idx << 1) | (assignment[h] & 1u);
    }
    return f.table[idx] != 0;
}

bool structural_equation(const BexsamModel& model, VarLabel j,
                         const std::vector<std::uint8_t>& assignment,
                         bool noise_bit) {
    return eval_function(model, j, assignment) != noise_bit;
}

int AdjacencyMatrix::ones() const {
    int n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
}

AdjacencyMatrix adjacency_of_model(const BexsamModel& model) {
    AdjacencyMatrix adj(model.d);
    for (VarLabel j = 0; j < model.d; ++j) {
        const ParentFunction& f = model.functions[j];
        const size_t np = f.parents.size();
        for (size_t a = 0; a < np; ++a) {
            const size_t flip = size_t{1} << (np - 1 - a);
            bool active = false;
            for (size_t idx = 0; idx < f.table.size() && !active; ++idx) {
                active = f.table[idx] != f.table[idx ^ flip];
            }
            if (active) adj.set(f.parents[a], j, 1);
        }
    }
    return adj;
}

}  // namespace bexsam
