#pragma once

#include <cstdint>
#include <vector>

#include "bexsam/model.hpp"

namespace bexsam {

// Binary data set. labels[c] is the variable label carried by column c; a
// sampled data set stores the random column permutation here so estimates can
// be mapped back to the generating model.
struct Dataset {
    std::vector<VarLabel> labels;
    std::vector<std::vector<std::uint8_t>> rows;

    int width() const { return static_cast<int>(labels.size()); }
    std::size_t size() const { return rows.size(); }
};

}  // namespace bexsam
