#pragma once

#include <string>
#include <vector>

#include "bexsam/dataset.hpp"

namespace bexsam {

// Pre-flight applicability check: a marginal frequency away from 0.5
// certifies that the variable's noise is skew and its function marginal is
// not 0.5. The converse does not hold, so a small deviation is reported as
// inconclusive, never as a refutation.
struct SkewEntry {
    VarLabel label = -1;
    double p_one = 0.0;
    double deviation = 0.0;  // |p_one - 0.5|
    bool skew_confirmed = false;
    bool inconclusive = false;
};

struct SkewReport {
    std::vector<SkewEntry> entries;
    double threshold = 0.0;
};

// Default threshold: two standard errors of a fair coin at sample size n.
double default_skew_threshold(std::size_t n);

SkewReport skewness_report(const Dataset& data, double threshold);

// Aligned text rendering for terminals.
std::string format_skew_report(const SkewReport& report);

}  // namespace bexsam
