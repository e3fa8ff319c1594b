#include "bexsam/discovery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bexsam {

std::vector<VarLabel> DiscoveryResult::causal_order() const {
    std::vector<VarLabel> order;
    order.reserve(steps.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        order.push_back(it->target);
    }
    return order;
}

double sorted_mutual_information(const FrequencyTable& ft, VarLabel i) {
    if (ft.total <= 0.0) throw std::invalid_argument("empty frequency table");
    const int m = ft.width();
    const SelectionStats st = selection_stats(ft, i);
    const size_t n_sel = st.sel_weight.size();

    // Sorted conditionals: slot 0 holds the smaller of the pair. Accumulate
    // the sorted marginal over non-void selections, then renormalize it so
    // the restricted summation still yields a proper mutual information.
    double mass = 0.0;     // total weight of non-void selections
    double marg_min = 0.0; // unnormalized sorted marginal, min slot
    for (size_t sel = 0; sel < n_sel; ++sel) {
        if (!st.defined[sel]) continue;
        const double pv = st.sel_weight[sel] / ft.total;
        mass += pv;
        marg_min += std::min(st.p1[sel], 1.0 - st.p1[sel]) * pv;
    }
    const double marg[2] = {marg_min / mass, (mass - marg_min) / mass};

    double mi = 0.0;
    for (size_t sel = 0; sel < n_sel; ++sel) {
        if (!st.defined[sel]) continue;
        const double pv = st.sel_weight[sel] / ft.total;
        const double cond[2] = {std::min(st.p1[sel], 1.0 - st.p1[sel]),
                                std::max(st.p1[sel], 1.0 - st.p1[sel])};
        for (int v = 0; v < 2; ++v) {
            if (cond[v] > 0.0 && marg[v] > 0.0) {
                mi += cond[v] * pv * std::log(cond[v] / marg[v]);
            }
        }
    }
    const double prefactor =
        static_cast<double>(size_t{1} << (m - 1)) / static_cast<double>(st.n_defined);
    // Rounding can push an exact zero a hair below zero.
    return std::max(0.0, prefactor * mi);
}

std::pair<VarLabel, std::vector<std::pair<VarLabel, double>>> find_sink(const FrequencyTable& ft) {
    if (ft.width() < 1) throw std::invalid_argument("empty frequency table");
    std::vector<std::pair<VarLabel, double>> scores;
    scores.reserve(ft.labels.size());
    for (VarLabel j : ft.labels) {
        scores.emplace_back(j, sorted_mutual_information(ft, j));
    }
    VarLabel best = scores.front().first;
    double best_score = scores.front().second;
    for (const auto& [label, score] : scores) {
        if (score < best_score || (score == best_score && label < best)) {
            best = label;
            best_score = score;
        }
    }
    return {best, std::move(scores)};
}

TruthTableEstimate find_truth_table(const FrequencyTable& ft, VarLabel i) {
    const SelectionStats st = selection_stats(ft, i);
    TruthTableEstimate tt;
    tt.target = i;
    for (VarLabel j : ft.labels) {
        if (j != i) tt.conditioning.push_back(j);
    }
    tt.entries.resize(st.sel_weight.size());
    for (size_t sel = 0; sel < st.sel_weight.size(); ++sel) {
        if (!st.defined[sel]) {
            tt.entries[sel] = TtEntry::Void;
        } else {
            tt.entries[sel] = st.p1[sel] > 0.5 ? TtEntry::One : TtEntry::Zero;
        }
    }
    return tt;
}

DiscoveryResult discover(const FrequencyTable& ft) {
    DiscoveryResult result;
    FrequencyTable current = ft;
    while (current.width() > 0) {
        auto [sink, scores] = find_sink(current);
        DiscoveryStep step;
        step.target = sink;
        for (const auto& [label, score] : scores) {
            if (label == sink) step.mi_score = score;
        }
        step.tt = find_truth_table(current, sink);
        result.steps.push_back(std::move(step));
        current = marginalize(current, sink);
    }
    return result;
}

DiscoveryResult discover(const Dataset& data, int max_width) {
    return discover(build_frequency_table(data, max_width));
}

}  // namespace bexsam
