#include "bexsam/generator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bexsam/rng.hpp"

namespace bexsam {

BexsamModel random_model(const GenConfig& config, std::mt19937_64& rng) {
    if (config.d < 1) throw std::invalid_argument("d must be >= 1");
    if (config.p_a < 0.0 || config.p_a > 1.0) throw std::invalid_argument("p_a must be in [0,1]");
    if (config.fixed_noise &&
        !(*config.fixed_noise > 0.0 && *config.fixed_noise < 0.5)) {
        throw std::invalid_argument("fixed noise must be in (0,0.5)");
    }

    BexsamModel model;
    model.d = config.d;
    model.order.resize(config.d);
    std::iota(model.order.begin(), model.order.end(), 0);
    model.functions.resize(config.d);
    model.noise.resize(config.d);

    for (int k = 0; k < config.d; ++k) {
        ParentFunction& f = model.functions[k];
        for (int h = 0; h < k; ++h) {
            if (bernoulli(rng, config.p_a)) f.parents.push_back(h);
        }
        f.table.resize(size_t{1} << f.parents.size());
        for (auto& bit : f.table) bit = static_cast<std::uint8_t>(rng() & 1u);
        model.noise[k] = config.fixed_noise ? *config.fixed_noise
                                            : uniform_open(rng, 0.0, 0.5);
    }
    return model;
}

Dataset sample_dataset(const BexsamModel& model, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::mt19937_64 rng(derive_seed(seed));
    const int d = model.d;

    // Column permutation: column c shows the variable perm[c].
    std::vector<VarLabel> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    for (int c = d - 1; c > 0; --c) {
        const int r = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(c) + 1));
        std::swap(perm[c], perm[r]);
    }

    Dataset data;
    data.labels = perm;
    data.rows.reserve(n);
    std::vector<std::uint8_t> assignment(d, 0);
    for (int h = 0; h < n; ++h) {
        for (int k = 0; k < d; ++k) {
            const VarLabel j = model.order[k];
            const bool e = bernoulli(rng, model.noise[j]);
            assignment[j] = structural_equation(model, j, assignment, e) ? 1 : 0;
        }
        std::vector<std::uint8_t> row(d);
        for (int c = 0; c < d; ++c) row[c] = assignment[perm[c]];
        data.rows.push_back(std::move(row));
    }
    return data;
}

std::vector<double> exact_distribution(const BexsamModel& model) {
    const int d = model.d;
    if (d > 20) throw std::length_error("exact distribution limited to d <= 20");

    // P(V) factorizes along the causal order: each variable contributes the
    // probability of the noise bit forced by its value and its parents.
    std::vector<double> dist(size_t{1} << d, 0.0);
    std::vector<std::uint8_t> assignment(d, 0);
    for (size_t v = 0; v < dist.size(); ++v) {
        for (int j = 0; j < d; ++j) {
            assignment[j] = static_cast<std::uint8_t>((v >> (d - 1 - j)) & 1u);
        }
        double prob = 1.0;
        for (int k = 0; k < d; ++k) {
            const VarLabel j = model.order[k];
            const bool f = eval_function(model, j, assignment);
            const bool e = (assignment[j] != 0) != f;
            prob *= e ? model.noise[j] : 1.0 - model.noise[j];
        }
        dist[v] = prob;
    }
    return dist;
}

FrequencyTable exact_table(const BexsamModel& model) {
    FrequencyTable ft;
    ft.labels.resize(model.d);
    std::iota(ft.labels.begin(), ft.labels.end(), 0);
    ft.weights = exact_distribution(model);
    ft.total = 1.0;
    ft.count_mode = false;
    return ft;
}

BexsamModel y_structure_model(const std::vector<double>& p, YVariant variant) {
    if (p.size() != 4) throw std::invalid_argument("Y-structure needs four noise probabilities");
    for (double q : p) {
        if (!(q > 0.0 && q < 0.5)) {
            throw std::invalid_argument("noise probabilities must be in (0,0.5)");
        }
    }
    BexsamModel model;
    model.d = 4;
    model.order = {0, 1, 2, 3};
    model.noise = p;
    model.functions.resize(4);
    model.functions[0] = {{}, {0}};
    model.functions[1] = {{}, {0}};
    if (variant == YVariant::And) {
        model.functions[2] = {{0, 1}, {0, 0, 0, 1}};
    } else {
        model.functions[2] = {{0, 1}, {0, 1, 1, 1}};
    }
    model.functions[3] = {{2}, {0, 1}};
    return model;
}

}  // namespace bexsam
