#include "bexsam/evaluation.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "bexsam/rng.hpp"

namespace bexsam {

namespace {

FMeasure from_counts(long inter, long est_count, long true_count) {
    FMeasure fm;
    if (est_count == 0 && true_count == 0) {
        fm.precision = fm.recall = fm.f = 1.0;
        fm.defined_empty = true;
        return fm;
    }
    if (est_count == 0 || true_count == 0) {
        return fm;  // zeros
    }
    fm.precision = static_cast<double>(inter) / static_cast<double>(est_count);
    fm.recall = static_cast<double>(inter) / static_cast<double>(true_count);
    if (fm.precision + fm.recall > 0.0) {
        fm.f = 2.0 * fm.precision * fm.recall / (fm.precision + fm.recall);
    }
    return fm;
}

// True function value of target j expanded over a conditioning-set
// assignment. Returns -1 when the value depends on a parent outside the set.
int expand_true_entry(const BexsamModel& model, VarLabel j,
                      const std::vector<VarLabel>& conditioning, size_t sel) {
    const ParentFunction& f = model.functions[j];
    const int mc = static_cast<int>(conditioning.size());
    size_t idx = 0;
    for (size_t a = 0; a < f.parents.size(); ++a) {
        const VarLabel h = f.parents[a];
        int slot = -1;
        for (int s = 0; s < mc; ++s) {
            if (conditioning[s] == h) slot = s;
        }
        std::uint8_t bit = 0;
        if (slot >= 0) {
            bit = static_cast<std::uint8_t>((sel >> (mc - 1 - slot)) & 1u);
        } else {
            // Parent not fixed by the selection: well-defined only if the
            // table is constant in its coordinate.
            const size_t flip = size_t{1} << (f.parents.size() - 1 - a);
            for (size_t t = 0; t < f.table.size(); ++t) {
                if (f.table[t] != f.table[t ^ flip]) return -1;
            }
        }
        idx = (idx << 1) | bit;
    }
    return f.table[idx];
}

}  // namespace

AdjacencyMatrix adjacency_from_estimate(const DiscoveryResult& result, int d) {
    AdjacencyMatrix adj(d);
    for (const DiscoveryStep& step : result.steps) {
        const TruthTableEstimate& tt = step.tt;
        const int mc = static_cast<int>(tt.conditioning.size());
        for (int a = 0; a < mc; ++a) {
            const size_t flip = size_t{1} << (mc - 1 - a);
            bool active = false;
            for (size_t sel = 0; sel < tt.entries.size() && !active; ++sel) {
                if (sel & flip) continue;
                const TtEntry lo = tt.entries[sel];
                const TtEntry hi = tt.entries[sel | flip];
                active = lo != TtEntry::Void && hi != TtEntry::Void && lo != hi;
            }
            if (active) adj.set(tt.conditioning[a], step.target, 1);
        }
    }
    return adj;
}

FMeasure f_measure_adjacency(const AdjacencyMatrix& truth, const AdjacencyMatrix& estimate) {
    if (truth.d != estimate.d) throw std::invalid_argument("adjacency dimension mismatch");
    long inter = 0;
    for (size_t i = 0; i < truth.bits.size(); ++i) {
        inter += truth.bits[i] & estimate.bits[i];
    }
    return from_counts(inter, estimate.ones(), truth.ones());
}

FMeasure f_measure_truth_tables(const BexsamModel& truth, const DiscoveryResult& result) {
    if (static_cast<int>(result.steps.size()) != truth.d) {
        throw std::invalid_argument("discovery result does not cover the model's variables");
    }
    long inter = 0, est_count = 0, true_count = 0;
    for (const DiscoveryStep& step : result.steps) {
        const TruthTableEstimate& tt = step.tt;
        for (size_t sel = 0; sel < tt.entries.size(); ++sel) {
            if (tt.entries[sel] == TtEntry::Void) continue;
            const int t = expand_true_entry(truth, step.target, tt.conditioning, sel);
            const bool e1 = tt.entries[sel] == TtEntry::One;
            if (e1) ++est_count;
            if (t == 1) ++true_count;
            if (e1 && t == 1) ++inter;
        }
    }
    return from_counts(inter, est_count, true_count);
}

EvalReport evaluate(const BexsamModel& truth, const DiscoveryResult& result, double ct_ms) {
    EvalReport report;
    report.adjacency =
        f_measure_adjacency(adjacency_of_model(truth), adjacency_from_estimate(result, truth.d));
    report.truth_tables = f_measure_truth_tables(truth, result);
    report.ct_ms = ct_ms;
    return report;
}

std::vector<BenchCell> run_benchmark(const BenchGrid& grid) {
    if (grid.trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<BenchCell> cells;

    for (int d : grid.d_values) {
        for (int n : grid.n_values) {
            std::vector<double> fa(grid.trials), ftt(grid.trials), ct(grid.trials);

            auto run_trial = [&](int t) {
                const std::uint64_t seed =
                    derive_seed(grid.base_seed, static_cast<std::uint64_t>(d),
                                static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
                GenConfig cfg;
                cfg.d = d;
                cfg.n = n;
                cfg.p_a = grid.p_a;
                cfg.fixed_noise = grid.fixed_noise;
                std::mt19937_64 rng(seed);
                const BexsamModel model = random_model(cfg, rng);
                const Dataset data = sample_dataset(model, n, derive_seed(seed, 1));
                const FrequencyTable ft = build_frequency_table(data);

                const auto t0 = std::chrono::steady_clock::now();
                const DiscoveryResult result = discover(ft);
                const auto t1 = std::chrono::steady_clock::now();
                const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

                const EvalReport report = evaluate(model, result, ms);
                fa[t] = report.adjacency.f;
                ftt[t] = report.truth_tables.f;
                ct[t] = ms;
            };

            if (grid.jobs > 1) {
                std::atomic<int> next{0};
                std::vector<std::thread> workers;
                const int n_workers = std::min(grid.jobs, grid.trials);
                for (int w = 0; w < n_workers; ++w) {
                    workers.emplace_back([&] {
                        for (int t = next.fetch_add(1); t < grid.trials; t = next.fetch_add(1)) {
                            run_trial(t);
                        }
                    });
                }
                for (auto& w : workers) w.join();
            } else {
                for (int t = 0; t < grid.trials; ++t) run_trial(t);
            }

            BenchCell cell;
            cell.d = d;
            cell.n = n;
            cell.trials = grid.trials;
            for (int t = 0; t < grid.trials; ++t) {
                cell.mean_fa += fa[t];
                cell.mean_ftt += ftt[t];
                cell.mean_ct_ms += ct[t];
            }
            cell.mean_fa /= grid.trials;
            cell.mean_ftt /= grid.trials;
            cell.mean_ct_ms /= grid.trials;
            cells.push_back(cell);
        }
    }
    return cells;
}

ConfusionCounts y_structure_confusion(int trials, int n, YVariant variant, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    ConfusionCounts confusion;
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<double> p(4);
        for (double& q : p) q = uniform_open(rng, 0.0, 0.5);
        const BexsamModel model = y_structure_model(p, variant);
        const Dataset data = sample_dataset(model, n, derive_seed(seed, static_cast<std::uint64_t>(t), 1));
        const DiscoveryResult result = discover(data);

        const AdjacencyMatrix a_t = adjacency_of_model(model);
        const AdjacencyMatrix a_e = adjacency_from_estimate(result, model.d);
        for (int a = 0; a < model.d; ++a) {
            for (int b = 0; b < model.d; ++b) {
                if (a == b) continue;
                const int row = a_t.at(a, b) ? 0 : 1;
                const int col = a_e.at(a, b) ? 0 : 1;  // undirected never emitted
                ++confusion.counts[row][col];
            }
        }
    }
    return confusion;
}

}  // namespace bexsam
