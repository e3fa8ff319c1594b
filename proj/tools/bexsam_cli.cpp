// Command-line front end: generation, discovery, evaluation, benchmarking
// and data diagnostics for binary causal models.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 resource cap.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bexsam/diagnostics.hpp"
#include "bexsam/discovery.hpp"
#include "bexsam/evaluation.hpp"
#include "bexsam/generator.hpp"
#include "bexsam/io.hpp"
#include "bexsam/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitResource = 3;

void print_order(const bexsam::DiscoveryResult& result, std::ostream& os) {
    os << "causal order (top first):";
    for (bexsam::VarLabel v : result.causal_order()) os << " v" << v;
    os << '\n';
    for (auto it = result.steps.rbegin(); it != result.steps.rend(); ++it) {
        os << "  v" << it->target << "  MI_s=" << it->mi_score << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Causal ordering and Boolean model estimation for binary data"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "base seed; all randomness derives from it")
        ->capture_default_str();

    // generate
    auto* generate = app.add_subcommand("generate", "generate a random model and data set");
    int gen_d = 4, gen_n = 1000;
    double gen_pa = 0.5;
    std::optional<double> gen_pe;
    std::string gen_model_out = "model.json", gen_data_out = "data.csv";
    bool gen_ystruct_and = false, gen_ystruct_or = false;
    generate->add_option("--d", gen_d, "variable count")->capture_default_str();
    generate->add_option("--n", gen_n, "sample size")->capture_default_str();
    generate->add_option("--pa", gen_pa, "parent-inclusion probability")->capture_default_str();
    generate->add_option("--pe", gen_pe, "fixed noise probability in (0,0.5); default: per-variable uniform");
    generate->add_flag("--ystruct-and", gen_ystruct_and, "use the Y-structure preset (AND collider)");
    generate->add_flag("--ystruct-or", gen_ystruct_or, "use the Y-structure preset (OR collider)");
    generate->add_option("--model-out", gen_model_out, "model output path")->capture_default_str();
    generate->add_option("--out", gen_data_out, "data set output path")->capture_default_str();

    // discover
    auto* discover_cmd = app.add_subcommand("discover", "estimate causal order and truth tables");
    std::string disc_in = "data.csv", disc_out = "result.json";
    int max_width = bexsam::kDefaultMaxWidth;
    discover_cmd->add_option("--in", disc_in, "input data set CSV")->capture_default_str();
    discover_cmd->add_option("--out", disc_out, "result output path")->capture_default_str();
    discover_cmd->add_option("--max-width", max_width, "refuse tables wider than this many variables")
        ->capture_default_str();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "score a result against a ground-truth model");
    std::string eval_model = "model.json", eval_result = "result.json", eval_out;
    eval_cmd->add_option("--model", eval_model, "ground-truth model JSON")->capture_default_str();
    eval_cmd->add_option("--result", eval_result, "discovery result JSON")->capture_default_str();
    eval_cmd->add_option("--out", eval_out, "also write the report to this path");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark grid over (d, n)");
    std::vector<int> bench_d{4}, bench_n{1000};
    double bench_pa = 0.5;
    std::optional<double> bench_pe;
    int bench_trials = 100, bench_jobs = 1;
    std::string bench_out;
    bench->add_option("--d", bench_d, "d values")->delimiter(',')->capture_default_str();
    bench->add_option("--n", bench_n, "n values")->delimiter(',')->capture_default_str();
    bench->add_option("--pa", bench_pa, "parent-inclusion probability")->capture_default_str();
    bench->add_option("--pe", bench_pe, "fixed noise probability; default: per-variable uniform");
    bench->add_option("--trials", bench_trials, "trials per cell")->capture_default_str();
    bench->add_option("--jobs", bench_jobs, "parallel trial workers")->capture_default_str();
    bench->add_option("--out", bench_out, "also write the CSV to this path");

    // ystruct
    auto* ystruct = app.add_subcommand("ystruct", "Y-structure confusion experiment");
    int ys_trials = 20, ys_n = 10000;
    bool ys_or = false;
    std::string ys_out;
    ystruct->add_option("--trials", ys_trials, "number of trials")->capture_default_str();
    ystruct->add_option("--n", ys_n, "sample size per trial")->capture_default_str();
    ystruct->add_flag("--or", ys_or, "OR collider instead of AND");
    ystruct->add_option("--out", ys_out, "also write the CSV to this path");

    // check
    auto* check = app.add_subcommand("check", "skewness diagnostics on a data set");
    std::string check_in = "data.csv";
    std::optional<double> check_threshold;
    check->add_option("--in", check_in, "input data set CSV")->capture_default_str();
    check->add_option("--threshold", check_threshold,
                      "deviation threshold; default: 2 standard errors of a fair coin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) {
            bexsam::BexsamModel model;
            std::mt19937_64 rng(bexsam::derive_seed(seed));
            if (gen_ystruct_and || gen_ystruct_or) {
                std::vector<double> p(4);
                for (double& q : p) q = bexsam::uniform_open(rng, 0.0, 0.5);
                model = bexsam::y_structure_model(
                    p, gen_ystruct_or ? bexsam::YVariant::Or : bexsam::YVariant::And);
            } else {
                bexsam::GenConfig cfg;
                cfg.d = gen_d;
                cfg.n = gen_n;
                cfg.p_a = gen_pa;
                cfg.fixed_noise = gen_pe;
                cfg.seed = seed;
                model = bexsam::random_model(cfg, rng);
            }
            bexsam::write_file(gen_model_out, bexsam::model_to_json(model));
            const bexsam::Dataset data =
                bexsam::sample_dataset(model, gen_n, bexsam::derive_seed(seed, 1));
            bexsam::write_file(gen_data_out, bexsam::dataset_to_csv(data));
            std::cout << "wrote " << gen_model_out << " and " << gen_data_out << '\n';
        } else if (discover_cmd->parsed()) {
            const bexsam::Dataset data = bexsam::dataset_from_csv(bexsam::read_file(disc_in));
            const bexsam::FrequencyTable ft = bexsam::build_frequency_table(data, max_width);
            const auto t0 = std::chrono::steady_clock::now();
            const bexsam::DiscoveryResult result = bexsam::discover(ft);
            const auto t1 = std::chrono::steady_clock::now();
            bexsam::write_file(disc_out, bexsam::result_to_json(result));
            print_order(result, std::cout);
            std::cout << "discover time "
                      << std::chrono::duration<double, std::milli>(t1 - t0).count() << " ms\n";
        } else if (eval_cmd->parsed()) {
            const bexsam::BexsamModel model =
                bexsam::model_from_json(bexsam::read_file(eval_model));
            const auto violations = bexsam::validate_model(model);
            if (!violations.empty()) {
                throw bexsam::DataError("invalid model in " + eval_model + ": " + violations.front());
            }
            const bexsam::DiscoveryResult result =
                bexsam::result_from_json(bexsam::read_file(eval_result));
            const bexsam::EvalReport report = bexsam::evaluate(model, result);
            std::ostringstream os;
            os << "P(A)=" << report.adjacency.precision
               << " R(A)=" << report.adjacency.recall
               << " F(A)=" << report.adjacency.f << '\n'
               << "P(TT)=" << report.truth_tables.precision
               << " R(TT)=" << report.truth_tables.recall
               << " F(TT)=" << report.truth_tables.f << '\n';
            std::cout << os.str();
            if (!eval_out.empty()) bexsam::write_file(eval_out, os.str());
        } else if (bench->parsed()) {
            bexsam::BenchGrid grid;
            grid.d_values = bench_d;
            grid.n_values = bench_n;
            grid.p_a = bench_pa;
            grid.fixed_noise = bench_pe;
            grid.trials = bench_trials;
            grid.base_seed = seed;
            grid.jobs = bench_jobs;
            const auto cells = bexsam::run_benchmark(grid);
            const std::string csv = bexsam::bench_to_csv(cells);
            std::cout << csv;
            if (!bench_out.empty()) bexsam::write_file(bench_out, csv);
        } else if (ystruct->parsed()) {
            const auto confusion = bexsam::y_structure_confusion(
                ys_trials, ys_n, ys_or ? bexsam::YVariant::Or : bexsam::YVariant::And, seed);
            const std::string csv = bexsam::confusion_to_csv(confusion);
            std::cout << csv;
            if (!ys_out.empty()) bexsam::write_file(ys_out, csv);
        } else if (check->parsed()) {
            const bexsam::Dataset data = bexsam::dataset_from_csv(bexsam::read_file(check_in));
            const double threshold = check_threshold
                                         ? *check_threshold
                                         : bexsam::default_skew_threshold(data.rows.size());
            std::cout << bexsam::format_skew_report(bexsam::skewness_report(data, threshold));
        }
    } catch (const bexsam::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
