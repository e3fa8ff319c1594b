#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "bexsam/generator.hpp"
#include "bexsam/io.hpp"
#include "bexsam/rng.hpp"
#include "helpers.hpp"

using namespace bexsam;
using testing::example1_model;

TEST_CASE("random_model with d=1 is a single exogenous variable") {
    GenConfig cfg;
    cfg.d = 1;
    std::mt19937_64 rng(1);
    const BexsamModel m = random_model(cfg, rng);
    CHECK(m.functions[0].parents.empty());
    CHECK(m.functions[0].table.size() == 1);
    CHECK(validate_model(m).empty());
}

TEST_CASE("p_a = 1 forces every earlier variable to be a parent") {
    GenConfig cfg;
    cfg.d = 4;
    cfg.p_a = 1.0;
    std::mt19937_64 rng(2);
    const BexsamModel m = random_model(cfg, rng);
    for (int k = 0; k < 4; ++k) {
        CHECK(static_cast<int>(m.functions[k].parents.size()) == k);
        CHECK(m.functions[k].table.size() == (size_t{1} << k));
    }
}

TEST_CASE("random_model is deterministic under a fixed seed") {
    GenConfig cfg;
    cfg.d = 4;
    std::mt19937_64 rng_a(77), rng_b(77);
    const BexsamModel a = random_model(cfg, rng_a);
    const BexsamModel b = random_model(cfg, rng_b);
    CHECK(model_to_json(a) == model_to_json(b));
}

TEST_CASE("random models always validate") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        GenConfig cfg;
        cfg.d = 1 + static_cast<int>(uniform_below(rng, 8));
        cfg.p_a = uniform01(rng);
        if (t % 2 == 0) cfg.fixed_noise = 0.2;
        CHECK(validate_model(random_model(cfg, rng)).empty());
    }
}

TEST_CASE("sample_dataset single-variable frequency tracks the noise") {
    BexsamModel m;
    m.d = 1;
    m.order = {0};
    m.noise = {0.2};
    m.functions = {{{}, {0}}};  // f1 = 0, so P(x=1) = 0.2
    const int n = 50000;
    const Dataset data = sample_dataset(m, n, 5);
    double ones = 0;
    for (const auto& row : data.rows) ones += row[0];
    const double sigma = std::sqrt(0.2 * 0.8 / n);
    CHECK(std::abs(ones / n - 0.2) < 3 * sigma);
}

TEST_CASE("sample_dataset n=1 and determinism") {
    const BexsamModel m = example1_model();
    CHECK(sample_dataset(m, 1, 9).rows.size() == 1);
    CHECK(dataset_to_csv(sample_dataset(m, 200, 9)) == dataset_to_csv(sample_dataset(m, 200, 9)));
    CHECK_THROWS_AS((void)sample_dataset(m, 0, 9), std::invalid_argument);
}

TEST_CASE("exact_distribution basics") {
    BexsamModel m;
    m.d = 1;
    m.order = {0};
    m.noise = {0.3};
    m.functions = {{{}, {0}}};
    const auto dist = exact_distribution(m);
    CHECK(dist[0] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(dist[1] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("exact_distribution sums to one and matches the sink conditionals") {
    const double p4 = 0.25;
    const BexsamModel m = example1_model(0.2, 0.3, 0.1, p4);
    const auto dist = exact_distribution(m);
    double sum = 0.0;
    for (double p : dist) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    // P(x4=1 | x1=0,x2=0,x3=0) = p4. Label 0 is the MSB, label 3 the LSB.
    const double p_0001 = dist[0b0001];
    const double p_0000 = dist[0b0000];
    CHECK(p_0001 / (p_0000 + p_0001) == doctest::Approx(p4).epsilon(1e-12));
}

TEST_CASE("exogenous marginals equal p or 1-p") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        GenConfig cfg;
        cfg.d = 1 + static_cast<int>(uniform_below(rng, 5));
        const BexsamModel m = random_model(cfg, rng);
        const auto dist = exact_distribution(m);
        for (VarLabel j = 0; j < m.d; ++j) {
            if (!m.functions[j].parents.empty()) continue;
            double p1 = 0.0;
            for (size_t v = 0; v < dist.size(); ++v) {
                if ((v >> (m.d - 1 - j)) & 1u) p1 += dist[v];
            }
            const double p = m.noise[j];
            const bool matches = std::abs(p1 - p) < 1e-12 || std::abs(p1 - (1 - p)) < 1e-12;
            CHECK(matches);
        }
    }
}

TEST_CASE("empirical distribution converges in total variation") {
    std::mt19937_64 rng(99);
    GenConfig cfg;
    cfg.d = 5;
    cfg.p_a = 0.5;
    const BexsamModel m = random_model(cfg, rng);
    const auto dist = exact_distribution(m);
    const int n = 1000000;
    const Dataset data = sample_dataset(m, n, 1234);

    std::vector<double> freq(dist.size(), 0.0);
    for (const auto& row : data.rows) {
        size_t v = 0;
        for (int c = 0; c < m.d; ++c) {
            if (row[c]) v |= size_t{1} << (m.d - 1 - data.labels[c]);
        }
        freq[v] += 1.0;
    }
    double tv = 0.0;
    for (size_t v = 0; v < dist.size(); ++v) {
        tv += std::abs(freq[v] / n - dist[v]);
    }
    CHECK(tv / 2 <= 0.01);
}

TEST_CASE("y_structure_model presets") {
    const std::vector<double> p = {0.1, 0.2, 0.3, 0.4};
    const BexsamModel y_and = y_structure_model(p, YVariant::And);
    const BexsamModel y_or = y_structure_model(p, YVariant::Or);
    REQUIRE(validate_model(y_and).empty());

    const AdjacencyMatrix a = adjacency_of_model(y_and);
    CHECK(a.ones() == 3);
    CHECK(a.at(0, 2));
    CHECK(a.at(1, 2));
    CHECK(a.at(2, 3));
    CHECK(adjacency_of_model(y_or).bits == a.bits);

    CHECK(y_and.functions[2].table == std::vector<std::uint8_t>{0, 0, 0, 1});
    CHECK(y_or.functions[2].table == std::vector<std::uint8_t>{0, 1, 1, 1});
    CHECK_THROWS_AS((void)y_structure_model({0.1, 0.2, 0.5, 0.3}, YVariant::And),
                    std::invalid_argument);
}
