#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "bexsam/diagnostics.hpp"
#include "bexsam/generator.hpp"
#include "bexsam/rng.hpp"
#include "helpers.hpp"

using namespace bexsam;
using testing::example1_model;

namespace {

// P(f_j = 1) under the exact joint, marginalizing over the parents.
double function_marginal(const BexsamModel& m, VarLabel j, const std::vector<double>& dist) {
    double p = 0.0;
    std::vector<std::uint8_t> a(m.d, 0);
    for (size_t v = 0; v < dist.size(); ++v) {
        for (int b = 0; b < m.d; ++b) a[b] = (v >> (m.d - 1 - b)) & 1u;
        if (eval_function(m, j, a)) p += dist[v];
    }
    return p;
}

}  // namespace

TEST_CASE("an all-ones column is skew-confirmed") {
    Dataset data;
    data.labels = {0};
    data.rows = {{1}, {1}, {1}, {1}};
    const SkewReport report = skewness_report(data, 0.1);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].p_one == 1.0);
    CHECK(report.entries[0].deviation == 0.5);
    CHECK(report.entries[0].skew_confirmed);
}

TEST_CASE("a fair coin stays inconclusive at large n") {
    std::mt19937_64 rng(8);
    Dataset data;
    data.labels = {0};
    for (int i = 0; i < 20000; ++i) {
        data.rows.push_back({static_cast<std::uint8_t>(rng() & 1u)});
    }
    const SkewReport report =
        skewness_report(data, default_skew_threshold(data.rows.size()));
    // Two standard errors: inconclusive with high probability; the seed is fixed.
    CHECK(report.entries[0].inconclusive);
    CHECK(!report.entries[0].skew_confirmed);
}

TEST_CASE("skewness_report rejects bad inputs") {
    Dataset empty;
    empty.labels = {0};
    CHECK_THROWS_AS((void)skewness_report(empty, 0.1), std::invalid_argument);
    Dataset ok;
    ok.labels = {0};
    ok.rows = {{1}};
    CHECK_THROWS_AS((void)skewness_report(ok, -1.0), std::invalid_argument);
}

TEST_CASE("exact marginal deviation factors as epsilon * xi") {
    const BexsamModel m = example1_model();
    const auto dist = exact_distribution(m);
    for (VarLabel j = 0; j < m.d; ++j) {
        double p1 = 0.0;
        for (size_t v = 0; v < dist.size(); ++v) {
            if ((v >> (m.d - 1 - j)) & 1u) p1 += dist[v];
        }
        // With p(e=1) = (1+eps)/2 and p(f=1) = (1+xi)/2: P(x=0)-P(x=1) = eps*xi.
        const double eps = 2.0 * m.noise[j] - 1.0;
        const double xi = 2.0 * function_marginal(m, j, dist) - 1.0;
        CHECK((1.0 - p1) - p1 == doctest::Approx(eps * xi).epsilon(1e-10));
    }
}

TEST_CASE("a deviating marginal certifies skew noise and a skew function") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 40; ++t) {
        GenConfig cfg;
        cfg.d = 1 + static_cast<int>(uniform_below(rng, 6));
        cfg.p_a = 0.5;
        const BexsamModel m = random_model(cfg, rng);
        const auto dist = exact_distribution(m);
        for (VarLabel j = 0; j < m.d; ++j) {
            double p1 = 0.0;
            for (size_t v = 0; v < dist.size(); ++v) {
                if ((v >> (m.d - 1 - j)) & 1u) p1 += dist[v];
            }
            if (std::abs(p1 - 0.5) > 1e-12) {
                CHECK(m.noise[j] != 0.5);
                CHECK(std::abs(function_marginal(m, j, dist) - 0.5) > 1e-13);
            }
        }
    }
}

TEST_CASE("text rendering mentions the one-directional logic") {
    Dataset data;
    data.labels = {0, 1};
    data.rows = {{1, 0}, {1, 1}};
    const std::string text = format_skew_report(skewness_report(data, 0.05));
    CHECK(text.find("does not disprove") != std::string::npos);
    CHECK(text.find("v0") != std::string::npos);
}
