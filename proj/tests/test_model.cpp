#include <doctest.h>

#include <stdexcept>

#include <random>

#include "bexsam/generator.hpp"
#include "bexsam/model.hpp"
#include "bexsam/rng.hpp"
#include "helpers.hpp"

using namespace bexsam;
using testing::example1_model;

TEST_CASE("validate_model accepts the reference model") {
    CHECK(validate_model(example1_model()).empty());
}

TEST_CASE("validate_model flags a noise probability on the boundary") {
    BexsamModel m = example1_model();
    m.noise[2] = 0.5;
    const auto violations = validate_model(m);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("noise probability not in (0,0.5)") != std::string::npos);
    CHECK(violations[0].find("2") != std::string::npos);
}

TEST_CASE("validate_model flags an acyclicity violation") {
    BexsamModel m = example1_model();
    // Position-2 variable (label 1) lists the position-3 label as parent.
    m.functions[1] = {{2}, {0, 1}};
    bool found = false;
    for (const auto& v : validate_model(m)) {
        if (v.find("acyclicity") != std::string::npos) found = true;
    }
    CHECK(found);
}

TEST_CASE("validate_model flags a wrong table length") {
    BexsamModel m = example1_model();
    m.functions[3].table = {0, 1};
    CHECK(!validate_model(m).empty());
}

TEST_CASE("eval_function reads only parent bits") {
    const BexsamModel m = example1_model();
    // f3 = x1 & x2 at (1,1) -> 1, regardless of the other bits.
    CHECK(eval_function(m, 2, {1, 1, 0, 0}));
    CHECK(eval_function(m, 2, {1, 1, 1, 1}));
    CHECK(!eval_function(m, 2, {1, 0, 0, 0}));
    // f4 = x1 | x3 at (0,0) -> 0.
    CHECK(!eval_function(m, 3, {0, 1, 0, 0}));
    // Empty parents: constant.
    CHECK(!eval_function(m, 0, {1, 1, 1, 1}));
    CHECK_THROWS_AS((void)eval_function(m, 7, {0, 0, 0, 0}), std::out_of_range);
}

TEST_CASE("structural_equation XORs the noise bit") {
    const BexsamModel m = example1_model();
    const std::vector<std::uint8_t> a = {1, 1, 0, 0};  // f3 = 1 here
    CHECK(structural_equation(m, 2, a, false));
    CHECK(!structural_equation(m, 2, a, true));
    const std::vector<std::uint8_t> b = {0, 0, 0, 0};  // f3 = 0 here
    CHECK(!structural_equation(m, 2, b, false));
    CHECK(structural_equation(m, 2, b, true));
}

TEST_CASE("XOR involution holds on random inputs") {
    const BexsamModel m = example1_model();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint8_t> a(4);
        for (auto& bit : a) bit = static_cast<std::uint8_t>(rng() & 1u);
        const bool e = (rng() & 1u) != 0;
        for (VarLabel j = 0; j < 4; ++j) {
            CHECK((structural_equation(m, j, a, e) != e) == eval_function(m, j, a));
        }
    }
}

TEST_CASE("adjacency_of_model reproduces the reference edge set") {
    const AdjacencyMatrix adj = adjacency_of_model(example1_model());
    CHECK(adj.ones() == 5);
    CHECK(adj.at(0, 1));
    CHECK(adj.at(0, 2));
    CHECK(adj.at(1, 2));
    CHECK(adj.at(0, 3));
    CHECK(adj.at(2, 3));
}

TEST_CASE("a vacuous listed parent is pruned") {
    BexsamModel m = example1_model();
    m.functions[1] = {{0}, {1, 1}};  // constant in x1
    const AdjacencyMatrix adj = adjacency_of_model(m);
    CHECK(!adj.at(0, 1));
}

TEST_CASE("single-variable model has an all-zero adjacency") {
    BexsamModel m;
    m.d = 1;
    m.order = {0};
    m.noise = {0.3};
    m.functions = {{{}, {1}}};
    CHECK(adjacency_of_model(m).ones() == 0);
}

TEST_CASE("adjacency agrees with brute-force dependence and order is topological") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 40; ++t) {
        GenConfig cfg;
        cfg.d = 2 + static_cast<int>(uniform_below(rng, 5));
        cfg.p_a = 0.6;
        const BexsamModel m = random_model(cfg, rng);
        REQUIRE(validate_model(m).empty());
        const AdjacencyMatrix adj = adjacency_of_model(m);

        for (VarLabel h = 0; h < m.d; ++h) {
            for (VarLabel j = 0; j < m.d; ++j) {
                bool depends = false;
                std::vector<std::uint8_t> a(m.d, 0);
                for (size_t v = 0; v < (size_t{1} << m.d) && !depends; ++v) {
                    for (int b = 0; b < m.d; ++b) a[b] = (v >> b) & 1u;
                    const bool f0 = eval_function(m, j, a);
                    a[h] ^= 1u;
                    depends = f0 != eval_function(m, j, a);
                }
                CHECK(static_cast<bool>(adj.at(h, j)) == depends);
            }
        }

        // Edges always point from earlier to later causal positions.
        for (VarLabel h = 0; h < m.d; ++h) {
            for (VarLabel j = 0; j < m.d; ++j) {
                if (adj.at(h, j)) CHECK(m.position_of(h) < m.position_of(j));
            }
        }
    }
}
