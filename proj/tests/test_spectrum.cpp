#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "cho/diagonalize.hpp"
#include "cho/spectrum.hpp"
#include "test_support.hpp"

using namespace cho;
namespace tk = cho::testkit;
using tk::Rng;

namespace {

ModeDecomposition with_lambdas(std::vector<double> lambdas) {
    ModeDecomposition d;
    d.lambdas = std::move(lambdas);
    return d;
}

}  // namespace

TEST(GroundState, IdenticalOscillators) {
    const ModeDecomposition d = decompose(make_identical_model(3, 1, 1, 1));
    // 1/2 (sqrt(1/2) + sqrt(1/2) + sqrt(2)) = sqrt(2)
    EXPECT_NEAR(ground_state_energy(d, 1.0), 1.4142135623730951, 1e-12);
    EXPECT_NEAR(ground_state_energy(d, 2.0), 2.0 * 1.4142135623730951, 1e-12);
}

TEST(GroundState, UncoupledUnitFrequencies) {
    EXPECT_EQ(ground_state_energy(decompose(make_identical_model(2, 1, 1, 0)), 1.0), 1.0);
}

TEST(GroundState, Errors) {
    EXPECT_THROW(ground_state_energy(with_lambdas({1.0, -0.5}), 1.0), UnboundSystem);
    EXPECT_THROW(ground_state_energy(with_lambdas({1.0, 0.0}), 1.0), UnboundSystem);
    EXPECT_THROW(ground_state_energy(with_lambdas({1.0}), 0.0), std::invalid_argument);
    try {
        lowest_levels(with_lambdas({1.0, -2.0}), 1.0, 3);
        FAIL();
    } catch (const UnboundSystem& e) {
        EXPECT_EQ(e.index(), 1u);
    }
    EXPECT_THROW(lowest_levels(with_lambdas({1.0}), 1.0, 0), std::invalid_argument);
    EXPECT_THROW(lowest_levels(with_lambdas({1.0}), 1.0, kMaxLevels + 1), std::invalid_argument);
}

TEST(LowestLevels, DegenerateLadder) {
    const auto levels = lowest_levels(with_lambdas({1.0, 1.0}), 1.0, 4);
    ASSERT_EQ(levels.size(), 4u);
    // Energy 3 is shared by (0,2), (1,1), (2,0); lexicographic order picks (0,2).
    const std::vector<std::vector<unsigned>> occ{{0, 0}, {0, 1}, {1, 0}, {0, 2}};
    const std::vector<double> e{1, 2, 2, 3};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(levels[i].occupations, occ[i]);
        EXPECT_EQ(levels[i].energy, e[i]);
    }
}

TEST(LowestLevels, IdenticalOscillators) {
    const ModeDecomposition d = decompose(make_identical_model(3, 1, 1, 1));
    const auto levels = lowest_levels(d, 1.0, 3);
    const double e0 = std::sqrt(2.0);
    EXPECT_NEAR(levels[0].energy, e0, 1e-12);
    EXPECT_NEAR(levels[1].energy, e0 + std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(levels[2].energy, e0 + std::sqrt(0.5), 1e-12);
    // The excitation is in one of the two lambda = 1/2 modes.
    EXPECT_EQ(levels[1].occupations[2] + levels[2].occupations[2], 0u);
}

TEST(LowestLevels, MatchesExhaustiveGridPrefix) {
    const std::vector<double> lambdas{0.3, 1.7, 2.9};
    const auto grid = tk::exhaustive_levels(lambdas, 1.0, {20, 20, 20});
    const auto levels = lowest_levels(with_lambdas(lambdas), 1.0, 40);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        EXPECT_EQ(levels[i].occupations, grid[i].occupations) << i;
        EXPECT_LE(tk::rel_err(levels[i].energy, grid[i].energy), 1e-12);
    }
}

TEST(Properties, SortedUniqueAndAdditive) {
    Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<double> lambdas(n);
        for (double& l : lambdas) l = tk::uniform(rng, 0.05, 5.0);
        const double hbar = tk::uniform(rng, 0.5, 2.0);
        const auto levels = lowest_levels(with_lambdas(lambdas), hbar, 300);
        ASSERT_EQ(levels.size(), 300u);
        std::set<std::vector<unsigned>> seen;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            EXPECT_TRUE(seen.insert(levels[i].occupations).second);
            if (i) {
                EXPECT_LE(levels[i - 1].energy, levels[i].energy);
            }
            double excitation = 0.0;
            for (std::size_t j = 0; j < n; ++j) excitation += levels[i].occupations[j] * std::sqrt(lambdas[j]);
            const double got = levels[i].energy - levels[0].energy;
            EXPECT_LE(std::abs(got - hbar * excitation), 1e-12 * (1.0 + levels[i].energy));
        }
    }
}

TEST(Properties, MatchesExhaustiveOracleOnRandomModels) {
    Rng rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        OscillatorModel m;
        do {
            m = tk::random_omega_model(1 + trial % 4, rng);
        } while (decompose(m).lambdas.front() <= 0.0);
        const ModeDecomposition d = decompose(m);
        const std::size_t k = 200;
        const auto levels = lowest_levels(d, 1.0, k);
        double sum = 0.0;
        for (double l : d.lambdas) sum += std::sqrt(l);
        const double excitation = levels.back().energy - 0.5 * sum;
        std::vector<unsigned> caps;
        for (double l : d.lambdas) caps.push_back(static_cast<unsigned>(std::ceil(excitation / std::sqrt(l))) + 1);
        const auto grid = tk::exhaustive_levels(d.lambdas, 1.0, caps);
        for (std::size_t i = 0; i < k; ++i) {
            EXPECT_LE(tk::rel_err(levels[i].energy, grid[i].energy), 1e-12);
            EXPECT_EQ(levels[i].occupations, grid[i].occupations);
        }
    }
}
