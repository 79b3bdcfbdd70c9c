#pragma once

// Energy levels E{n} = hbar * sum_i sqrt(lambda_i) (n_i + 1/2) of the
// decoupled Hamiltonian.

#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cho/diagonalize.hpp"
#include "cho/error.hpp"

namespace cho {

inline constexpr std::size_t kMaxLevels = 100000;

struct EnergyLevel {
    std::vector<unsigned> occupations;
    double energy;

    bool operator==(const EnergyLevel&) const = default;
};

namespace detail {

inline std::vector<double> mode_frequencies(std::span<const double> lambdas) {
    std::vector<double> out(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0)) throw UnboundSystem(i, lambdas[i]);
        out[i] = std::sqrt(lambdas[i]);
    }
    return out;
}

inline void check_hbar(double hbar) {
    if (!(std::isfinite(hbar) && hbar > 0.0)) throw std::invalid_argument("hbar must be > 0");
}

}  // namespace detail

/// hbar * sum_i sqrt(lambda_i) (n_i + 1/2), summed in index order.
inline double level_energy(std::span<const double> frequencies, std::span<const unsigned> occupations, double hbar) {
    double e = 0.0;
    for (std::size_t i = 0; i < frequencies.size(); ++i)
        e += frequencies[i] * (static_cast<double>(occupations[i]) + 0.5);
    return hbar * e;
}

inline double ground_state_energy(const ModeDecomposition& dec, double hbar) {
    detail::check_hbar(hbar);
    const std::vector<double> freq = detail::mode_frequencies(dec.lambdas);
    double sum = 0.0;
    for (double w : freq) sum += w;
    return 0.5 * hbar * sum;
}

/// The k lowest levels, ascending in energy and lexicographically by
/// occupation among exact ties.
///
/// Best-first search over the occupation lattice. A tuple is only expanded
/// by incrementing index i when every occupation after i is zero, so each
/// tuple has exactly one parent and is pushed once.
inline std::vector<EnergyLevel> lowest_levels(const ModeDecomposition& dec, double hbar, std::size_t k) {
    detail::check_hbar(hbar);
    if (k < 1 || k > kMaxLevels)
        throw std::invalid_argument("level count must be in [1, " + std::to_string(kMaxLevels) + "]");
    const std::vector<double> freq = detail::mode_frequencies(dec.lambdas);
    const std::size_t n = freq.size();

    auto later = [](const EnergyLevel& a, const EnergyLevel& b) {
        if (a.energy != b.energy) return a.energy > b.energy;
        return a.occupations > b.occupations;
    };
    std::priority_queue<EnergyLevel, std::vector<EnergyLevel>, decltype(later)> frontier(later);

    std::vector<unsigned> ground(n, 0);
    frontier.push({ground, level_energy(freq, ground, hbar)});

    std::vector<EnergyLevel> out;
    out.reserve(k);
    while (out.size() < k) {
        EnergyLevel top = frontier.top();
        frontier.pop();

        std::size_t last = n;  // one past the last non-zero occupation
        while (last > 0 && top.occupations[last - 1] == 0) --last;
        for (std::size_t i = (last == 0 ? 0 : last - 1); i < n; ++i) {
            std::vector<unsigned> next = top.occupations;
            ++next[i];
            const double e = level_energy(freq, next, hbar);
            frontier.push({std::move(next), e});
        }
        out.push_back(std::move(top));
    }
    return out;
}

}  // namespace cho
