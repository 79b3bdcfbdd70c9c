#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cho/linalg.hpp"

namespace cho {

using linalg::GenMatrix;
using linalg::SymMatrix;

/// Zero-based oscillator pair (i, j) with i < j.
using OscillatorPair = std::pair<std::size_t, std::size_t>;

/// H = 1/2 (p^t T p + x^t V x) for N oscillators.
///
/// The potential is sum_i 1/2 stiffness_diag[i] x_i^2 + sum_{i<j} 1/2 D_ij x_i x_j,
/// so V carries D_ij / 2 off the diagonal. T is diag(1/m_i) unless
/// kinetic_override is set.
struct OscillatorModel {
    std::vector<double> masses;
    std::vector<double> stiffness_diag;
    std::map<OscillatorPair, double> couplings;
    double hbar = 1.0;
    std::optional<SymMatrix> kinetic_override;

    std::size_t size() const noexcept { return masses.size(); }

    /// Coupling D_ij for either index order, zero if absent.
    double coupling(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        auto it = couplings.find({i, j});
        return it == couplings.end() ? 0.0 : it->second;
    }

    /// omega_i^2 = stiffness_diag[i] / m_i.
    double omega_sq(std::size_t i) const { return stiffness_diag[i] / masses[i]; }

    bool operator==(const OscillatorModel&) const = default;
};

/// Stiffness m_i * omega_i^2 from masses and angular frequencies.
inline OscillatorModel make_omega_model(std::vector<double> masses, std::span<const double> omegas,
                                        std::map<OscillatorPair, double> couplings = {}) {
    OscillatorModel m;
    m.stiffness_diag.resize(omegas.size());
    for (std::size_t i = 0; i < omegas.size() && i < masses.size(); ++i)
        m.stiffness_diag[i] = masses[i] * omegas[i] * omegas[i];
    m.masses = std::move(masses);
    m.couplings = std::move(couplings);
    return m;
}

/// Two oscillators with potential 1/2 (C1 x1^2 + C2 x2^2 + C3 x1 x2).
inline OscillatorModel make_two_oscillator_model(double m1, double m2, double c1, double c2, double c3) {
    OscillatorModel m;
    m.masses = {m1, m2};
    m.stiffness_diag = {c1, c2};
    if (c3 != 0.0) m.couplings[{0, 1}] = c3;
    return m;
}

/// N identical oscillators (mass m, frequency omega) with every pair coupled by d.
inline OscillatorModel make_identical_model(std::size_t n, double mass, double omega, double d) {
    OscillatorModel m;
    m.masses.assign(n, mass);
    m.stiffness_diag.assign(n, mass * omega * omega);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.couplings[{i, j}] = d;
    return m;
}

/// First k oscillators with only the couplings among them.
inline OscillatorModel leading_block(const OscillatorModel& model, std::size_t k) {
    OscillatorModel out;
    out.masses.assign(model.masses.begin(), model.masses.begin() + static_cast<std::ptrdiff_t>(k));
    out.stiffness_diag.assign(model.stiffness_diag.begin(),
                              model.stiffness_diag.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& [pair, d] : model.couplings)
        if (pair.first < k && pair.second < k) out.couplings[pair] = d;
    out.hbar = model.hbar;
    if (model.kinetic_override) out.kinetic_override = model.kinetic_override->leading(k);
    return out;
}

/// Every broken invariant, one human-readable message each. Empty iff valid.
/// Positive-definiteness of kinetic_override is checked later, when T^{1/2}
/// is formed.
inline std::vector<std::string> validate(const OscillatorModel& model) {
    std::vector<std::string> out;
    const std::size_t n = model.size();
    if (n == 0 || n > linalg::kMaxDim) out.push_back("masses must have between 1 and 16 entries, got " + std::to_string(n));

    for (std::size_t i = 0; i < n; ++i) {
        const double m = model.masses[i];
        if (!std::isfinite(m))
            out.push_back("masses[" + std::to_string(i) + "] must be finite");
        else if (!(m > 0.0))
            out.push_back("masses[" + std::to_string(i) + "] must be > 0");
    }

    if (model.stiffness_diag.size() != n)
        out.push_back("stiffness_diag must have " + std::to_string(n) + " entries, got " +
                      std::to_string(model.stiffness_diag.size()));
    for (std::size_t i = 0; i < model.stiffness_diag.size(); ++i)
        if (!std::isfinite(model.stiffness_diag[i]))
            out.push_back("stiffness_diag[" + std::to_string(i) + "] must be finite");

    for (const auto& [pair, d] : model.couplings) {
        const auto [i, j] = pair;
        const std::string name = "couplings(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (i == j)
            out.push_back(name + ": self-coupling forbidden");
        else if (i >= n || j >= n)
            out.push_back(name + ": oscillator index out of range 1.." + std::to_string(n));
        else if (i > j)
            out.push_back(name + ": pair must be ordered i < j");
        if (!std::isfinite(d)) out.push_back(name + ": coupling must be finite");
    }

    if (!std::isfinite(model.hbar) || !(model.hbar > 0.0)) out.push_back("hbar must be > 0");

    if (model.kinetic_override && model.kinetic_override->size() != n)
        out.push_back("kinetic matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    return out;
}

inline SymMatrix build_T(const OscillatorModel& model) {
    if (model.kinetic_override) return *model.kinetic_override;
    return SymMatrix::generate(model.size(), [&](std::size_t i, std::size_t j) {
        return i == j ? 1.0 / model.masses[i] : 0.0;
    });
}

inline SymMatrix build_V(const OscillatorModel& model) {
    return SymMatrix::generate(model.size(), [&](std::size_t i, std::size_t j) {
        return i == j ? model.stiffness_diag[i] : 0.5 * model.coupling(j, i);
    });
}

}  // namespace cho
