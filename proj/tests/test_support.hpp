#pragma once

// Independent oracles and random generators for the test suites. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "cho/linalg.hpp"
#include "cho/model.hpp"

namespace cho::testkit {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Magnitude in [lo, hi] with a random sign.
inline double signed_uniform(Rng& rng, double lo, double hi) {
    const double m = uniform(rng, lo, hi);
    return std::bernoulli_distribution(0.5)(rng) ? m : -m;
}

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(got), std::abs(want));
    return scale == 0.0 ? 0.0 : std::abs(got - want) / scale;
}

/// Laplace expansion along the first row; O(n!).
inline double cofactor_det(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    double det = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<double>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<double> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        det += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * cofactor_det(minor);
    }
    return det;
}

inline double cofactor_leading_minor(const linalg::SymMatrix& s, std::size_t k) {
    std::vector<std::vector<double>> m(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = s(i, j);
    return cofactor_det(m);
}

/// Monic polynomial with the given roots, highest power first.
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = next;
    }
    return c;
}

/// All roots of a polynomial (highest power first) by Aberth-Ehrlich
/// iteration; returns the real parts sorted ascending.
inline std::vector<double> poly_real_roots(const std::vector<double>& coeffs) {
    using cd = std::complex<double>;
    const std::size_t n = coeffs.size() - 1;
    auto eval = [&](cd z, cd& dp) {
        cd p = coeffs[0];
        dp = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            dp = dp * z + p;
            p = p * z + coeffs[i];
        }
        return p;
    };
    double bound = 0.0;
    for (std::size_t i = 1; i <= n; ++i) bound = std::max(bound, std::abs(coeffs[i] / coeffs[0]));
    bound += 1.0;
    std::vector<cd> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(bound * 0.5, 2.0 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(n));
    for (int iter = 0; iter < 2000; ++iter) {
        double change = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            cd dp;
            const cd p = eval(z[k], dp);
            if (p == 0.0) continue;
            const cd ratio = p / dp;
            cd sum = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            const cd w = ratio / (1.0 - ratio * sum);
            z[k] -= w;
            change = std::max(change, std::abs(w) / (1.0 + std::abs(z[k])));
        }
        if (change < 1e-17) break;
    }
    std::vector<double> out;
    for (const auto& r : z) out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

/// Random orthogonal matrix from Gram-Schmidt on a Gaussian matrix.
inline linalg::GenMatrix random_rotation(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<std::vector<double>> cols(n, std::vector<double>(n));
    for (auto& c : cols)
        for (auto& x : c) x = g(rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += cols[j][i] * cols[k][i];
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot * cols[k][i];
        }
        double norm = 0.0;
        for (double x : cols[j]) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : cols[j]) x /= norm;
    }
    linalg::GenMatrix q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = cols[j][i];
    return q;
}

/// Q diag(values) Q^t.
inline linalg::SymMatrix with_spectrum(const linalg::GenMatrix& q, const std::vector<double>& values) {
    const std::size_t n = values.size();
    return linalg::SymMatrix::generate(n, [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += q(i, k) * values[k] * q(j, k);
        return s;
    });
}

inline linalg::SymMatrix random_symmetric(std::size_t n, Rng& rng, double lo = -1.0, double hi = 1.0) {
    return linalg::SymMatrix::generate(n, [&](std::size_t, std::size_t) { return uniform(rng, lo, hi); });
}

/// Symmetric matrices with a mix of definite and indefinite spectra: half
/// have i.i.d. entries, half are B B^t shifted by a random multiple of I.
inline linalg::SymMatrix random_mixed_symmetric(std::size_t n, Rng& rng) {
    if (std::bernoulli_distribution(0.5)(rng)) return random_symmetric(n, rng);
    linalg::GenMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = uniform(rng, -1.0, 1.0);
    const double shift = uniform(rng, -0.6, 0.6);
    return linalg::SymMatrix::generate(n, [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += b(i, k) * b(j, k);
        return s / static_cast<double>(n) + (i == j ? shift : 0.0);
    });
}

/// Masses in [0.1, 10], stiffnesses and every pairwise coupling with
/// magnitude in [0.1, 10] and random sign.
inline OscillatorModel random_model(std::size_t n, Rng& rng) {
    OscillatorModel m;
    for (std::size_t i = 0; i < n; ++i) {
        m.masses.push_back(uniform(rng, 0.1, 10.0));
        m.stiffness_diag.push_back(signed_uniform(rng, 0.1, 10.0));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.couplings[{i, j}] = signed_uniform(rng, 0.1, 10.0);
    return m;
}

/// Real frequencies (omega in [0.3, 3]), masses in [0.1, 10], couplings of
/// magnitude up to about the bound-state scale 2 sqrt(k_i k_j).
inline OscillatorModel random_omega_model(std::size_t n, Rng& rng) {
    OscillatorModel m;
    for (std::size_t i = 0; i < n; ++i) {
        m.masses.push_back(uniform(rng, 0.1, 10.0));
        const double w = uniform(rng, 0.3, 3.0);
        m.stiffness_diag.push_back(m.masses[i] * w * w);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = 2.0 * std::sqrt(m.stiffness_diag[i] * m.stiffness_diag[j]);
            m.couplings[{i, j}] = uniform(rng, -1.2, 1.2) * scale;
        }
    return m;
}

/// Diagonal-mass model whose S has the prescribed spectrum.
inline OscillatorModel model_with_spectrum(const std::vector<double>& lambdas, Rng& rng) {
    const std::size_t n = lambdas.size();
    OscillatorModel m;
    for (std::size_t i = 0; i < n; ++i) m.masses.push_back(uniform(rng, 0.3, 3.0));
    const linalg::SymMatrix s = with_spectrum(random_rotation(n, rng), lambdas);
    // V = T^{-1/2} S T^{-1/2} with T^{-1/2} = diag(sqrt(m_i)).
    for (std::size_t i = 0; i < n; ++i) m.stiffness_diag.push_back(s(i, i) * m.masses[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m.couplings[{i, j}] = 2.0 * s(i, j) * std::sqrt(m.masses[i] * m.masses[j]);
    return m;
}

/// Every occupation tuple with n_i <= caps[i], sorted by (energy, tuple).
struct GridLevel {
    std::vector<unsigned> occupations;
    double energy;
};

inline std::vector<GridLevel> exhaustive_levels(const std::vector<double>& lambdas, double hbar,
                                                const std::vector<unsigned>& caps) {
    const std::size_t n = lambdas.size();
    std::vector<GridLevel> out;
    std::vector<unsigned> occ(n, 0);
    while (true) {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) e += std::sqrt(lambdas[i]) * (occ[i] + 0.5);
        out.push_back({occ, hbar * e});
        bool done = true;
        for (std::size_t i = n; i-- > 0;) {
            if (occ[i] < caps[i]) {
                ++occ[i];
                done = false;
                break;
            }
            occ[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), [](const GridLevel& a, const GridLevel& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.occupations < b.occupations;
    });
    return out;
}

}  // namespace cho::testkit
