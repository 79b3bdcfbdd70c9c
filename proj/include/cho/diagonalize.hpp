#pragma once

// Normal-mode decomposition of H = 1/2 (p^t T p + x^t V x).
//
// With S = T^{1/2} V T^{1/2} = U diag(lambda) U^t (U orthogonal), the
// canonical transformation x = C x', p = (C^t)^{-1} p' with C = T^{1/2} U
// satisfies C^{-1} T (C^t)^{-1} = I and C^t V C = diag(lambda), so the
// lambdas are the squared normal-mode frequencies and also the eigenvalues
// of the non-symmetric A = T V.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cho/error.hpp"
#include "cho/linalg.hpp"
#include "cho/model.hpp"

namespace cho {

struct ModeDecomposition {
    std::vector<double> lambdas;  // ascending, frequency^2
    GenMatrix u;                  // orthogonal eigenvectors of S
    GenMatrix c;                  // canonical transformation T^{1/2} U
    double residual_orth = 0.0;       // |U^t U - I|_max
    double residual_kinetic = 0.0;    // |C^{-1} T (C^t)^{-1} - I|_max
    double residual_potential = 0.0;  // largest off-diagonal |(C^t V C)_ij|
    double residual_diagonal = 0.0;   // max_i |(C^t V C)_ii - lambda_i|
};

struct MassNormalizedDecomposition {
    double m_ref = 1.0;
    std::vector<double> k;        // diagonal of K = C^t V C
    GenMatrix c;                  // dimensionless, C^{-1} T (C^t)^{-1} = I / m_ref
    std::vector<double> lambdas;  // k / m_ref
    double residual_kinetic = 0.0;  // |m_ref C^{-1} T (C^t)^{-1} - I|_max
};

inline GenMatrix compute_A(const SymMatrix& t, const SymMatrix& v) {
    if (t.size() != v.size()) throw std::invalid_argument("compute_A: T and V dimensions differ");
    return linalg::matmul(t.full(), v.full());
}

inline SymMatrix compute_S(const SymMatrix& t, const SymMatrix& v) {
    if (t.size() != v.size()) throw std::invalid_argument("compute_S: T and V dimensions differ");
    const GenMatrix root = linalg::spd_sqrt(t).full();
    const GenMatrix p = linalg::matmul(linalg::matmul(root, v.full()), root);
    return SymMatrix::from_general(p, 1e-12 * (1.0 + p.max_abs()));
}

namespace detail {

inline void require_valid(const OscillatorModel& model) {
    auto violations = validate(model);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace detail

/// Diagonalize the model through the symmetric route. The three verification
/// residuals are always computed; exceeding 1e-9 (orthogonality) or
/// 1e-8 * (1 + |M|_max) (kinetic with M = T, potential with M = V) raises
/// InternalConsistencyError. Thresholds scale up proportionally when a Jacobi
/// tolerance looser than 1e-12 is requested.
inline ModeDecomposition decompose(const OscillatorModel& model, double tol = linalg::kDefaultJacobiTol) {
    using linalg::matmul;
    using linalg::transpose;

    detail::require_valid(model);
    const SymMatrix t = build_T(model);
    const SymMatrix v = build_V(model);
    const std::size_t n = t.size();

    const GenMatrix root = linalg::spd_sqrt(t).full();
    linalg::EigDecomposition eig = linalg::jacobi_eigh(compute_S(t, v), tol);

    ModeDecomposition out;
    out.lambdas = std::move(eig.values);
    out.u = std::move(eig.vectors);
    out.c = matmul(root, out.u);

    const GenMatrix id = GenMatrix::identity(n);
    out.residual_orth = linalg::max_abs_diff(matmul(transpose(out.u), out.u), id);

    const GenMatrix c_inv = linalg::inverse(out.c);
    out.residual_kinetic = linalg::max_abs_diff(matmul(matmul(c_inv, t.full()), transpose(c_inv)), id);

    const GenMatrix ctvc = matmul(matmul(transpose(out.c), v.full()), out.c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                out.residual_diagonal = std::max(out.residual_diagonal, std::abs(ctvc(i, i) - out.lambdas[i]));
            else
                out.residual_potential = std::max(out.residual_potential, std::abs(ctvc(i, j)));
        }

    const double scale = std::max(1.0, tol / linalg::kDefaultJacobiTol);
    const double v_bound = 1e-8 * scale * (1.0 + v.max_abs());
    if (out.residual_orth > 1e-9 * scale || out.residual_kinetic > 1e-8 * scale * (1.0 + t.max_abs()) ||
        out.residual_potential > v_bound || out.residual_diagonal > v_bound)
        throw InternalConsistencyError(
            "normal-mode decomposition failed verification: orth " + std::to_string(out.residual_orth) +
            ", kinetic " + std::to_string(out.residual_kinetic) + ", potential " +
            std::to_string(out.residual_potential) + ", diagonal " + std::to_string(out.residual_diagonal));
    return out;
}

/// Geometric mean of the masses.
inline double geometric_mean_mass(const OscillatorModel& model) {
    double log_sum = 0.0;
    for (double m : model.masses) log_sum += std::log(m);
    return std::exp(log_sum / static_cast<double>(model.size()));
}

/// Variant that keeps x' and p' in physical units: C is rescaled by
/// sqrt(m_ref) so C^{-1} T (C^t)^{-1} = I / m_ref, and K = C^t V C is read
/// back from the product. m_ref defaults to the geometric mean of the masses
/// (also when a kinetic override is present).
inline MassNormalizedDecomposition decompose_mass_normalized(const OscillatorModel& model,
                                                             std::optional<double> m_ref = std::nullopt,
                                                             double tol = linalg::kDefaultJacobiTol) {
    using linalg::matmul;
    using linalg::transpose;

    if (m_ref && !(std::isfinite(*m_ref) && *m_ref > 0.0))
        throw std::invalid_argument("reference mass must be > 0");
    const ModeDecomposition base = decompose(model, tol);

    MassNormalizedDecomposition out;
    out.m_ref = m_ref ? *m_ref : geometric_mean_mass(model);
    const std::size_t n = model.size();
    const double root_m = std::sqrt(out.m_ref);

    out.c = GenMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.c(i, j) = root_m * base.c(i, j);

    const GenMatrix k_mat = matmul(matmul(transpose(out.c), build_V(model).full()), out.c);
    out.k.resize(n);
    out.lambdas.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.k[i] = k_mat(i, i);
        out.lambdas[i] = out.k[i] / out.m_ref;
    }

    const GenMatrix c_inv = linalg::inverse(out.c);
    GenMatrix scaled = matmul(matmul(c_inv, build_T(model).full()), transpose(c_inv));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= out.m_ref;
    out.residual_kinetic = linalg::max_abs_diff(scaled, GenMatrix::identity(n));
    return out;
}

}  // namespace cho
