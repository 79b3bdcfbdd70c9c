#pragma once

// Dense linear algebra for small real matrices (n <= 16): a cyclic Jacobi
// eigensolver, SPD square roots, LU determinants and leading principal
// minors, Gauss-Jordan inverse and Faddeev-LeVerrier characteristic
// polynomials. Everything is a pure function over value types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cho/error.hpp"

namespace cho::linalg {

inline constexpr std::size_t kMaxDim = 16;
inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr int kDefaultMaxSweeps = 50;

namespace detail {

inline void check_dim(std::size_t n) {
    if (n == 0 || n > kMaxDim)
        throw std::invalid_argument("matrix dimension must be in [1, 16], got " + std::to_string(n));
}

inline void check_finite(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("matrix entries must be finite");
}

}  // namespace detail

/// Square n x n real matrix, row-major, not necessarily symmetric.
class GenMatrix {
public:
    GenMatrix() = default;

    explicit GenMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {
        detail::check_dim(n);
        detail::check_finite(fill);
    }

    GenMatrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
        detail::check_dim(n_);
        a_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("GenMatrix rows must all have length n");
            for (double x : r) {
                detail::check_finite(x);
                a_.push_back(x);
            }
        }
    }

    static GenMatrix identity(std::size_t n) {
        GenMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static GenMatrix diagonal(std::span<const double> d) {
        GenMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            detail::check_finite(d[i]);
            m(i, i) = d[i];
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    std::span<const double> data() const noexcept { return a_; }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> c(n_);
        for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    bool operator==(const GenMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Real symmetric n x n matrix. Only the lower triangle is stored, so
/// (i, j) and (j, i) always read the same value.
class SymMatrix {
public:
    SymMatrix() = default;

    /// Zero matrix.
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * (n + 1) / 2, 0.0) { detail::check_dim(n); }

    /// Build from f(i, j), called once per lower-triangle entry (i >= j).
    template <typename F>
    static SymMatrix generate(std::size_t n, F&& f) {
        SymMatrix s(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                double x = f(i, j);
                detail::check_finite(x);
                s.a_[index(i, j)] = x;
            }
        return s;
    }

    /// Rows must be exactly symmetric.
    SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : SymMatrix(from_general(GenMatrix(rows), 0.0)) {}

    static SymMatrix diagonal(std::span<const double> d) {
        return generate(d.size(), [&](std::size_t i, std::size_t j) { return i == j ? d[i] : 0.0; });
    }

    static SymMatrix identity(std::size_t n) {
        return generate(n, [](std::size_t i, std::size_t j) { return i == j ? 1.0 : 0.0; });
    }

    /// Symmetrize g as (g + g^t) / 2 after checking its skew does not exceed
    /// max_skew. Pass 0 to demand exact symmetry.
    static SymMatrix from_general(const GenMatrix& g, double max_skew) {
        const std::size_t n = g.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                double skew = std::abs(g(i, j) - g(j, i));
                if (!(skew <= max_skew))
                    throw std::invalid_argument("matrix is not symmetric: |a(" + std::to_string(i) + "," +
                                                std::to_string(j) + ") - a(" + std::to_string(j) + "," +
                                                std::to_string(i) + ")| = " + std::to_string(skew));
            }
        return generate(n, [&](std::size_t i, std::size_t j) {
            return i == j ? g(i, i) : 0.5 * (g(i, j) + g(j, i));
        });
    }

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[index(i, j)]; }

    GenMatrix full() const {
        GenMatrix g(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) g(i, j) = (*this)(i, j);
        return g;
    }

    /// Top-left k x k block.
    SymMatrix leading(std::size_t k) const {
        return generate(k, [&](std::size_t i, std::size_t j) { return (*this)(i, j); });
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((*this)(i, j) != 0.0) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    bool operator==(const SymMatrix&) const = default;

private:
    static std::size_t index(std::size_t i, std::size_t j) noexcept {
        if (i < j) std::swap(i, j);
        return i * (i + 1) / 2 + j;
    }

    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// values ascending; column j of vectors is the unit eigenvector of values[j].
struct EigDecomposition {
    std::vector<double> values;
    GenMatrix vectors;
};

// ---------------------------------------------------------------------------
// Plumbing

inline GenMatrix matmul(const GenMatrix& a, const GenMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matmul: dimension mismatch");
    const std::size_t n = a.size();
    GenMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline GenMatrix transpose(const GenMatrix& a) {
    GenMatrix t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
    return t;
}

inline double max_abs_diff(const GenMatrix& a, const GenMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

inline double trace(const GenMatrix& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a(i, i);
    return t;
}

namespace detail {

// In-place LU with partial pivoting on a row-major k x k block; returns det.
inline double lu_det(std::vector<double> m, std::size_t k) {
    double det = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r)
            if (std::abs(m[r * k + c]) > std::abs(m[piv * k + c])) piv = r;
        if (m[piv * k + c] == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m[c * k + j], m[piv * k + j]);
            det = -det;
        }
        const double d = m[c * k + c];
        det *= d;
        for (std::size_t r = c + 1; r < k; ++r) {
            const double f = m[r * k + c] / d;
            if (f == 0.0) continue;
            for (std::size_t j = c + 1; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
        }
    }
    return det;
}

}  // namespace detail

inline double det(const GenMatrix& a) {
    return detail::lu_det(std::vector<double>(a.data().begin(), a.data().end()), a.size());
}

inline GenMatrix inverse(const GenMatrix& a) {
    const std::size_t n = a.size();
    const double d = det(a);
    if (!(std::abs(d) > 1e-14 * (1.0 + std::pow(a.max_abs(), static_cast<double>(n)))))
        throw SingularMatrix(d);

    GenMatrix m = a;
    GenMatrix inv = GenMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        if (m(piv, c) == 0.0) throw SingularMatrix(d);
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(c, j), m(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        const double p = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m(r, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Eigensolver

/// Cyclic (row-by-row) Jacobi. Converged when the off-diagonal Frobenius norm
/// is at most tol * (1 + diagonal Frobenius norm). Eigenvalues come back
/// ascending, near-ties ordered by original diagonal position, and each
/// eigenvector has its largest-magnitude entry non-negative.
inline EigDecomposition jacobi_eigh(const SymMatrix& s, double tol = kDefaultJacobiTol,
                                    int max_sweeps = kDefaultMaxSweeps) {
    if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigh: tol must be > 0");
    if (max_sweeps < 1) throw std::invalid_argument("jacobi_eigh: max_sweeps must be >= 1");

    const std::size_t n = s.size();
    GenMatrix a = s.full();
    GenMatrix v = GenMatrix::identity(n);

    for (int sweep = 0;; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) (i == j ? diag : off) += a(i, j) * a(i, j);
        off = std::sqrt(off);
        diag = std::sqrt(diag);
        if (off <= tol * (1.0 + diag)) break;
        if (sweep == max_sweeps) throw NonConvergence(max_sweeps, off);

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    // Chains of near-equal values are reordered by original index.
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo + 1;
        while (hi < n) {
            const double prev = a(order[hi - 1], order[hi - 1]);
            if (std::abs(a(order[hi], order[hi]) - prev) > 1e-12 * (1.0 + std::abs(prev))) break;
            ++hi;
        }
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
        lo = hi;
    }

    EigDecomposition out{std::vector<double>(n), GenMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.values[j] = a(src, src);
        std::size_t big = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(v(i, src)) > std::abs(v(big, src))) big = i;
        const double sign = v(big, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = sign * v(i, src);
    }
    return out;
}

/// Symmetric positive-definite square root R with R * R = s. Diagonal input
/// takes an entrywise square root.
inline SymMatrix spd_sqrt(const SymMatrix& s) {
    const std::size_t n = s.size();
    if (s.is_diagonal()) {
        double smallest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) smallest = std::min(smallest, s(i, i));
        if (!(smallest > 0.0)) throw NotPositiveDefinite(smallest);
        return SymMatrix::generate(n, [&](std::size_t i, std::size_t j) { return i == j ? std::sqrt(s(i, i)) : 0.0; });
    }

    const EigDecomposition e = jacobi_eigh(s);
    if (!(e.values.front() > 0.0)) throw NotPositiveDefinite(e.values.front());
    return SymMatrix::generate(n, [&](std::size_t i, std::size_t j) {
        double r = 0.0;
        for (std::size_t k = 0; k < n; ++k) r += e.vectors(i, k) * std::sqrt(e.values[k]) * e.vectors(j, k);
        return r;
    });
}

/// Element k-1 is the determinant of the top-left k x k block, each from a
/// fresh partial-pivot LU.
inline std::vector<double> leading_principal_minors(const SymMatrix& s) {
    const std::size_t n = s.size();
    std::vector<double> minors(n);
    minors[0] = s(0, 0);
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<double> block(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block[i * k + j] = s(i, j);
        minors[k - 1] = detail::lu_det(std::move(block), k);
    }
    return minors;
}

/// Coefficients of det(lambda I - a), highest power first (leading 1).
inline std::vector<double> char_poly_coeffs(const GenMatrix& a) {
    const std::size_t n = a.size();
    std::vector<double> coeffs(n + 1);
    coeffs[0] = 1.0;
    GenMatrix m = GenMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const GenMatrix am = matmul(a, m);
        coeffs[k] = -trace(am) / static_cast<double>(k);
        if (k == n) break;
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += coeffs[k];
    }
    return coeffs;
}

}  // namespace cho::linalg
