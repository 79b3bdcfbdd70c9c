#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cho {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonConvergence : public Error {
public:
    NonConvergence(int sweeps, double off_norm)
        : Error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) +
                " sweeps (off-diagonal norm " + std::to_string(off_norm) + ")"),
          sweeps_(sweeps), off_norm_(off_norm) {}

    int sweeps() const noexcept { return sweeps_; }
    double off_norm() const noexcept { return off_norm_; }

private:
    int sweeps_;
    double off_norm_;
};

class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(double smallest_eigenvalue)
        : Error("matrix is not positive definite (smallest eigenvalue " +
                std::to_string(smallest_eigenvalue) + ")"),
          smallest_(smallest_eigenvalue) {}

    double smallest_eigenvalue() const noexcept { return smallest_; }

private:
    double smallest_;
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(double determinant)
        : Error("matrix is singular (det " + std::to_string(determinant) + ")"),
          det_(determinant) {}

    double determinant() const noexcept { return det_; }

private:
    double det_;
};

class WrongDimension : public Error {
public:
    WrongDimension(std::size_t expected, std::size_t actual)
        : Error("operation requires n = " + std::to_string(expected) + ", got n = " +
                std::to_string(actual)),
          expected_(expected), actual_(actual) {}

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

/// Raised when an operation needs every lambda > 0 and one is not.
class UnboundSystem : public Error {
public:
    UnboundSystem(std::size_t index, double lambda)
        : Error("no bound states: lambda[" + std::to_string(index) + "] = " +
                std::to_string(lambda) + " is not positive"),
          index_(index), lambda_(lambda) {}

    std::size_t index() const noexcept { return index_; }
    double lambda() const noexcept { return lambda_; }

private:
    std::size_t index_;
    double lambda_;
};

/// A decomposition whose verification residuals exceed their thresholds.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& message)
        : Error(where.empty() ? message : where + ": " + message), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid model";
        for (const auto& s : v) out += "\n  - " + s;
        return out;
    }

    std::vector<std::string> violations_;
};

}  // namespace cho
