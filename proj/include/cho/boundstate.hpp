#pragma once

// Bound-state classification. H has bound states iff S = T^{1/2} V T^{1/2}
// is positive definite, which is decided from its leading principal minors
// (Sylvester's criterion). For the diagonal-kinetic models the same test is
// also available as explicit polynomials in the masses, stiffnesses and
// couplings for N = 2..5, and as the characteristic-polynomial route for N = 3.
// classify() evaluates the general test and attaches every applicable
// closed form as a cross-check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cho/term_tables.hpp"
#include "cho/diagonalize.hpp"
#include "cho/error.hpp"
#include "cho/linalg.hpp"
#include "cho/model.hpp"

namespace cho {

enum class Verdict { Bound, Unbound, Marginal };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Bound: return "Bound";
        case Verdict::Unbound: return "Unbound";
        case Verdict::Marginal: return "Marginal";
    }
    return "?";
}

enum class MinorSign { Positive, Negative, Marginal };

inline std::string_view to_string(MinorSign s) {
    switch (s) {
        case MinorSign::Positive: return "positive";
        case MinorSign::Negative: return "negative";
        case MinorSign::Marginal: return "marginal";
    }
    return "?";
}

struct MinorStatus {
    std::size_t k;  // 1-based block size
    double value;
    double margin;
    MinorSign status;
};

struct ClosedFormCheck {
    std::string name;
    double closed_form;
    double reference;
    bool pass;
};

struct BoundStateReport {
    std::vector<double> minors;
    Verdict verdict = Verdict::Marginal;
    std::vector<MinorStatus> per_minor;
    std::vector<ClosedFormCheck> closed_form_checks;
    std::optional<double> discriminant;  // n = 3 only
    std::vector<double> eigenvalues;     // of S, ascending
    std::optional<std::size_t> first_failed_minor;  // 1-based k of the first non-positive minor
};

/// Dead zone around zero for the k-th leading minor of a matrix with
/// largest entry s_max.
inline double minor_margin(std::size_t k, double s_max) {
    return 1e-10 * (1.0 + std::pow(s_max, static_cast<double>(k)));
}

/// Sum with a running compensation term (Neumaier), plus the sum of
/// magnitudes as a cancellation scale.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;
    double magnitude = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            compensation += (sum - t) + x;
        else
            compensation += (x - t) + sum;
        sum = t;
        magnitude += std::abs(x);
    }

    double value() const { return sum + compensation; }
};

/// Polynomial value together with the sum of |terms| that produced it.
struct PolyValue {
    double value;
    double magnitude;
};

namespace detail {

inline void require_dimension(const OscillatorModel& model, std::size_t n) {
    if (model.size() != n) throw WrongDimension(n, model.size());
    if (model.kinetic_override)
        throw std::invalid_argument("closed-form conditions assume T = diag(1/m_i); model has a kinetic override");
}

inline PolyValue sum_terms(std::initializer_list<double> terms) {
    CompensatedSum s;
    for (double t : terms) s.add(t);
    return {s.value(), s.magnitude};
}

inline bool close(double closed_form, double reference, double scale, double rtol = 1e-8) {
    return std::abs(closed_form - reference) <= rtol * std::max({std::abs(reference), std::abs(closed_form), scale});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// N = 2: potential 1/2 (C1 x1^2 + C2 x2^2 + C3 x1 x2)

struct ConditionPair {
    double first;
    double second;
};

/// (m2 C1 + m1 C2, 4 C1 C2 - C3^2); bound iff both are positive.
inline ConditionPair n2_conditions(const OscillatorModel& model) {
    detail::require_dimension(model, 2);
    const double m1 = model.masses[0], m2 = model.masses[1];
    const double c1 = model.stiffness_diag[0], c2 = model.stiffness_diag[1], c3 = model.coupling(0, 1);
    return {m2 * c1 + m1 * c2, 4.0 * c1 * c2 - c3 * c3};
}

/// Closed-form roots (m1 C2 + m2 C1 -/+ R) / (2 m1 m2) with
/// R = sqrt((m2 C1 - m1 C2)^2 + m1 m2 C3^2), ascending. The root on the
/// cancelling side is taken from the product (4 C1 C2 - C3^2) / (4 m1 m2)
/// instead, which is the same value without the loss of digits.
inline std::pair<double, double> n2_closed_eigenvalues(const OscillatorModel& model) {
    detail::require_dimension(model, 2);
    const double m1 = model.masses[0], m2 = model.masses[1];
    const double c1 = model.stiffness_diag[0], c2 = model.stiffness_diag[1], c3 = model.coupling(0, 1);
    const double r = std::hypot(m2 * c1 - m1 * c2, std::sqrt(m1 * m2) * c3);
    const double sum = m1 * c2 + m2 * c1;
    const double denom = 2.0 * m1 * m2;
    const double product = (4.0 * c1 * c2 - c3 * c3) / (4.0 * m1 * m2);
    if (sum >= 0.0) {
        const double hi = (sum + r) / denom;
        return {hi == 0.0 ? (sum - r) / denom : product / hi, hi};
    }
    const double lo = (sum - r) / denom;
    return {lo, product / lo};
}

// ---------------------------------------------------------------------------
// N = 3: potential 1/2 (sum m_i w_i^2 x_i^2 + D12 x1 x2 + D13 x1 x3 + D23 x2 x3)

/// lambda^3 - a lambda^2 + b lambda - c.
struct CubicCoefficients {
    double a;
    double b;
    double c;
};

inline CubicCoefficients n3_charpoly(const OscillatorModel& model) {
    detail::require_dimension(model, 3);
    const auto& m = model.masses;
    const double w1 = model.omega_sq(0), w2 = model.omega_sq(1), w3 = model.omega_sq(2);
    const double d12 = model.coupling(0, 1), d13 = model.coupling(0, 2), d23 = model.coupling(1, 2);
    const double q12 = d12 * d12 / (4.0 * m[0] * m[1]);
    const double q13 = d13 * d13 / (4.0 * m[0] * m[2]);
    const double q23 = d23 * d23 / (4.0 * m[1] * m[2]);
    const double triple = d12 * d13 * d23 / (4.0 * m[0] * m[1] * m[2]);
    return {
        w1 + w2 + w3,
        detail::sum_terms({w1 * w2, w1 * w3, w2 * w3, -q12, -q13, -q23}).value,
        detail::sum_terms({w1 * w2 * w3, -q12 * w3, -q13 * w2, -q23 * w1, triple}).value,
    };
}

/// Discriminant of lambda^3 - a lambda^2 + b lambda - c, i.e. the product of
/// squared root differences.
inline double n3_discriminant(double a, double b, double c) {
    return detail::sum_terms({a * a * b * b, -4.0 * a * a * a * c, 18.0 * a * b * c, -4.0 * b * b * b, -27.0 * c * c})
        .value;
}

/// (4 m1 m2 w1^2 w2^2 - D12^2,
///  4 m1 m2 m3 w1^2 w2^2 w3^2 + D12 D13 D23 - m1 w1^2 D23^2 - m2 w2^2 D13^2 - m3 w3^2 D12^2).
/// Together with w1^2 > 0 these are 4 m1 m2 and 4 m1 m2 m3 times the second
/// and third leading minors of S.
inline ConditionPair n3_conditions(const OscillatorModel& model) {
    detail::require_dimension(model, 3);
    const double k1 = model.stiffness_diag[0], k2 = model.stiffness_diag[1], k3 = model.stiffness_diag[2];
    const double d12 = model.coupling(0, 1), d13 = model.coupling(0, 2), d23 = model.coupling(1, 2);
    return {
        detail::sum_terms({4.0 * k1 * k2, -d12 * d12}).value,
        detail::sum_terms({4.0 * k1 * k2 * k3, d12 * d13 * d23, -k1 * d23 * d23, -k2 * d13 * d13, -k3 * d12 * d12})
            .value,
    };
}

/// Characteristic-polynomial route for N = 3. b > 0, c > 0 and a
/// non-negative discriminant are the printed test; a > 0 is reported
/// separately because it only holds automatically when every w_i^2 > 0.
struct PolynomialRoute {
    CubicCoefficients coefficients;
    double discriminant;
    bool a_positive;
    bool b_positive;
    bool c_positive;
    bool discriminant_nonnegative;

    /// b > 0, c > 0, discriminant >= 0.
    bool printed_test() const { return b_positive && c_positive && discriminant_nonnegative; }
    /// All three roots positive.
    bool bound() const { return a_positive && printed_test(); }
};

/// Tolerance below zero accepted for a discriminant computed in floating point.
inline double discriminant_floor(double a) { return -1e-9 * (1.0 + std::pow(std::abs(a), 6.0)); }

inline PolynomialRoute necessary_coefficient_conditions(const OscillatorModel& model) {
    const CubicCoefficients k = n3_charpoly(model);
    const double delta = n3_discriminant(k.a, k.b, k.c);
    return {k, delta, k.a > 0.0, k.b > 0.0, k.c > 0.0, delta >= discriminant_floor(k.a)};
}

// ---------------------------------------------------------------------------
// N = 4 and N = 5 term tables

namespace term_tables {

inline constexpr std::size_t kMaxOscillators = 5;
inline constexpr std::size_t kPairs = kMaxOscillators * (kMaxOscillators - 1) / 2;

/// Exponents of one monomial in D_ij (i < j), m_i and w_i^2.
struct Monomial {
    std::array<int, kPairs> d{};
    std::array<int, kMaxOscillators> m{};
    std::array<int, kMaxOscillators> w2{};

    auto operator<=>(const Monomial&) const = default;
};

inline std::size_t pair_index(std::size_t i, std::size_t j) {
    // zero-based i < j < kMaxOscillators
    return i * (2 * kMaxOscillators - i - 1) / 2 + (j - i - 1);
}

inline std::string format(const Monomial& mono) {
    std::string out;
    auto put = [&](const std::string& base, int e, bool squared_symbol) {
        if (e == 0) return;
        if (!out.empty()) out += ' ';
        out += base;
        const int shown = squared_symbol ? 2 * e : e;
        if (shown != 1) out += '^' + std::to_string(shown);
    };
    for (std::size_t i = 0; i < kMaxOscillators; ++i)
        for (std::size_t j = i + 1; j < kMaxOscillators; ++j)
            put("D" + std::to_string(i + 1) + std::to_string(j + 1), mono.d[pair_index(i, j)], false);
    for (std::size_t i = 0; i < kMaxOscillators; ++i) put("m" + std::to_string(i + 1), mono.m[i], false);
    for (std::size_t i = 0; i < kMaxOscillators; ++i) put("w" + std::to_string(i + 1), mono.w2[i], true);
    return out.empty() ? "1" : out;
}

/// Parses "D12^2 m3 w3^2"-style monomials.
inline Monomial parse_monomial(std::string_view text) {
    Monomial mono;
    auto digit = [&](char ch) -> std::size_t {
        if (ch < '1' || ch > static_cast<char>('0' + kMaxOscillators))
            throw std::invalid_argument("bad oscillator index in monomial '" + std::string(text) + "'");
        return static_cast<std::size_t>(ch - '1');
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;

        int power = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            power = std::stoi(std::string(tok.substr(caret + 1)));
            tok = tok.substr(0, caret);
        }
        if (tok.size() == 3 && tok[0] == 'D') {
            const std::size_t i = digit(tok[1]), j = digit(tok[2]);
            if (i >= j) throw std::invalid_argument("coupling must be written Dij with i < j");
            mono.d[pair_index(i, j)] += power;
        } else if (tok.size() == 2 && tok[0] == 'm') {
            mono.m[digit(tok[1])] += power;
        } else if (tok.size() == 2 && tok[0] == 'w') {
            if (power % 2 != 0) throw std::invalid_argument("frequencies appear squared: '" + std::string(tok) + "'");
            mono.w2[digit(tok[1])] += power / 2;
        } else {
            throw std::invalid_argument("unrecognized factor '" + std::string(tok) + "'");
        }
    }
    return mono;
}

struct Term {
    long coefficient;
    Monomial monomial;
};

inline std::vector<Term> parse_terms(std::span<const TermSpec> specs) {
    std::vector<Term> out;
    out.reserve(specs.size());
    for (const auto& s : specs) out.push_back({s.coefficient, parse_monomial(s.monomial)});
    return out;
}

inline const std::vector<Term>& four_oscillator_terms() {
    static const std::vector<Term> terms = parse_terms(kFourOscillatorTerms);
    return terms;
}

inline const std::vector<Term>& five_oscillator_terms() {
    static const std::vector<Term> terms = parse_terms(kFiveOscillatorTerms);
    return terms;
}

inline double term_value(const Term& t, const OscillatorModel& model) {
    double v = static_cast<double>(t.coefficient);
    const std::size_t n = model.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (int e = 0; e < t.monomial.m[i]; ++e) v *= model.masses[i];
        for (int e = 0; e < t.monomial.w2[i]; ++e) v *= model.omega_sq(i);
        for (std::size_t j = i + 1; j < n; ++j)
            for (int e = 0; e < t.monomial.d[pair_index(i, j)]; ++e) v *= model.coupling(i, j);
    }
    return v;
}

inline PolyValue evaluate(std::span<const Term> terms, const OscillatorModel& model) {
    CompensatedSum s;
    for (const auto& t : terms) s.add(term_value(t, model));
    return {s.value(), s.magnitude};
}

/// Symbolic Leibniz expansion of 4^floor(n/2) * (m_1..m_n) * det(S_n) for
/// the diagonal-kinetic model, i.e. det(M) / 2^(n mod 2) with M_ii = 2 m_i w_i^2
/// and M_ij = D_ij.
inline std::map<Monomial, long> scaled_minor_expansion(std::size_t n) {
    if (n == 0 || n > kMaxOscillators) throw std::invalid_argument("expansion supports 1..5 oscillators");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Monomial, long> out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        long coefficient = inversions % 2 == 0 ? 1 : -1;
        Monomial mono;
        for (std::size_t i = 0; i < n; ++i) {
            if (perm[i] == i) {
                coefficient *= 2;
                ++mono.m[i];
                ++mono.w2[i];
            } else {
                ++mono.d[pair_index(std::min(i, perm[i]), std::max(i, perm[i]))];
            }
        }
        out[mono] += coefficient;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<Monomial, long> reduced;
    const long divisor = n % 2 == 0 ? 1 : 2;
    for (const auto& [mono, c] : out)
        if (c != 0) reduced[mono] = c / divisor;
    return reduced;
}

struct TermAudit {
    bool ok = true;
    std::optional<std::size_t> first_bad_term;  // zero-based index into the table
    std::string diagnostic;
};

/// Compare a transcribed table against the symbolic expansion and name the
/// first term that disagrees (or the first missing one).
inline TermAudit audit(std::span<const Term> terms, std::size_t n) {
    std::map<Monomial, long> expected = scaled_minor_expansion(n);
    std::map<Monomial, long> seen;
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        const Term& t = terms[idx];
        auto it = expected.find(t.monomial);
        std::string problem;
        if (it == expected.end())
            problem = "does not occur in the expansion";
        else if (it->second != t.coefficient)
            problem = "has coefficient " + std::to_string(t.coefficient) + ", expected " + std::to_string(it->second);
        else if (seen.count(t.monomial))
            problem = "is duplicated";
        if (!problem.empty())
            return {false, idx,
                    "term " + std::to_string(idx + 1) + " (" + std::to_string(t.coefficient) + " " +
                        format(t.monomial) + ") " + problem};
        seen[t.monomial] = t.coefficient;
    }
    for (const auto& [mono, c] : expected)
        if (!seen.count(mono))
            return {false, std::nullopt, "missing term " + std::to_string(c) + " " + format(mono)};
    return {};
}

}  // namespace term_tables

/// 4^floor(k/2) * (m_1 ... m_k) * (k-th leading principal minor of S), the
/// quantity the explicit polynomials reproduce.
inline double scaled_leading_minor(const OscillatorModel& model, std::size_t k) {
    const SymMatrix s = compute_S(build_T(model), build_V(model));
    double scale = std::pow(4.0, static_cast<double>(k / 2));
    for (std::size_t i = 0; i < k; ++i) scale *= model.masses[i];
    return scale * linalg::leading_principal_minors(s)[k - 1];
}

inline PolyValue n4_condition_value(const OscillatorModel& model) {
    detail::require_dimension(model, 4);
    return term_tables::evaluate(term_tables::four_oscillator_terms(), model);
}

inline PolyValue n5_condition_value(const OscillatorModel& model) {
    detail::require_dimension(model, 5);
    return term_tables::evaluate(term_tables::five_oscillator_terms(), model);
}

inline double n4_condition(const OscillatorModel& model) { return n4_condition_value(model).value; }
inline double n5_condition(const OscillatorModel& model) { return n5_condition_value(model).value; }

// ---------------------------------------------------------------------------

/// Bound iff every minor exceeds its margin; Unbound if any minor is below
/// -margin. A minor inside the dead zone is settled by the spectrum of S
/// when its smallest eigenvalue is clearly away from zero (a double root of
/// det S makes the minor quadratically small long before S stops being
/// definite). Only a spectrum that itself touches zero is Marginal.
inline Verdict verdict_from_minors(std::span<const double> minors, double s_max, double min_eigenvalue) {
    bool marginal = false;
    for (std::size_t k = 1; k <= minors.size(); ++k) {
        const double margin = minor_margin(k, s_max);
        if (minors[k - 1] < -margin) return Verdict::Unbound;
        if (minors[k - 1] <= margin) marginal = true;
    }
    if (!marginal) return Verdict::Bound;
    const double eig_margin = 1e-10 * (1.0 + s_max);
    if (min_eigenvalue < -eig_margin) return Verdict::Unbound;
    if (min_eigenvalue > eig_margin) return Verdict::Bound;
    return Verdict::Marginal;
}

namespace detail {

inline void attach_closed_forms(const OscillatorModel& model, const std::vector<double>& eigenvalues,
                                const std::vector<double>& minors, BoundStateReport& report) {
    const std::size_t n = model.size();
    auto mass_product = [&](std::size_t k) {
        double p = 1.0;
        for (std::size_t i = 0; i < k; ++i) p *= model.masses[i];
        return p;
    };
    auto add = [&](std::string name, double closed, double reference, double scale) {
        report.closed_form_checks.push_back({std::move(name), closed, reference, close(closed, reference, scale)});
    };
    // Sign tests are not meaningful while a minor sits in its dead zone.
    bool near_boundary = report.verdict == Verdict::Marginal;
    for (const auto& m : report.per_minor) near_boundary = near_boundary || m.status == MinorSign::Marginal;
    auto add_sign = [&](std::string name, bool closed, bool reference) {
        report.closed_form_checks.push_back(
            {std::move(name), closed ? 1.0 : 0.0, reference ? 1.0 : 0.0,
             closed == reference || near_boundary});
    };

    if (n == 2) {
        const ConditionPair cond = n2_conditions(model);
        const double c1 = model.stiffness_diag[0], c2 = model.stiffness_diag[1], c3 = model.coupling(0, 1);
        add("n2 4C1C2-C3^2 = 4 m1 m2 minor2", cond.second, 4.0 * mass_product(2) * minors[1],
            4.0 * std::abs(c1 * c2) + c3 * c3);
        add_sign("n2 (m2C1+m1C2 > 0 and 4C1C2-C3^2 > 0) agrees with minors", cond.first > 0.0 && cond.second > 0.0,
                 report.verdict == Verdict::Bound);
        const auto [l1, l2] = n2_closed_eigenvalues(model);
        const double scale = std::abs(eigenvalues[0]) + std::abs(eigenvalues[1]);
        add("n2 closed-form lambda1", l1, eigenvalues[0], scale);
        add("n2 closed-form lambda2", l2, eigenvalues[1], scale);
    }
    if (n >= 3 && n <= 5) {
        const OscillatorModel block = leading_block(model, 3);
        const ConditionPair cond = n3_conditions(block);
        const double k1 = std::abs(model.stiffness_diag[0]), k2 = std::abs(model.stiffness_diag[1]),
                     k3 = std::abs(model.stiffness_diag[2]);
        const double d12 = std::abs(model.coupling(0, 1)), d13 = std::abs(model.coupling(0, 2)),
                     d23 = std::abs(model.coupling(1, 2));
        add("n3 cond1 = 4 m1 m2 minor2", cond.first, 4.0 * mass_product(2) * minors[1], 4.0 * k1 * k2 + d12 * d12);
        add("n3 cond2 = 4 m1 m2 m3 minor3", cond.second, 4.0 * mass_product(3) * minors[2],
            4.0 * k1 * k2 * k3 + d12 * d13 * d23 + k1 * d23 * d23 + k2 * d13 * d13 + k3 * d12 * d12);
    }
    if (n == 3) {
        const CubicCoefficients cubic = n3_charpoly(model);
        const std::vector<double> fl = linalg::char_poly_coeffs(compute_A(build_T(model), build_V(model)));
        const double scale = 1.0 + std::abs(cubic.a) * std::abs(cubic.a) * std::abs(cubic.a);
        add("n3 charpoly a", cubic.a, -fl[1], 1.0 + std::abs(cubic.a));
        add("n3 charpoly b", cubic.b, fl[2], 1.0 + cubic.a * cubic.a);
        add("n3 charpoly c", cubic.c, -fl[3], scale);
        const double delta = n3_discriminant(cubic.a, cubic.b, cubic.c);
        report.discriminant = delta;
        report.closed_form_checks.push_back(
            {"n3 discriminant >= -1e-9 (1+|a|^6)", delta, discriminant_floor(cubic.a), delta >= discriminant_floor(cubic.a)});
        add_sign("n3 polynomial route (a,b,c > 0, discriminant >= 0) agrees with minors",
                 necessary_coefficient_conditions(model).bound(), report.verdict == Verdict::Bound);
    }
    if (n == 4 || n == 5) {
        const PolyValue p = n4_condition_value(leading_block(model, 4));
        add("n4 polynomial = 16 m1..m4 minor4", p.value, 16.0 * mass_product(4) * minors[3], p.magnitude);
    }
    if (n == 5) {
        const PolyValue p = n5_condition_value(model);
        add("n5 polynomial = 16 m1..m5 minor5", p.value, 16.0 * mass_product(5) * minors[4], p.magnitude);
    }
}

}  // namespace detail

/// Leading-minor verdict for the model, with eigenvalue and closed-form
/// cross-checks. Closed forms are only attached when T = diag(1/m_i).
inline BoundStateReport classify(const OscillatorModel& model, double tol = linalg::kDefaultJacobiTol) {
    detail::require_valid(model);
    const SymMatrix s = compute_S(build_T(model), build_V(model));
    const double s_max = s.max_abs();

    BoundStateReport report;
    report.minors = linalg::leading_principal_minors(s);
    report.eigenvalues = linalg::jacobi_eigh(s, tol).values;
    report.verdict = verdict_from_minors(report.minors, s_max, report.eigenvalues.front());

    for (std::size_t k = 1; k <= report.minors.size(); ++k) {
        const double value = report.minors[k - 1];
        const double margin = minor_margin(k, s_max);
        const MinorSign sign = value > margin ? MinorSign::Positive
                               : value < -margin ? MinorSign::Negative
                                                 : MinorSign::Marginal;
        report.per_minor.push_back({k, value, margin, sign});
        if (sign != MinorSign::Positive && !report.first_failed_minor) report.first_failed_minor = k;
    }

    report.closed_form_checks.push_back({"eigenvalues of S positive iff Bound",
                                         report.eigenvalues.front(), 0.0,
                                         report.verdict != Verdict::Bound || report.eigenvalues.front() > 0.0});
    if (!model.kinetic_override && model.size() >= 2 && model.size() <= 5)
        detail::attach_closed_forms(model, report.eigenvalues, report.minors, report);
    return report;
}

}  // namespace cho
