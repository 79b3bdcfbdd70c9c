#pragma once

// End-to-end analysis of one model (decomposition, classification,
// spectrum) plus the one-parameter coupling sweep, with text and JSON
// renderings used by the cho command-line tool.

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cho/boundstate.hpp"
#include "cho/diagonalize.hpp"
#include "cho/io.hpp"
#include "cho/linalg.hpp"
#include "cho/model.hpp"
#include "cho/spectrum.hpp"

namespace cho {

enum class MassNorm { None, Geometric, Explicit };
enum class OutputFormat { Text, Json };

struct AnalysisRequest {
    OscillatorModel model;
    std::size_t levels = 10;
    MassNorm mass_norm = MassNorm::None;
    double explicit_mass = 1.0;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<double> tolerance_override;
};

struct AnalysisReport {
    OscillatorModel model;
    SymMatrix t, v, s;
    GenMatrix a;
    ModeDecomposition modes;
    std::optional<MassNormalizedDecomposition> mass_normalized;
    BoundStateReport bound_state;
    std::optional<double> ground_state_energy;
    std::vector<EnergyLevel> levels;  // empty unless Bound and levels > 0
    std::vector<std::string> warnings;
};

enum ExitCode : int { kExitBound = 0, kExitUnbound = 1, kExitMarginal = 2, kExitError = 3 };

inline int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Bound: return kExitBound;
        case Verdict::Unbound: return kExitUnbound;
        case Verdict::Marginal: return kExitMarginal;
    }
    return kExitError;
}

namespace detail {

inline std::string fmt(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x == 0.0 ? 0.0 : x);  // no "-0"
    return buf;
}

inline std::string verdict_warning(const BoundStateReport& b) {
    std::string why;
    if (b.verdict == Verdict::Bound) {
        if (!b.first_failed_minor) return {};
        const MinorStatus& m = b.per_minor[*b.first_failed_minor - 1];
        return "near boundary: leading principal minor k=" + std::to_string(m.k) + " is inside the dead zone +/-" +
               fmt(m.margin, 3) + "; bound because the smallest eigenvalue of S is " + fmt(b.eigenvalues.front());
    }
    if (b.first_failed_minor) {
        const MinorStatus& m = b.per_minor[*b.first_failed_minor - 1];
        why = "leading principal minor k=" + std::to_string(m.k) + " is " + fmt(m.value) +
              (m.status == MinorSign::Marginal ? " (inside the dead zone +/-" + fmt(m.margin, 3) + ")" : "");
    } else {
        why = "smallest eigenvalue of S is " + fmt(b.eigenvalues.front());
    }
    if (b.verdict == Verdict::Marginal) return "marginal: " + why + "; spectrum omitted";
    return "no bound states: " + why + "; spectrum omitted";
}

}  // namespace detail

inline AnalysisReport run_analysis(const AnalysisRequest& req) {
    const double tol = req.tolerance_override.value_or(linalg::kDefaultJacobiTol);

    AnalysisReport r;
    r.model = req.model;
    r.t = build_T(req.model);
    r.v = build_V(req.model);
    r.modes = decompose(req.model, tol);
    r.s = compute_S(r.t, r.v);
    r.a = compute_A(r.t, r.v);

    switch (req.mass_norm) {
        case MassNorm::None: break;
        case MassNorm::Geometric: r.mass_normalized = decompose_mass_normalized(req.model, std::nullopt, tol); break;
        case MassNorm::Explicit: r.mass_normalized = decompose_mass_normalized(req.model, req.explicit_mass, tol); break;
    }

    r.bound_state = classify(req.model, tol);
    if (std::string w = detail::verdict_warning(r.bound_state); !w.empty()) r.warnings.push_back(std::move(w));
    if (r.bound_state.verdict == Verdict::Bound) {
        r.ground_state_energy = ground_state_energy(r.modes, req.model.hbar);
        if (req.levels > 0) r.levels = lowest_levels(r.modes, req.model.hbar, req.levels);
    }
    for (const auto& c : r.bound_state.closed_form_checks)
        if (!c.pass)
            r.warnings.push_back("closed-form check failed: " + c.name + " (" + detail::fmt(c.closed_form, 17) +
                                 " vs " + detail::fmt(c.reference, 17) + ")");
    return r;
}

inline int exit_code(const AnalysisReport& r) { return exit_code(r.bound_state.verdict); }

inline nlohmann::json report_to_json(const AnalysisReport& r) {
    using nlohmann::json;
    json out;
    out["model"] = io::model_to_json(r.model);
    out["matrices"] = {{"T", io::matrix_to_json(r.t)},
                       {"V", io::matrix_to_json(r.v)},
                       {"A", io::matrix_to_json(r.a)},
                       {"S", io::matrix_to_json(r.s)}};

    json modes;
    modes["lambdas"] = r.modes.lambdas;
    json freq = json::array();
    for (double l : r.modes.lambdas) freq.push_back(l > 0.0 ? json(std::sqrt(l)) : json(nullptr));
    modes["frequencies"] = freq;
    modes["U"] = io::matrix_to_json(r.modes.u);
    modes["C"] = io::matrix_to_json(r.modes.c);
    modes["residuals"] = {{"orthogonality", r.modes.residual_orth},
                          {"kinetic", r.modes.residual_kinetic},
                          {"potential", r.modes.residual_potential},
                          {"diagonal", r.modes.residual_diagonal}};
    if (r.mass_normalized) {
        const auto& mn = *r.mass_normalized;
        modes["mass_normalized"] = {{"m_ref", mn.m_ref},
                                    {"K", mn.k},
                                    {"C", io::matrix_to_json(mn.c)},
                                    {"lambdas", mn.lambdas},
                                    {"residual_kinetic", mn.residual_kinetic}};
    }
    out["modes"] = modes;

    const BoundStateReport& b = r.bound_state;
    json bs;
    bs["verdict"] = std::string(to_string(b.verdict));
    json minors = json::array();
    for (const auto& m : b.per_minor)
        minors.push_back({{"k", m.k}, {"value", m.value}, {"margin", m.margin}, {"status", std::string(to_string(m.status))}});
    bs["minors"] = minors;
    bs["eigenvalues"] = b.eigenvalues;
    if (b.discriminant) bs["discriminant"] = *b.discriminant;
    json checks = json::array();
    for (const auto& c : b.closed_form_checks)
        checks.push_back({{"name", c.name}, {"closed_form", c.closed_form}, {"reference", c.reference}, {"pass", c.pass}});
    bs["closed_form_checks"] = checks;
    out["bound_state"] = bs;

    if (r.ground_state_energy) {
        json levels = json::array();
        for (const auto& l : r.levels) levels.push_back({{"occupations", l.occupations}, {"energy", l.energy}});
        out["spectrum"] = {{"hbar", r.model.hbar}, {"ground_state_energy", *r.ground_state_energy}, {"levels", levels}};
    }
    out["warnings"] = r.warnings;
    return out;
}

namespace detail {

inline void put_matrix(std::string& out, const std::string& name, const GenMatrix& m) {
    out += "  " + name + " =\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += "    [";
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::string cell = fmt(m(i, j), 8);
            out += std::string(cell.size() < 15 ? 15 - cell.size() : 1, ' ') + cell;
        }
        out += " ]\n";
    }
}

inline std::string join(const std::vector<double>& xs, int digits = 10) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "  " : "") + fmt(xs[i], digits);
    return out;
}

}  // namespace detail

inline std::string report_to_text(const AnalysisReport& r) {
    using detail::fmt;
    using detail::join;
    const OscillatorModel& m = r.model;
    std::string out;
    out += "Coupled harmonic oscillators: N = " + std::to_string(m.size()) + ", hbar = " + fmt(m.hbar) + "\n\n";

    out += "Model\n";
    out += "  masses          " + join(m.masses) + "\n";
    out += "  stiffness_diag  " + join(m.stiffness_diag) + "\n";
    if (!m.couplings.empty()) {
        out += "  couplings      ";
        for (const auto& [p, d] : m.couplings)
            out += "  D" + std::to_string(p.first + 1) + std::to_string(p.second + 1) + " = " + fmt(d);
        out += "\n";
    }
    if (m.kinetic_override) out += "  kinetic matrix  user supplied\n";

    out += "\nMatrices (V holds D_ij / 2 off the diagonal)\n";
    detail::put_matrix(out, "T", r.t.full());
    detail::put_matrix(out, "V", r.v.full());
    detail::put_matrix(out, "A = T V", r.a);
    detail::put_matrix(out, "S = T^1/2 V T^1/2", r.s.full());

    out += "\nNormal modes\n";
    out += "  lambda          " + join(r.modes.lambdas) + "\n";
    out += "  sqrt(lambda)   ";
    for (double l : r.modes.lambdas) out += "  " + (l > 0.0 ? fmt(std::sqrt(l)) : std::string("imaginary"));
    out += "\n";
    detail::put_matrix(out, "C = T^1/2 U", r.modes.c);
    // Rounding-level residuals vary between toolchains; keep the text stable.
    auto residual = [](double x) { return x < 1e-12 ? std::string("<1e-12") : fmt(x, 3); };
    out += "  residuals       orthogonality " + residual(r.modes.residual_orth) + ", kinetic " +
           residual(r.modes.residual_kinetic) + ", potential " + residual(r.modes.residual_potential) + "\n";
    if (r.mass_normalized) {
        const auto& mn = *r.mass_normalized;
        out += "  mass-normalized m_ref = " + fmt(mn.m_ref) + ", K = " + join(mn.k) + "\n";
        out += "                  lambda = K / m_ref = " + join(mn.lambdas) + "\n";
    }

    const BoundStateReport& b = r.bound_state;
    out += "\nBound states: " + std::string(to_string(b.verdict)) + "\n";
    for (const auto& pm : b.per_minor)
        out += "  minor k=" + std::to_string(pm.k) + "  " + fmt(pm.value) + "  (" + std::string(to_string(pm.status)) + ")\n";
    if (b.discriminant) out += "  discriminant    " + fmt(*b.discriminant) + "\n";
    if (!b.closed_form_checks.empty()) {
        out += "  cross-checks\n";
        for (const auto& c : b.closed_form_checks)
            out += std::string("    [") + (c.pass ? "ok" : "FAIL") + "] " + c.name + ": " + fmt(c.closed_form) +
                   " vs " + fmt(c.reference) + "\n";
    }

    if (r.ground_state_energy) {
        out += "\nSpectrum\n";
        out += "  ground state energy  " + fmt(*r.ground_state_energy) + "\n";
        for (const auto& l : r.levels) {
            out += "  E(";
            for (std::size_t i = 0; i < l.occupations.size(); ++i) out += (i ? "," : "") + std::to_string(l.occupations[i]);
            out += ") = " + fmt(l.energy) + "\n";
        }
    }

    if (!r.warnings.empty()) {
        out += "\nWarnings\n";
        for (const auto& w : r.warnings) out += "  " + w + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sweep

/// Couplings varied together by a sweep, zero-based pairs.
struct SweepParameter {
    std::vector<OscillatorPair> pairs;
    std::string label;
};

/// "D:i,j" (1-based) for a single coupling, or "D:all" for every pair.
inline SweepParameter parse_sweep_parameter(const std::string& spec, std::size_t n) {
    if (spec.rfind("D:", 0) != 0) throw ParseError("--param", "expected D:i,j or D:all, got '" + spec + "'");
    const std::string body = spec.substr(2);
    SweepParameter p;
    p.label = spec;
    if (body == "all") {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) p.pairs.push_back({i, j});
        if (p.pairs.empty()) throw ParseError("--param", "model has no oscillator pairs");
        return p;
    }
    const auto comma = body.find(',');
    std::size_t i = 0, j = 0;
    try {
        if (comma == std::string::npos) throw std::invalid_argument("missing comma");
        std::size_t used = 0;
        i = std::stoul(body.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("trailing characters");
        j = std::stoul(body.substr(comma + 1), &used);
        if (used != body.size() - comma - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw ParseError("--param", "expected D:i,j with 1-based integers, got '" + spec + "'");
    }
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw ParseError("--param", "coupling indices must be distinct and within 1.." + std::to_string(n));
    p.pairs.push_back({std::min(i, j) - 1, std::max(i, j) - 1});
    return p;
}

struct SweepStep {
    double value;
    Verdict verdict;
    std::vector<double> lambdas;
};

/// Verdict change between two adjacent steps, bracketed by bisection.
struct SweepTransition {
    Verdict from;
    Verdict to;
    double lo;  // verdict(lo) == from
    double hi;  // verdict(hi) == to
};

struct SweepResult {
    std::vector<SweepStep> steps;
    std::vector<SweepTransition> transitions;
};

inline OscillatorModel with_coupling(OscillatorModel model, const std::vector<OscillatorPair>& pairs, double d) {
    for (const auto& p : pairs) model.couplings[p] = d;
    return model;
}

/// Classify the model at steps + 1 evenly spaced coupling values in
/// [from, to], then bisect every verdict change down to a bracket narrower
/// than bracket_width.
inline SweepResult sweep(const OscillatorModel& base, const SweepParameter& param, double from, double to,
                         std::size_t steps, double bracket_width = 5e-10,
                         double tol = linalg::kDefaultJacobiTol) {
    if (steps < 1) throw std::invalid_argument("sweep needs at least one step");
    if (!(std::isfinite(from) && std::isfinite(to) && from < to))
        throw std::invalid_argument("sweep range must satisfy from < to");
    if (!(bracket_width > 0.0)) throw std::invalid_argument("bracket width must be > 0");

    auto verdict_at = [&](double d) { return classify(with_coupling(base, param.pairs, d), tol).verdict; };

    SweepResult out;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double d = i == steps ? to : from + (to - from) * static_cast<double>(i) / static_cast<double>(steps);
        const BoundStateReport b = classify(with_coupling(base, param.pairs, d), tol);
        out.steps.push_back({d, b.verdict, b.eigenvalues});
    }
    for (std::size_t i = 0; i + 1 < out.steps.size(); ++i) {
        // Walk from the left step to the right one, bisecting for the edge of
        // the current verdict each time; a Marginal band in between shows up
        // as two transitions.
        Verdict left = out.steps[i].verdict;
        const Verdict right = out.steps[i + 1].verdict;
        double start = out.steps[i].value;
        const double end = out.steps[i + 1].value;
        while (left != right) {
            double lo = start, hi = end;
            Verdict hi_verdict = right;
            while (hi - lo >= bracket_width) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const Verdict v = verdict_at(mid);
                if (v == left) {
                    lo = mid;
                } else {
                    hi = mid;
                    hi_verdict = v;
                }
            }
            out.transitions.push_back({left, hi_verdict, lo, hi});
            left = hi_verdict;
            start = hi;
        }
    }
    return out;
}

inline nlohmann::json sweep_to_json(const SweepParameter& p, const SweepResult& r) {
    using nlohmann::json;
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"value", s.value}, {"verdict", std::string(to_string(s.verdict))}, {"lambdas", s.lambdas}});
    json transitions = json::array();
    for (const auto& t : r.transitions)
        transitions.push_back({{"from", std::string(to_string(t.from))},
                               {"to", std::string(to_string(t.to))},
                               {"lo", t.lo},
                               {"hi", t.hi},
                               {"width", t.hi - t.lo}});
    json pairs = json::array();
    for (const auto& pr : p.pairs) pairs.push_back({pr.first + 1, pr.second + 1});
    return {{"parameter", p.label}, {"pairs", pairs}, {"steps", steps}, {"transitions", transitions}};
}

inline std::string sweep_to_text(const SweepParameter& p, const SweepResult& r) {
    using detail::fmt;
    std::string out = "Sweep of " + p.label + " (";
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        out += (i ? ", " : "") + std::string("D") + std::to_string(p.pairs[i].first + 1) +
               std::to_string(p.pairs[i].second + 1);
    out += ")\n\n  value            verdict   lambdas\n";
    for (const auto& s : r.steps) {
        std::string v = fmt(s.value);
        std::string verdict(to_string(s.verdict));
        out += "  " + v + std::string(v.size() < 17 ? 17 - v.size() : 1, ' ') + verdict +
               std::string(verdict.size() < 10 ? 10 - verdict.size() : 1, ' ') + detail::join(s.lambdas, 8) + "\n";
    }
    out += "\nTransitions\n";
    if (r.transitions.empty()) out += "  none\n";
    for (const auto& t : r.transitions)
        out += "  " + std::string(to_string(t.from)) + " -> " + std::string(to_string(t.to)) + " at " +
               fmt(0.5 * (t.lo + t.hi), 12) + "  bracket [" + fmt(t.lo, 15) + ", " + fmt(t.hi, 15) + "] width " +
               fmt(t.hi - t.lo, 3) + "\n";
    return out;
}

}  // namespace cho
