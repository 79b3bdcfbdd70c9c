#pragma once

// Model files are JSON:
//
//   {"hbar"?: number, "masses": [...],
//    "omegas"?: [...] | "stiffness_diag"?: [...] | "c"?: [C1, C2, C3],
//    "couplings"?: [[i, j, D], ...], "kinetic"?: [[...], ...]}
//
// Exactly one of omegas / stiffness_diag / c. Coupling indices are 1-based.

#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cho/error.hpp"
#include "cho/model.hpp"

namespace cho::io {

using json = nlohmann::json;

namespace detail {

inline double number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where, "expected a number");
    return j.get<double>();
}

inline std::vector<double> number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::size_t one_based_index(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where, "oscillator index must be an integer");
    const auto v = j.get<long long>();
    if (v < 1) throw ParseError(where, "oscillator indices are 1-based, got " + std::to_string(v));
    return static_cast<std::size_t>(v - 1);
}

}  // namespace detail

/// Parse and validate a model from a JSON document.
inline OscillatorModel parse_model(const json& doc) {
    using detail::number;
    using detail::number_array;

    if (!doc.is_object()) throw ParseError("", "model must be a JSON object");
    static const std::set<std::string> known = {"hbar", "masses", "omegas", "stiffness_diag", "c", "couplings", "kinetic"};
    for (const auto& item : doc.items())
        if (!known.count(item.key())) throw ParseError(item.key(), "unknown key");

    OscillatorModel model;
    if (!doc.contains("masses")) throw ParseError("masses", "required key missing");
    model.masses = number_array(doc["masses"], "masses");
    if (doc.contains("hbar")) model.hbar = number(doc["hbar"], "hbar");

    std::vector<std::string> violations;
    const int forms = int(doc.contains("omegas")) + int(doc.contains("stiffness_diag")) + int(doc.contains("c"));
    if (forms != 1) {
        violations.push_back("exactly one of \"omegas\", \"stiffness_diag\" or \"c\" is required");
        model.stiffness_diag.assign(model.masses.size(), 0.0);
    } else if (doc.contains("omegas")) {
        const std::vector<double> omegas = number_array(doc["omegas"], "omegas");
        if (omegas.size() != model.masses.size())
            throw ParseError("omegas", "expected " + std::to_string(model.masses.size()) + " entries");
        model.stiffness_diag.resize(omegas.size());
        for (std::size_t i = 0; i < omegas.size(); ++i)
            model.stiffness_diag[i] = model.masses[i] * omegas[i] * omegas[i];
    } else if (doc.contains("stiffness_diag")) {
        model.stiffness_diag = number_array(doc["stiffness_diag"], "stiffness_diag");
    } else {
        const std::vector<double> c = number_array(doc["c"], "c");
        if (c.size() != 3) throw ParseError("c", "expected [C1, C2, C3]");
        if (model.masses.size() != 2) throw ParseError("c", "the C1, C2, C3 form requires exactly two masses");
        if (doc.contains("couplings")) throw ParseError("couplings", "not allowed together with \"c\"");
        model.stiffness_diag = {c[0], c[1]};
        if (c[2] != 0.0) model.couplings[{0, 1}] = c[2];
    }

    if (doc.contains("couplings")) {
        const json& list = doc["couplings"];
        if (!list.is_array()) throw ParseError("couplings", "expected an array of [i, j, D]");
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string where = "couplings[" + std::to_string(k) + "]";
            const json& entry = list[k];
            if (!entry.is_array() || entry.size() != 3) throw ParseError(where, "expected [i, j, D]");
            std::size_t i = detail::one_based_index(entry[0], where + "[0]");
            std::size_t j = detail::one_based_index(entry[1], where + "[1]");
            const double d = number(entry[2], where + "[2]");
            if (i > j) std::swap(i, j);
            if (!model.couplings.emplace(OscillatorPair{i, j}, d).second)
                violations.push_back("couplings(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                     "): pair listed more than once");
        }
    }

    if (doc.contains("kinetic")) {
        const json& rows = doc["kinetic"];
        if (!rows.is_array() || rows.empty()) throw ParseError("kinetic", "expected a square array of rows");
        const std::size_t n = rows.size();
        if (n > linalg::kMaxDim) throw ParseError("kinetic", "dimension exceeds 16");
        GenMatrix g(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::vector<double> r = number_array(rows[i], "kinetic[" + std::to_string(i) + "]");
            if (r.size() != n) throw ParseError("kinetic[" + std::to_string(i) + "]", "row length must be " + std::to_string(n));
            for (std::size_t j = 0; j < n; ++j) g(i, j) = r[j];
        }
        try {
            model.kinetic_override = SymMatrix::from_general(g, 0.0);
        } catch (const std::invalid_argument& e) {
            throw ParseError("kinetic", e.what());
        }
    }

    for (auto& v : validate(model)) violations.push_back(std::move(v));
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return model;
}

inline OscillatorModel parse_model_text(const std::string& text, const std::string& source = "") {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + (source.empty() ? "" : ":") + "byte " + std::to_string(e.byte), e.what());
    }
    return parse_model(doc);
}

inline OscillatorModel parse_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str(), path);
}

/// Canonical form: stiffness_diag (never omegas), 1-based couplings in pair
/// order. Parsing the result reproduces the same T and V bit for bit.
inline json model_to_json(const OscillatorModel& model) {
    json out;
    out["hbar"] = model.hbar;
    out["masses"] = model.masses;
    out["stiffness_diag"] = model.stiffness_diag;
    json couplings = json::array();
    for (const auto& [pair, d] : model.couplings) couplings.push_back({pair.first + 1, pair.second + 1, d});
    out["couplings"] = couplings;
    if (model.kinetic_override) {
        json rows = json::array();
        const SymMatrix& t = *model.kinetic_override;
        for (std::size_t i = 0; i < t.size(); ++i) {
            json r = json::array();
            for (std::size_t j = 0; j < t.size(); ++j) r.push_back(t(i, j));
            rows.push_back(r);
        }
        out["kinetic"] = rows;
    }
    return out;
}

inline json matrix_to_json(const GenMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

inline json matrix_to_json(const SymMatrix& m) { return matrix_to_json(m.full()); }

}  // namespace cho::io
