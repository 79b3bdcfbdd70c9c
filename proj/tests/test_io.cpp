#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "cho/cho.hpp"
#include "test_support.hpp"

using namespace cho;
namespace tk = cho::testkit;
using tk::Rng;

namespace {

std::string source_path(const std::string& rel) { return std::string(CHO_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string validation_message(const std::string& text) {
    try {
        io::parse_model_text(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

AnalysisReport analyze(const OscillatorModel& m, std::size_t levels = 10) {
    AnalysisRequest req;
    req.model = m;
    req.levels = levels;
    return run_analysis(req);
}

}  // namespace

TEST(ParseModel, IdenticalOscillators) {
    const OscillatorModel m = io::parse_model_text(
        R"({"masses":[1,1,1],"omegas":[1,1,1],"couplings":[[1,2,1],[1,3,1],[2,3,1]]})");
    EXPECT_EQ(m, make_identical_model(3, 1, 1, 1));
}

TEST(ParseModel, TwoOscillatorShorthand) {
    EXPECT_EQ(io::parse_model_text(R"({"masses":[1,2],"c":[3,2,1]})"), make_two_oscillator_model(1, 2, 3, 2, 1));
}

TEST(ParseModel, ReversedPairIsNormalized) {
    const OscillatorModel m = io::parse_model_text(R"({"masses":[1,1],"stiffness_diag":[1,1],"couplings":[[2,1,0.5]]})");
    EXPECT_EQ(m.coupling(0, 1), 0.5);
    EXPECT_EQ(m.couplings.begin()->first, (OscillatorPair{0, 1}));
}

TEST(ParseModel, HbarAndKinetic) {
    const OscillatorModel m = io::parse_model_text(
        R"({"hbar":0.5,"masses":[1,1],"stiffness_diag":[1,2],"kinetic":[[1,0.25],[0.25,2]]})");
    EXPECT_EQ(m.hbar, 0.5);
    ASSERT_TRUE(m.kinetic_override.has_value());
    EXPECT_EQ((*m.kinetic_override)(0, 1), 0.25);
}

TEST(ParseModel, ValidationErrors) {
    EXPECT_NE(validation_message(R"({"masses":[0,1]})").find("masses[0] must be > 0"), std::string::npos);
    EXPECT_NE(validation_message(R"({"masses":[1,1],"omegas":[1,1],"stiffness_diag":[1,1]})").find("exactly one of"),
              std::string::npos);
    EXPECT_NE(validation_message(R"({"masses":[1,1],"omegas":[1,1],"couplings":[[1,1,2]]})").find("self-coupling"),
              std::string::npos);
    EXPECT_NE(validation_message(R"({"masses":[1,1],"omegas":[1,1],"couplings":[[1,3,2]]})").find("out of range"),
              std::string::npos);
    EXPECT_NE(validation_message(R"({"masses":[1,1],"omegas":[1,1],"couplings":[[1,2,2],[2,1,1]]})")
                  .find("more than once"),
              std::string::npos);
    EXPECT_NE(validation_message(R"({"masses":[1,1],"omegas":[1,1],"kinetic":[[1]]})").find("kinetic matrix must be 2x2"),
              std::string::npos);
}

TEST(ParseModel, ParseErrors) {
    EXPECT_THROW(io::parse_model_text("{\"masses\": [1,"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1],"omegas":[1],"mass":[1]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"omegas":[1]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1,1],"omegas":[1]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1,1,1],"c":[1,1,1]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1,1],"c":[1,1,1],"couplings":[]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1,1],"omegas":[1,1],"couplings":[[0,1,1]]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1,1],"omegas":[1,1],"couplings":[[1.5,2,1]]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":[1,1],"omegas":[1,1],"kinetic":[[1,2],[3,1]]})"), ParseError);
    EXPECT_THROW(io::parse_model_text(R"({"masses":["1"],"omegas":[1]})"), ParseError);
    EXPECT_THROW(io::parse_model_file(source_path("no/such/file.json")), ParseError);
    try {
        io::parse_model_text("{\"masses\": [1,", "m.json");
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("m.json:byte"), std::string::npos) << e.what();
    }
}

TEST(ParseModel, ShippedModels) {
    EXPECT_EQ(io::parse_model_file(source_path("models/three_identical.json")), make_identical_model(3, 1, 1, 1));
    EXPECT_EQ(io::parse_model_file(source_path("models/three_identical_unbound.json")), make_identical_model(3, 1, 1, 3));
    EXPECT_EQ(io::parse_model_file(source_path("models/two_oscillators.json")), make_two_oscillator_model(1, 2, 3, 2, 1));
}

TEST(RunAnalysis, BoundIdentical) {
    const AnalysisReport r = analyze(make_identical_model(3, 1, 1, 1));
    EXPECT_EQ(exit_code(r), 0);
    EXPECT_NEAR(r.modes.lambdas[0], 0.5, 1e-12);
    EXPECT_NEAR(r.modes.lambdas[2], 2.0, 1e-12);
    EXPECT_EQ(r.levels.size(), 10u);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(RunAnalysis, UnboundCitesMinor) {
    const AnalysisReport r = analyze(make_identical_model(3, 1, 1, 3));
    EXPECT_EQ(exit_code(r), 1);
    EXPECT_FALSE(r.ground_state_energy.has_value());
    EXPECT_TRUE(r.levels.empty());
    ASSERT_FALSE(r.warnings.empty());
    EXPECT_NE(r.warnings[0].find("minor k=2"), std::string::npos) << r.warnings[0];
    EXPECT_FALSE(report_to_json(r).contains("spectrum"));
}

TEST(RunAnalysis, MarginalAndLevelsZero) {
    EXPECT_EQ(exit_code(analyze(make_two_oscillator_model(1, 1, 1, 1, 2))), 2);
    const AnalysisReport r = analyze(make_identical_model(3, 1, 1, 1), 0);
    EXPECT_EQ(exit_code(r), 0);
    EXPECT_TRUE(r.levels.empty());
    EXPECT_TRUE(report_to_json(r)["spectrum"]["levels"].empty());
}

TEST(RunAnalysis, MassNormalization) {
    AnalysisRequest req;
    req.model = make_two_oscillator_model(1, 2, 3, 2, 1);
    req.mass_norm = MassNorm::Geometric;
    const AnalysisReport r = run_analysis(req);
    ASSERT_TRUE(r.mass_normalized.has_value());
    EXPECT_NEAR(r.mass_normalized->m_ref, std::sqrt(2.0), 1e-15);
    EXPECT_TRUE(report_to_json(r)["modes"].contains("mass_normalized"));
}

TEST(Json, ReportHasContractKeys) {
    const nlohmann::json j = report_to_json(analyze(make_identical_model(3, 1, 1, 1)));
    for (const char* key : {"model", "matrices", "modes", "bound_state", "spectrum", "warnings"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["bound_state"]["verdict"], "Bound");
}

TEST(Json, ModelRoundTripIsBitExact) {
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        OscillatorModel m = tk::random_model(1 + trial % 6, rng);
        m.hbar = tk::uniform(rng, 0.1, 3.0);
        if (trial % 5 == 0)
            m.kinetic_override = tk::with_spectrum(tk::random_rotation(m.size(), rng),
                                                   std::vector<double>(m.size(), tk::uniform(rng, 0.5, 2.0)));
        const std::string text = report_to_json(analyze(m)).dump(2);
        const OscillatorModel back = io::parse_model(nlohmann::json::parse(text)["model"]);
        EXPECT_EQ(back, m);
        EXPECT_EQ(build_T(back), build_T(m));
        EXPECT_EQ(build_V(back), build_V(m));
    }
}

TEST(Golden, TextReports) {
    for (const std::string name : {"three_identical", "two_oscillators"}) {
        const std::string got = report_to_text(analyze(io::parse_model_file(source_path("models/" + name + ".json"))));
        const std::string path = source_path("tests/golden/" + name + ".txt");
        if (std::getenv("CHO_UPDATE_GOLDEN")) {
            std::ofstream(path, std::ios::binary) << got;
            continue;
        }
        EXPECT_EQ(got, slurp(path)) << "golden mismatch for " << name << "; rerun with CHO_UPDATE_GOLDEN=1 to refresh";
    }
}

TEST(Sweep, ParameterParsing) {
    EXPECT_EQ(parse_sweep_parameter("D:1,2", 3).pairs, (std::vector<OscillatorPair>{{0, 1}}));
    EXPECT_EQ(parse_sweep_parameter("D:3,1", 3).pairs, (std::vector<OscillatorPair>{{0, 2}}));
    EXPECT_EQ(parse_sweep_parameter("D:all", 3).pairs.size(), 3u);
    for (const char* bad : {"X:1,2", "D:1", "D:1,1", "D:0,2", "D:1,4", "D:1,2x"})
        EXPECT_THROW(parse_sweep_parameter(bad, 3), ParseError) << bad;
}

TEST(Sweep, SingleCouplingWindow) {
    // Two unit oscillators: bound iff |D12| < 2.
    const SweepResult r = sweep(make_identical_model(2, 1, 1, 0), parse_sweep_parameter("D:1,2", 2), -3, 3, 7);
    EXPECT_EQ(r.steps.size(), 8u);
    ASSERT_GE(r.transitions.size(), 2u);
    EXPECT_EQ(r.transitions.front().from, Verdict::Unbound);
    EXPECT_NEAR(r.transitions.front().lo, -2.0, 1e-9);
    EXPECT_EQ(r.transitions.back().to, Verdict::Unbound);
    EXPECT_NEAR(r.transitions.back().hi, 2.0, 1e-9);
    for (const auto& t : r.transitions) EXPECT_LT(t.hi - t.lo, 1e-9);
    EXPECT_THROW(sweep(make_identical_model(2, 1, 1, 0), parse_sweep_parameter("D:1,2", 2), 1, 0, 3), std::invalid_argument);
}
