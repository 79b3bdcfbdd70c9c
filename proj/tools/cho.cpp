// cho: normal modes, bound-state conditions and energy levels of coupled
// harmonic oscillators.
//
//   cho analyze <model.json> [--levels K] [--mass-norm none|geometric|<m>] [--format text|json] [--tol x]
//   cho check <model.json>
//   cho sweep <model.json> --param D:i,j|D:all --from A --to B --steps S [--format text|json]
//
// Exit status: 0 bound, 1 unbound, 2 marginal, 3 error (sweep: 0 on success).

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cho/cho.hpp"

namespace {

cho::MassNorm parse_mass_norm(const std::string& text, double& value) {
    if (text == "none") return cho::MassNorm::None;
    if (text == "geometric") return cho::MassNorm::Geometric;
    std::size_t used = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(value > 0.0))
        throw cho::ParseError("--mass-norm", "expected none, geometric or a positive mass, got '" + text + "'");
    return cho::MassNorm::Explicit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled harmonic oscillator analysis"};
    app.require_subcommand(1);

    std::string model_path;
    std::size_t levels = 10;
    std::string mass_norm = "none";
    std::string format = "text";
    double tol = cho::linalg::kDefaultJacobiTol;

    auto* analyze = app.add_subcommand("analyze", "Diagonalize, classify and list energy levels");
    analyze->add_option("model", model_path, "Model JSON file")->required();
    analyze->add_option("--levels", levels, "Number of energy levels to list (0 for none)")->check(CLI::Range(0, 100000));
    analyze->add_option("--mass-norm", mass_norm, "Mass-normalized transformation: none, geometric or a reference mass");
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--tol", tol, "Jacobi convergence tolerance")->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "Print the bound-state verdict only");
    check->add_option("model", model_path, "Model JSON file")->required();

    std::string param;
    double from = 0.0, to = 0.0, bracket = 5e-10;
    std::size_t steps = 0;
    auto* sweep = app.add_subcommand("sweep", "Vary couplings and locate verdict changes");
    sweep->add_option("model", model_path, "Model JSON file")->required();
    sweep->add_option("--param", param, "Coupling to vary: D:i,j (1-based) or D:all")->required();
    sweep->add_option("--from", from, "Start value")->required();
    sweep->add_option("--to", to, "End value")->required();
    sweep->add_option("--steps", steps, "Number of increments between --from and --to")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--bracket", bracket, "Bisection stops below this bracket width")->check(CLI::PositiveNumber);
    sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sweep->add_option("--tol", tol, "Jacobi convergence tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cho::kExitError;
    }

    try {
        const cho::OscillatorModel model = cho::io::parse_model_file(model_path);

        if (*check) {
            const cho::BoundStateReport b = cho::classify(model);
            std::cout << cho::to_string(b.verdict) << "\n";
            return cho::exit_code(b.verdict);
        }

        if (*sweep) {
            const cho::SweepParameter p = cho::parse_sweep_parameter(param, model.size());
            const cho::SweepResult r = cho::sweep(model, p, from, to, steps, bracket, tol);
            if (format == "json")
                std::cout << cho::sweep_to_json(p, r).dump(2) << "\n";
            else
                std::cout << cho::sweep_to_text(p, r);
            return 0;
        }

        cho::AnalysisRequest req;
        req.model = model;
        req.levels = levels;
        req.mass_norm = parse_mass_norm(mass_norm, req.explicit_mass);
        req.output_format = format == "json" ? cho::OutputFormat::Json : cho::OutputFormat::Text;
        if (tol != cho::linalg::kDefaultJacobiTol) req.tolerance_override = tol;

        const cho::AnalysisReport report = cho::run_analysis(req);
        if (req.output_format == cho::OutputFormat::Json)
            std::cout << cho::report_to_json(report).dump(2) << "\n";
        else
            std::cout << cho::report_to_text(report);
        return cho::exit_code(report);
    } catch (const std::exception& e) {
        std::cerr << "cho: " << e.what() << "\n";
        return cho::kExitError;
    }
}
