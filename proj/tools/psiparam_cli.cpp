// psiparam: command-line front end for the wave-function parametrization
// library. Subcommands read JSON (file, inline, or stdin) and write JSON or
// CSV, so the tool composes with scripts and plotting pipelines.
//
// Exit codes: 0 success, 2 usage error, 3 validation error, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psiparam/density.hpp"
#include "psiparam/error.hpp"
#include "psiparam/functional.hpp"
#include "psiparam/json_io.hpp"
#include "psiparam/paths.hpp"
#include "psiparam/sphere.hpp"
#include "psiparam/transform.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Validation tolerance for the CLI's own output checks; construction
// tolerances inside the library are not affected.
double display_tolerance() {
    if (const char* env = std::getenv("PSIPARAM_TOLERANCE")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-12;
}

// --input accepts a path, "-" for stdin, or inline JSON (starts with '{').
nlohmann::json read_input(const std::string& input) {
    std::string text;
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (!input.empty() && input.front() == '{') {
        text = input;
    } else {
        std::ifstream file(input);
        if (!file) throw IoError("cannot open input file: " + input);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw psiparam::ValidationError(std::string("JSON parse error: ") + e.what());
    }
}

void write_output(const std::string& output, const std::string& text) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + output);
    file << text;
    if (!file) throw IoError("write failed: " + output);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_encode(const std::string& input, const std::string& output) {
    const psiparam::ProbDist dist = psiparam::prob_dist_from_json(read_input(input));
    const psiparam::EulerAngles angles = psiparam::encode(dist);
    const psiparam::WaveFunction psi = psiparam::sqrt_encode(dist);

    const psiparam::ProbDist back = psiparam::born_decode(psi);
    const double tol = display_tolerance();
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (std::abs(back.values()[i] - dist.values()[i]) > tol)
            throw psiparam::ValidationError("encode: round-trip check failed");

    nlohmann::json out = psiparam::to_json(psi);
    out["theta"] = psiparam::to_json(angles)["theta"];
    write_output(output, out.dump() + "\n");
    return 0;
}

int run_decode(const std::string& input, const std::string& output) {
    const psiparam::AnyWaveFunction psi = psiparam::wavefunction_from_json(read_input(input));
    const psiparam::ProbDist dist = psiparam::born_decode_any(psi);
    write_output(output, psiparam::to_json(dist).dump() + "\n");
    return 0;
}

int run_clock(double t_start, double t_end, std::size_t samples, const std::string& output) {
    if (samples < 2 || !(t_end > t_start))
        throw CLI::ValidationError("clock", "need samples >= 2 and t-end > t-start");
    const double tol = display_tolerance();
    std::string csv = "t,p1,p2,psi1,psi2\n";
    for (std::size_t k = 0; k < samples; ++k) {
        const double t =
            t_start + (t_end - t_start) * static_cast<double>(k) / static_cast<double>(samples - 1);
        const psiparam::WaveFunction psi = psiparam::apply_to_wavefunction(
            psiparam::clock_rotation(t), psiparam::WaveFunction({1.0, 0.0}));
        const psiparam::ProbDist p = psiparam::born_decode(psi);
        if (std::abs(p.values()[0] - std::cos(t) * std::cos(t)) > tol ||
            std::abs(p.values()[1] - std::sin(t) * std::sin(t)) > tol)
            throw psiparam::ValidationError("clock: row deviates from cos^2/sin^2");
        csv += format_number(t) + "," + format_number(p.values()[0]) + "," +
               format_number(p.values()[1]) + "," + format_number(psi[0]) + "," +
               format_number(psi[1]) + "\n";
    }
    write_output(output, csv);
    return 0;
}

int run_collapse(const std::string& input, const std::string& output) {
    const psiparam::DensityMatrix rho(psiparam::matrix_from_json(read_input(input)));
    const psiparam::DensityMatrix collapsed = psiparam::collapse(rho);
    write_output(output, psiparam::to_json(collapsed.matrix()).dump() + "\n");
    return 0;
}

int run_check_det(const std::string& input, const std::string& output) {
    const psiparam::OrthogonalTransform u(psiparam::matrix_from_json(read_input(input)));
    const psiparam::DeterminismVerdict verdict = psiparam::is_deterministic(u);
    nlohmann::json out;
    out["deterministic"] = verdict.deterministic;
    out["witness"] = verdict.witness ? nlohmann::json(*verdict.witness) : nlohmann::json();
    write_output(output, out.dump() + "\n");
    return 0;
}

int run_gleason(double target_a, double target_b, std::size_t grid, const std::string& output) {
    const psiparam::GleasonSearchResult result =
        psiparam::gleason_pure_search(target_a, target_b, grid);
    nlohmann::json out;
    out["theta_best"] = result.theta_best;
    out["residual"] = result.residual;
    write_output(output, out.dump() + "\n");
    return 0;
}

int run_walk(std::size_t steps, std::vector<double> q, const std::string& output) {
    if (q.empty()) q.assign(steps, 0.5);
    if (q.size() == 1 && steps > 1) q.assign(steps, q.front());
    if (q.size() != steps)
        throw CLI::ValidationError("walk", "--q must give one probability per step");
    const psiparam::WalkSpec spec(std::move(q));
    const psiparam::PathDistribution paths = psiparam::enumerate_paths(spec);
    write_output(output, psiparam::to_json(paths).dump() + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wave-function parametrization toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;

    auto add_io = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("--input,-i", input, "input path, '-' for stdin, or inline JSON");
        cmd->add_option("--output,-o", output, "output path; stdout when omitted");
    };

    CLI::App* encode = app.add_subcommand("encode", "distribution -> angles + wave-function");
    add_io(encode);
    CLI::App* decode = app.add_subcommand("decode", "wave-function -> Born distribution");
    add_io(decode);

    CLI::App* clock = app.add_subcommand("clock", "sample the 2-state probability clock as CSV");
    double t_start = 0.0, t_end = 6.283185307179586;
    std::size_t samples = 64;
    clock->add_option("--t-start", t_start, "first sample time");
    clock->add_option("--t-end", t_end, "last sample time");
    clock->add_option("--samples", samples, "number of rows (>= 2)");
    add_io(clock, false);

    CLI::App* collapse = app.add_subcommand("collapse", "zero off-diagonals of a density matrix");
    add_io(collapse);
    CLI::App* check_det = app.add_subcommand("check-det",
                                             "classify an orthogonal matrix as deterministic");
    add_io(check_det);

    CLI::App* gleason = app.add_subcommand("gleason", "scan pure states against two trace targets");
    double target_a = 0.5, target_b = 0.5;
    std::size_t grid = 100000;
    gleason->add_option("--target-a", target_a, "target for Tr(rho diag(1,0))");
    gleason->add_option("--target-b", target_b, "target for Tr(rho P+)");
    gleason->add_option("--grid", grid, "grid resolution (>= 1000)");
    add_io(gleason, false);

    CLI::App* walk = app.add_subcommand("walk", "complete-path distribution of a random walk");
    std::size_t steps = 1;
    std::vector<double> q;
    walk->add_option("--steps", steps, "number of steps")->required();
    walk->add_option("--q", q, "per-step up probability (single value broadcasts)");
    add_io(walk, false);

    try {
        app.parse(argc, argv);
        if (encode->parsed()) return run_encode(input, output);
        if (decode->parsed()) return run_decode(input, output);
        if (clock->parsed()) return run_clock(t_start, t_end, samples, output);
        if (collapse->parsed()) return run_collapse(input, output);
        if (check_det->parsed()) return run_check_det(input, output);
        if (gleason->parsed()) return run_gleason(target_a, target_b, grid, output);
        if (walk->parsed()) return run_walk(steps, q, output);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const psiparam::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
