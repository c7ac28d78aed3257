#include "tridyn/cli.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tridyn/barycentric.hpp"
#include "tridyn/dynamics.hpp"
#include "tridyn/io.hpp"
#include "tridyn/maps.hpp"
#include "tridyn/quadrangle.hpp"
#include "tridyn/verify.hpp"

namespace tridyn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> parse_angle_list(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            vals.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw OutOfRange("cannot parse angle value: " + item);
        }
    }
    if (vals.size() != 3) {
        throw OutOfRange("--angles expects exactly three comma-separated "
                         "values");
    }
    return vals;
}

// Inputs typed at the prompt are often rounded to a few decimals; rescale
// onto the exact constraint surface when the sum is off by at most 1e-3.
std::array<double, 3> renormalize_cli(const std::vector<double>& v,
                                      double target) {
    std::array<double, 3> a = {v[0], v[1], v[2]};
    double sum = a[0] + a[1] + a[2];
    if (std::fabs(sum - target) <= 1e-3 && sum != 0.0) {
        for (double& x : a) x = x * (target / sum);
    }
    return a;
}

void emit_payload(const std::string& payload, const std::string& out_path,
                  std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
    } else {
        write_text_file(out_path, payload);
    }
}

double display_angle(double radians, bool degrees) {
    return degrees ? radians * (180.0 / kPi) : radians;
}

std::string orbit_table(const Orbit& orbit, bool degrees) {
    std::ostringstream os;
    bool pair = orbit.map_id == MapId::h;
    os << (pair ? "iter        alpha            beta\n"
                : "iter        a                b                c\n");
    char buf[64];
    for (std::size_t k = 0; k < orbit.states.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%-6zu", k);
        os << buf;
        int ncols = pair ? 2 : 3;
        for (int c = 0; c < ncols; ++c) {
            std::snprintf(buf, sizeof buf, "  %-15.10g",
                          display_angle(orbit.states[k][c], degrees));
            os << buf;
        }
        os << '\n';
    }
    os << "converged: " << (orbit.converged ? "yes" : "no")
       << "  limit: " << limit_id_str(orbit.limit_id)
       << "  iterations: " << orbit.iterations_used << '\n';
    return os.str();
}

std::string orbit_payload(const Orbit& orbit, const RunConfig& cfg) {
    if (cfg.format == "csv") return orbit_to_csv(orbit);
    if (cfg.format == "json") {
        return orbit_to_json(orbit, cfg.max_iters, cfg.tol).dump(2) + "\n";
    }
    return orbit_table(orbit, cfg.degrees);
}

int cmd_iterate(const RunConfig& cfg, std::ostream& out) {
    double input_target = cfg.exterior ? kTwoPi : kPi;
    std::array<double, 3> a = renormalize_cli(cfg.angles, input_target);

    Orbit orbit;
    double tol;
    if (cfg.map == "f") {
        tol = cfg.tol > 0.0 ? cfg.tol : kDefaultTolF;
        InteriorTriple start =
            cfg.exterior ? exterior_to_interior(ExteriorTriple(a))
                         : InteriorTriple(a);
        orbit = iterate(start, cfg.max_iters, tol);
    } else {
        tol = cfg.tol > 0.0 ? cfg.tol : kDefaultTolG;
        ExteriorTriple start =
            cfg.exterior ? ExteriorTriple(a)
                         : interior_to_exterior(InteriorTriple(a));
        orbit = iterate(start, cfg.max_iters, tol);
    }
    RunConfig shown = cfg;
    shown.tol = tol;
    emit_payload(orbit_payload(orbit, shown), cfg.output_path, out);
    return 0;
}

int cmd_quad_iterate(const RunConfig& cfg, std::ostream& out) {
    double tol = cfg.tol > 0.0 ? cfg.tol : kDefaultTolH;
    Orbit orbit = iterate(ICQuadrangle(cfg.alpha, cfg.beta), cfg.max_iters,
                          tol);
    RunConfig shown = cfg;
    shown.tol = tol;
    emit_payload(orbit_payload(orbit, shown), cfg.output_path, out);
    return 0;
}

int cmd_fixed_point(const RunConfig& cfg, std::ostream& out) {
    StabilityReport rep;
    if (cfg.map == "f") {
        rep = classify_fixed_point(
            InteriorTriple(kPi / 3.0, kPi / 3.0, kPi / 3.0));
    } else if (cfg.map == "g") {
        rep = classify_fixed_point(ExteriorTriple(
            kTwoPi / 3.0, kTwoPi / 3.0, kTwoPi / 3.0));
    } else {
        rep = classify_fixed_point(ICQuadrangle(kPi / 2.0, kPi / 2.0));
    }
    emit_payload(stability_to_json(rep).dump(2) + "\n", cfg.output_path,
                 out);
    return 0;
}

struct CurveDomain {
    double lo;
    double hi;
    bool open_lo;
};

CurveDomain curve_domain(CurveName name) {
    switch (name) {
        case CurveName::GG:
            return {0.0, 2.0 * kPi / 3.0, false};
        case CurveName::U_first:
        case CurveName::W_first:
            return {0.0, kPi / 2.0, true};
        default:
            return {kPi / 2.0, 2.0 * kPi / 3.0, true};
    }
}

CurveName curve_from_token(std::string token) {
    for (char& c : token) c = static_cast<char>(std::tolower(c));
    if (token == "gg") return CurveName::GG;
    if (token == "u") return CurveName::U_first;
    if (token == "w") return CurveName::W_first;
    if (token == "x") return CurveName::X_first;
    if (token == "z") return CurveName::Z_first;
    throw OutOfRange("unknown curve name: " + token +
                     " (expected gg, u, w, x or z)");
}

int cmd_curve(const std::string& names_arg, double from, double to,
              int samples, bool diagonal, const std::string& out_path,
              std::ostream& out) {
    std::vector<CurveName> names;
    std::stringstream ss(names_arg);
    std::string token;
    while (std::getline(ss, token, ',')) {
        names.push_back(curve_from_token(token));
    }
    if (names.empty() || names.size() > 2) {
        throw OutOfRange("--name expects one curve or a pair like u,w");
    }

    // Clamp typed-in bounds that round a hair outside the domain; nudge
    // open endpoints inward.
    double t0 = from;
    double t1 = to;
    for (CurveName n : names) {
        CurveDomain dom = curve_domain(n);
        if (t0 < dom.lo && dom.lo - t0 <= 1e-3) t0 = dom.lo;
        if (t1 > dom.hi && t1 - dom.hi <= 1e-3) t1 = dom.hi;
        if (dom.open_lo && t0 <= dom.lo) t0 = dom.lo + 1e-9;
    }

    std::vector<CurveSeries> series;
    series.reserve(names.size());
    for (CurveName n : names) {
        series.push_back(sample_curve(n, t0, t1, samples));
    }

    bool svg = out_path.size() > 4 &&
               out_path.substr(out_path.size() - 4) == ".svg";
    if (svg) {
        write_text_file(out_path, emit_svg(series, diagonal));
        return 0;
    }
    std::string payload;
    for (const auto& s : series) payload += curve_to_csv(s);
    emit_payload(payload, out_path, out);
    return 0;
}

int cmd_invert(const RunConfig& cfg, double tol, int max_steps,
               std::ostream& out) {
    if (cfg.map != "g") {
        throw OutOfRange("only the exterior-angle map is invertible; use "
                         "--map g");
    }
    std::array<double, 3> a = renormalize_cli(cfg.angles, kTwoPi);
    ExteriorTriple target(a);
    ExteriorTriple pre = invert_g(target, tol, max_steps);
    ExteriorTriple check = map_g(pre);
    double residual = quotient_distance(check, target);
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["map"] = "g";
        j["target"] = {target[0], target[1], target[2]};
        j["preimage"] = {pre[0], pre[1], pre[2]};
        j["residual"] = residual;
        emit_payload(j.dump(2) + "\n", cfg.output_path, out);
    } else if (cfg.format == "csv") {
        std::string payload = "a,b,c\n" + fmt17(pre[0]) + "," +
                              fmt17(pre[1]) + "," + fmt17(pre[2]) + "\n";
        emit_payload(payload, cfg.output_path, out);
    } else {
        std::ostringstream os;
        os << "preimage: (" << fmt17(pre[0]) << ", " << fmt17(pre[1]) << ", "
           << fmt17(pre[2]) << ")\n"
           << "residual: " << fmt17(residual) << "\n";
        emit_payload(os.str(), cfg.output_path, out);
    }
    return 0;
}

int cmd_verify(const std::string& suite, int samples, std::uint64_t seed,
               std::ostream& out) {
    auto results = verify::run_suite(suite, samples, seed);
    out << verify::format_results(results);
    return verify::all_passed(results) ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"triangle and quadrangle angle-map dynamics"};
    app.require_subcommand(1);

    RunConfig cfg;

    // iterate
    auto* it_cmd = app.add_subcommand(
        "iterate", "iterate one of the triangle maps from a start triple");
    std::string angles_arg;
    it_cmd->add_option("--map", cfg.map, "map to iterate: f or g")
        ->required()
        ->check(CLI::IsMember({"f", "g"}));
    it_cmd->add_option("--angles", angles_arg,
                       "start angles A,B,C in radians")
        ->required();
    it_cmd->add_flag("--exterior", cfg.exterior,
                     "angles are exterior (sum 2*pi) rather than interior");
    it_cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
    it_cmd->add_option("--tol", cfg.tol, "convergence tolerance");
    it_cmd->add_option("--format", cfg.format, "csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    it_cmd->add_option("--out", cfg.output_path, "write output to file");
    it_cmd->add_flag("--degrees", cfg.degrees,
                     "display table angles in degrees");

    // quad iterate
    auto* quad_cmd = app.add_subcommand("quad", "quadrangle map commands");
    quad_cmd->require_subcommand(1);
    auto* qit_cmd = quad_cmd->add_subcommand(
        "iterate", "iterate the quadrangle map from an obtuse pair");
    qit_cmd->add_option("--alpha", cfg.alpha, "largest obtuse angle")
        ->required();
    qit_cmd->add_option("--beta", cfg.beta, "second obtuse angle")
        ->required();
    qit_cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
    qit_cmd->add_option("--tol", cfg.tol, "convergence tolerance");
    qit_cmd->add_option("--format", cfg.format, "csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    qit_cmd->add_option("--out", cfg.output_path, "write output to file");
    qit_cmd->add_flag("--degrees", cfg.degrees,
                      "display table angles in degrees");

    // fixed-point
    auto* fp_cmd = app.add_subcommand(
        "fixed-point", "stability report at the map's symmetric fixed point");
    fp_cmd->add_option("--map", cfg.map, "f, g or h")
        ->required()
        ->check(CLI::IsMember({"f", "g", "h"}));
    fp_cmd->add_option("--out", cfg.output_path, "write output to file");

    // curve
    auto* cv_cmd = app.add_subcommand(
        "curve", "sample a named curve (gg, u, w, x, z) to CSV or SVG");
    std::string curve_names;
    double cv_from = 0.0, cv_to = 0.0;
    int cv_samples = 0;
    bool cv_diagonal = false;
    cv_cmd->add_option("--name", curve_names,
                       "curve name, or two names like u,w")
        ->required();
    cv_cmd->add_option("--from", cv_from, "range start")->required();
    cv_cmd->add_option("--to", cv_to, "range end")->required();
    cv_cmd->add_option("--samples", cv_samples, "number of samples (>= 2)")
        ->required();
    cv_cmd->add_option("--out", cfg.output_path,
                       "output file; .svg renders a plot, otherwise CSV");
    cv_cmd->add_flag("--diagonal", cv_diagonal,
                     "include the dashed y = t reference line");

    // invert
    auto* inv_cmd = app.add_subcommand(
        "invert", "preimage of an exterior triple under the g map");
    double inv_tol = 1e-10;
    int inv_steps = 100;
    inv_cmd->add_option("--map", cfg.map, "must be g")->required();
    inv_cmd->add_option("--angles", angles_arg,
                        "target exterior angles A,B,C")
        ->required();
    inv_cmd->add_option("--tol", inv_tol, "residual tolerance");
    inv_cmd->add_option("--max-steps", inv_steps, "Newton step cap");
    inv_cmd->add_option("--format", cfg.format, "csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    inv_cmd->add_option("--out", cfg.output_path, "write output to file");

    // verify
    auto* vf_cmd = app.add_subcommand(
        "verify", "run the numerical verification suites");
    std::string suite = "all";
    vf_cmd->add_option("--suite", suite,
                       "all, lemmas, regions, quad or orbits")
        ->check(CLI::IsMember({"all", "lemmas", "regions", "quad",
                               "orbits"}));
    vf_cmd->add_option("--samples", cfg.samples, "sample count for "
                                                 "randomized checks")
        ->check(CLI::PositiveNumber);
    vf_cmd->add_option("--seed", cfg.seed, "sampling seed");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tridyn");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help to stdout (exit 0) and errors to stderr.
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (it_cmd->parsed()) {
            cfg.angles = parse_angle_list(angles_arg);
            return cmd_iterate(cfg, out);
        }
        if (quad_cmd->parsed() && qit_cmd->parsed()) {
            return cmd_quad_iterate(cfg, out);
        }
        if (fp_cmd->parsed()) {
            return cmd_fixed_point(cfg, out);
        }
        if (cv_cmd->parsed()) {
            return cmd_curve(curve_names, cv_from, cv_to, cv_samples,
                             cv_diagonal, cfg.output_path, out);
        }
        if (inv_cmd->parsed()) {
            cfg.angles = parse_angle_list(angles_arg);
            return cmd_invert(cfg, inv_tol, inv_steps, out);
        }
        if (vf_cmd->parsed()) {
            return cmd_verify(suite, cfg.samples, cfg.seed, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand executed\n";
    return 1;
}

}  // namespace tridyn
