#include "tridyn/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace tridyn {

namespace {

std::string fmt(const char* format, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, x);
    return buf;
}

}  // namespace

std::string fmt17(double x) { return fmt("%.17g", x); }

std::string map_id_str(MapId id) {
    switch (id) {
        case MapId::f: return "f";
        case MapId::g: return "g";
        case MapId::h: return "h";
    }
    return "?";
}

std::string limit_id_str(LimitId id) {
    switch (id) {
        case LimitId::equilateral: return "equilateral";
        case LimitId::degenerate_triangle: return "degenerate_triangle";
        case LimitId::degenerate_quadrangle: return "degenerate_quadrangle";
        case LimitId::none: return "none";
    }
    return "?";
}

std::string stability_str(Stability s) {
    switch (s) {
        case Stability::attracting: return "attracting";
        case Stability::repelling: return "repelling";
        case Stability::neutral: return "neutral";
    }
    return "?";
}

std::string orbit_to_csv(const Orbit& orbit) {
    std::string out;
    bool pair = orbit.map_id == MapId::h;
    out += pair ? "iter,alpha,beta\n" : "iter,a,b,c\n";
    for (std::size_t k = 0; k < orbit.states.size(); ++k) {
        const auto& s = orbit.states[k];
        out += std::to_string(k);
        out += ',';
        out += fmt17(s[0]);
        out += ',';
        out += fmt17(s[1]);
        if (!pair) {
            out += ',';
            out += fmt17(s[2]);
        }
        out += '\n';
    }
    return out;
}

std::string curve_to_csv(const CurveSeries& series) {
    std::string out = "# name=" + curve_name_str(series.name) + "\n";
    out += "t,value\n";
    for (const auto& s : series.samples) {
        out += fmt17(s[0]);
        out += ',';
        out += fmt17(s[1]);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json orbit_to_json(const Orbit& orbit,
                                     std::size_t max_iters, double tol) {
    nlohmann::ordered_json j;
    j["map"] = map_id_str(orbit.map_id);
    j["converged"] = orbit.converged;
    j["limit"] = limit_id_str(orbit.limit_id);
    j["iterations_used"] = orbit.iterations_used;
    j["max_iters"] = max_iters;
    j["tol"] = tol;
    auto states = nlohmann::ordered_json::array();
    bool pair = orbit.map_id == MapId::h;
    for (const auto& s : orbit.states) {
        if (pair) {
            states.push_back({s[0], s[1]});
        } else {
            states.push_back({s[0], s[1], s[2]});
        }
    }
    j["states"] = std::move(states);
    return j;
}

nlohmann::ordered_json stability_to_json(const StabilityReport& report) {
    nlohmann::ordered_json j;
    j["map"] = map_id_str(report.map_id);
    if (report.map_id == MapId::h) {
        j["fixed_point"] = {report.fixed_point[0], report.fixed_point[1]};
    } else {
        j["fixed_point"] = {report.fixed_point[0], report.fixed_point[1],
                            report.fixed_point[2]};
    }
    j["jacobian"] = {{report.jacobian[0][0], report.jacobian[0][1]},
                     {report.jacobian[1][0], report.jacobian[1][1]}};
    auto eigs = nlohmann::ordered_json::array();
    for (const auto& ev : report.eigenvalues) {
        eigs.push_back({{"re", ev.real()}, {"im", ev.imag()}});
    }
    j["eigenvalues"] = std::move(eigs);
    j["spectral_radius"] = report.spectral_radius;
    j["classification"] = stability_str(report.classification);
    return j;
}

std::vector<std::vector<double>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_skipped) {
            // One header line of column names is expected and skipped.
            header_skipped = true;
            if (line.find_first_not_of("0123456789+-.eE, \t\r") !=
                std::string::npos) {
                continue;
            }
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IOError("unparseable CSV cell: " + cell);
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

std::string emit_svg(const std::vector<CurveSeries>& series, bool diagonal) {
    if (series.empty() || series.size() > 2) {
        throw IOError("emit_svg expects one or two curve series");
    }
    for (const auto& s : series) {
        if (s.samples.size() < 2) {
            throw IOError("curve series needs at least two samples");
        }
    }
    double t0 = series[0].samples.front()[0];
    double t1 = series[0].samples.back()[0];
    for (const auto& s : series) {
        if (std::fabs(s.samples.front()[0] - t0) > 1e-12 ||
            std::fabs(s.samples.back()[0] - t1) > 1e-12) {
            throw IOError("curve series t-ranges disagree");
        }
    }
    if (!(t1 > t0)) throw IOError("degenerate t-range");

    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -ymin;
    for (const auto& s : series) {
        for (const auto& p : s.samples) {
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    }
    if (diagonal) {
        ymin = std::min(ymin, t0);
        ymax = std::max(ymax, t1);
    }
    if (ymax - ymin < 1e-15) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    // Fixed 800x600 viewport with a left/bottom axis frame.
    const double px0 = 70.0, px1 = 780.0, py0 = 550.0, py1 = 20.0;
    auto X = [&](double t) {
        return px0 + (t - t0) / (t1 - t0) * (px1 - px0);
    };
    auto Y = [&](double v) {
        return py0 + (v - ymin) / (ymax - ymin) * (py1 - py0);
    };
    auto coord = [&](double v) { return fmt("%.2f", v); };

    std::string svg;
    svg +=
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
        "height=\"600\" viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
           "fill=\"#ffffff\"/>\n";
    svg += "<line x1=\"" + coord(px0) + "\" y1=\"" + coord(py0) + "\" x2=\"" +
           coord(px1) + "\" y2=\"" + coord(py0) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + coord(px0) + "\" y1=\"" + coord(py0) + "\" x2=\"" +
           coord(px0) + "\" y2=\"" + coord(py1) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    // Endpoint tick labels.
    svg += "<text x=\"" + coord(px0) + "\" y=\"570\" font-family=\"monospace\" "
           "font-size=\"12\" text-anchor=\"middle\">" +
           fmt("%.6g", t0) + "</text>\n";
    svg += "<text x=\"" + coord(px1) + "\" y=\"570\" font-family=\"monospace\" "
           "font-size=\"12\" text-anchor=\"middle\">" +
           fmt("%.6g", t1) + "</text>\n";
    svg += "<text x=\"62\" y=\"" + coord(Y(ymin) + 4.0) +
           "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"end\">" +
           fmt("%.6g", ymin) + "</text>\n";
    svg += "<text x=\"62\" y=\"" + coord(Y(ymax) + 4.0) +
           "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"end\">" +
           fmt("%.6g", ymax) + "</text>\n";

    if (diagonal) {
        svg += "<polyline fill=\"none\" stroke=\"#555555\" "
               "stroke-width=\"1\" stroke-dasharray=\"6,4\" points=\"" +
               coord(X(t0)) + "," + coord(Y(t0)) + " " + coord(X(t1)) + "," +
               coord(Y(t1)) + "\"/>\n";
    }

    const char* strokes[2] = {"#1a1a1a", "#888888"};
    for (std::size_t i = 0; i < series.size(); ++i) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += strokes[i];
        svg += "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& p : series[i].samples) {
            if (!first) svg += ' ';
            first = false;
            svg += coord(X(p[0]));
            svg += ',';
            svg += coord(Y(p[1]));
        }
        svg += "\"/>\n";
        // Series label in the top-right corner.
        svg += "<text x=\"770\" y=\"" +
               coord(py1 + 16.0 + 16.0 * static_cast<double>(i)) +
               "\" font-family=\"monospace\" font-size=\"12\" "
               "text-anchor=\"end\" fill=\"";
        svg += strokes[i];
        svg += "\">";
        svg += curve_name_str(series[i].name);
        svg += "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IOError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace tridyn
