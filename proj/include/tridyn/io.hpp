#pragma once

// Deterministic serialization: CSV and JSON for orbits, curves, and
// stability reports, plus a self-contained SVG plotter for curve series.
// All floating-point output uses 17 significant digits (or JSON shortest
// round-trip), so parse(emit(x)) == x exactly.

#include <string>
#include <vector>

#include "json.hpp"
#include "tridyn/barycentric.hpp"
#include "tridyn/dynamics.hpp"

namespace tridyn {

// %.17g rendering — round-trips any finite double exactly.
std::string fmt17(double x);

std::string map_id_str(MapId id);
std::string limit_id_str(LimitId id);
std::string stability_str(Stability s);

// Orbit rows: header `iter,a,b,c` (triples) or `iter,alpha,beta` (pairs),
// one row per recorded state starting at iteration 0.
std::string orbit_to_csv(const Orbit& orbit);

// Curve rows: `# name=<curve>` comment, `t,value` header, one row per
// sample.
std::string curve_to_csv(const CurveSeries& series);

nlohmann::ordered_json orbit_to_json(const Orbit& orbit, std::size_t max_iters,
                                     double tol);
nlohmann::ordered_json stability_to_json(const StabilityReport& report);

// Numeric CSV payload reader: skips `#` comments and one header line,
// splits the rest on commas.  Used for round-trip checks.
std::vector<std::vector<double>> parse_csv_rows(const std::string& text);

// Standalone 800x600 SVG with axes, endpoint tick labels, one solid
// polyline per series (at most two), and optionally the dashed diagonal
// reference line y = t.  Byte-identical for identical inputs.  Throws
// IOError for empty input, series with fewer than two samples, or series
// whose t-ranges disagree.
std::string emit_svg(const std::vector<CurveSeries>& series, bool diagonal);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace tridyn
