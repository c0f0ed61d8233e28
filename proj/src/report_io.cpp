// Copyright 2026 The corona-lab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corona/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "corona/error.hpp"

namespace corona {

const char* direction_name(Direction d) { return d == Direction::kRight ? "RIGHT" : "LEFT"; }

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "svg") return OutputFormat::kSvg;
  throw Error(ErrorCode::kUnsupportedFormat, "unknown format: " + name);
}

nlohmann::ordered_json num_to_json(const Num& n) {
  if (n.is_exact()) return to_string(n.rational());
  return n.as_double();
}

Num num_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw Error(ErrorCode::kInvalidArgument, "bad rational literal in report");
    return Num(*r);
  }
  if (j.is_number()) return Num(j.get<double>());
  throw Error(ErrorCode::kInvalidArgument, "bad numeric value in report");
}

nlohmann::ordered_json interval_to_json(const CertifiedInterval& iv) {
  nlohmann::ordered_json j;
  j["lower"] = num_to_json(iv.lower);
  j["upper"] = num_to_json(iv.upper);
  j["lower_kind"] = bound_kind_name(iv.lower_kind);
  j["upper_kind"] = bound_kind_name(iv.upper_kind);
  return j;
}

nlohmann::ordered_json point_to_json(const Point& p) {
  if (const auto* pp = std::get_if<PlanarPoint>(&p)) {
    return nlohmann::ordered_json::array({pp->x, pp->y});
  }
  if (const auto* r = std::get_if<Rational>(&p)) return to_string(*r);
  if (const auto* s = std::get_if<SparseSeq>(&p)) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [idx, val] : s->entries()) j[std::to_string(idx)] = to_string(val);
    return j;
  }
  if (const auto* f = std::get_if<PLFunction>(&p)) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& bp : f->breakpoints()) {
      j.push_back(nlohmann::ordered_json::array({to_string(bp.first), to_string(bp.second)}));
    }
    return j;
  }
  return std::get<Label>(p).value;
}

nlohmann::ordered_json finite_set_to_json(const FiniteSet& s) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point& p : s.points) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  j["covering_radius"] = s.covering_radius ? num_to_json(*s.covering_radius)
                                           : nlohmann::ordered_json("UNCERTIFIED");
  return j;
}

nlohmann::ordered_json probe_report_to_json(const ProbeReport& report) {
  nlohmann::ordered_json j;
  j["probe"] = report.probe;
  j["space"] = report.space;
  j["params"] = report.params;
  j["rows"] = report.rows;
  j["verdict"] = report.verdict;
  j["gap"] = report.gap ? num_to_json(*report.gap) : nlohmann::ordered_json(nullptr);
  j["seed"] = report.seed;
  return j;
}

ProbeReport probe_report_from_json(const nlohmann::ordered_json& j) {
  ProbeReport report;
  report.probe = j.at("probe").get<std::string>();
  report.space = j.at("space").get<std::string>();
  report.params = j.at("params");
  for (const auto& row : j.at("rows")) report.rows.push_back(row);
  report.verdict = j.at("verdict").get<std::string>();
  if (!j.at("gap").is_null()) report.gap = num_from_json(j.at("gap"));
  report.seed = j.at("seed").get<uint64_t>();
  return report;
}

bool probe_reports_equal(const ProbeReport& a, const ProbeReport& b) {
  return probe_report_to_json(a) == probe_report_to_json(b);
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
  return s;
}

std::string emit_csv(const ProbeReport& report) {
  std::ostringstream out;
  if (report.rows.empty()) return "";
  std::vector<std::string> keys;
  for (auto it = report.rows.front().begin(); it != report.rows.front().end(); ++it) {
    keys.push_back(it.key());
  }
  for (size_t i = 0; i < keys.size(); ++i) {
    if (i) out << ',';
    out << keys[i];
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (size_t i = 0; i < keys.size(); ++i) {
      if (i) out << ',';
      if (row.contains(keys[i])) out << csv_cell(row.at(keys[i]));
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_svg(const ProbeReport& report) {
  if (report.series.empty()) {
    throw Error(ErrorCode::kUnsupportedFormat, "report has no scalar series to plot");
  }
  const double width = 640, height = 420;
  const double ml = 70, mr = 20, mt = 30, mb = 50;
  double xmin = report.series.front().first, xmax = xmin;
  double ymin = report.series.front().second, ymax = ymin;
  for (const auto& [x, y] : report.series) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
  auto sy = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
      << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << height - mb << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">" << report.series_x_label << "</text>\n";
  out << "  <text x=\"18\" y=\"" << (mt + height - mb) / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
      << (mt + height - mb) / 2 << ")\">" << report.series_y_label << "</text>\n";
  out << "  <text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << report.probe << " / " << report.space << "</text>\n";
  if (report.series.size() > 1) {
    out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : report.series) out << format_double(sx(x)) << ","
                                                 << format_double(sy(y)) << " ";
    out << "\"/>\n";
  }
  for (const auto& [x, y] : report.series) {
    out << "  <circle cx=\"" << format_double(sx(x)) << "\" cy=\"" << format_double(sy(y))
        << "\" r=\"3.5\" fill=\"firebrick\"/>\n";
  }
  for (double fx : {xmin, xmax}) {
    out << "  <text x=\"" << format_double(sx(fx)) << "\" y=\"" << height - mb + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(fx) << "</text>\n";
  }
  for (double fy : {ymin, ymax}) {
    out << "  <text x=\"" << ml - 6 << "\" y=\"" << format_double(sy(fy) + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(fy) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string emit_report(const ProbeReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return probe_report_to_json(report).dump(2) + "\n";
    case OutputFormat::kCsv:
      return emit_csv(report);
    case OutputFormat::kSvg:
      return emit_svg(report);
  }
  throw Error(ErrorCode::kUnsupportedFormat, "unknown output format");
}

ProbeReport WCPReport::to_probe_report() const {
  ProbeReport out;
  out.probe = "wcp";
  out.space = space;
  out.params["family"] = family;
  out.params["t"] = to_string(t);
  out.params["k_max"] = k_max;
  out.params["limit_reached"] = limit_reached;
  for (const WCPRow& row : rows) {
    nlohmann::ordered_json r;
    r["k"] = row.k;
    r["distance"] = num_to_json(row.distance);
    r["ball_lower"] = num_to_json(row.ball.lower);
    r["ball_upper"] = num_to_json(row.ball.upper);
    r["lower_kind"] = bound_kind_name(row.ball.lower_kind);
    r["upper_kind"] = bound_kind_name(row.ball.upper_kind);
    out.rows.push_back(std::move(r));
    out.series.emplace_back(static_cast<double>(row.k), row.ball.lower.as_double());
  }
  out.verdict = verdict;
  out.gap = gap;
  out.seed = seed;
  out.series_x_label = "k";
  out.series_y_label = "certified lower bound of d(y_k, ball)";
  return out;
}

ProbeReport ContinuityReport::to_probe_report() const {
  ProbeReport out;
  out.probe = "continuity";
  out.space = space;
  out.params["t"] = to_string(t);
  out.params["direction"] = direction_name(direction);
  out.params["resolution"] = resolution;
  for (size_t i = 0; i < eps_schedule.size(); ++i) {
    nlohmann::ordered_json r;
    r["eps"] = to_string(eps_schedule[i]);
    r["h_value"] = num_to_json(h_values[i]);
    r["h_lower"] = num_to_json(h_lower[i]);
    out.rows.push_back(std::move(r));
    out.series.emplace_back(to_double(eps_schedule[i]), h_values[i].as_double());
  }
  out.verdict = verdict;
  out.gap = witness_gap;
  out.seed = seed;
  out.series_x_label = "eps";
  out.series_y_label = "H(B(t +/- eps), B(t)) estimate";
  return out;
}

ProbeReport CoronaEstimate::to_probe_report() const {
  ProbeReport out;
  out.probe = "scp_scan";
  out.space = space;
  out.params["divergence_factor"] = divergence_factor;
  nlohmann::ordered_json summary;
  summary["global_C"] = num_to_json(global_c);
  summary["divergence_flag"] = divergence_flag;
  out.rows.push_back(std::move(summary));
  for (const CoronaPerT& per : per_t) {
    nlohmann::ordered_json r;
    r["t"] = to_string(per.t);
    r["C_of_t"] = num_to_json(per.c_of_t);
    r["eps0"] = per.eps0 ? nlohmann::ordered_json(to_string(*per.eps0))
                         : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CoronaCell& cell : per.cells) {
      nlohmann::ordered_json c;
      c["eps"] = to_string(cell.eps);
      c["ratio"] = interval_to_json(cell.ratio);
      c["upper_is_sup"] = cell.upper_is_sup;
      cells.push_back(std::move(c));
    }
    r["cells"] = std::move(cells);
    out.rows.push_back(std::move(r));
    out.series.emplace_back(to_double(per.t), per.c_of_t.as_double());
  }
  out.verdict = divergence_flag ? kViolationWitnessed : kNoViolationFound;
  out.seed = seed;
  out.series_x_label = "t";
  out.series_y_label = "C(t)";
  return out;
}

}  // namespace corona
