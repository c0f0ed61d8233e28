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

#ifndef CORONA_REPORT_IO_HPP_
#define CORONA_REPORT_IO_HPP_

#include <string>

#include <json.hpp>

#include "corona/reports.hpp"
#include "corona/space.hpp"

namespace corona {

enum class OutputFormat { kJson, kCsv, kSvg };

OutputFormat parse_format(const std::string& name);

// Rationals serialize as "p/q" strings to preserve exactness; floats as
// numbers printed to 12 significant digits.
nlohmann::ordered_json num_to_json(const Num& n);
Num num_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json interval_to_json(const CertifiedInterval& iv);

// Space-specific point encodings: planar [x, y]; sparse {"idx": "p/q"};
// PL function breakpoint list [[x, y], ...]; labels and line points scalars.
nlohmann::ordered_json point_to_json(const Point& p);
nlohmann::ordered_json finite_set_to_json(const FiniteSet& s);

nlohmann::ordered_json probe_report_to_json(const ProbeReport& report);
ProbeReport probe_report_from_json(const nlohmann::ordered_json& j);
bool probe_reports_equal(const ProbeReport& a, const ProbeReport& b);

// Canonical bytes per format; throws UNSUPPORTED_FORMAT when the report has
// no scalar series and svg is requested.
std::string emit_report(const ProbeReport& report, OutputFormat format);

}  // namespace corona

#endif  // CORONA_REPORT_IO_HPP_
