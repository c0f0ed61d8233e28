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

#ifndef CORONA_SPACE_HPP_
#define CORONA_SPACE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corona/interval.hpp"
#include "corona/points.hpp"

namespace corona {

// Declarative inputs, never inferred from the implementation.
struct SpaceMetadata {
  bool boundedly_compact = false;
  bool translation_invariant = false;
  bool is_tvs = false;
};

enum class WitnessExpectation { kViolatesWcp, kSatisfiesWcp, kUnknown };

const char* witness_expectation_name(WitnessExpectation e);

// A named sequence y_k approaching a ball boundary, with its declared center
// and radius. The generator must be total over k >= 1.
struct WitnessFamily {
  std::string name;
  Point center;
  Rational t;
  std::function<Point(int)> generator;
  WitnessExpectation expected = WitnessExpectation::kUnknown;
};

// Finite sample of a closed bounded set. When covering_radius is set, every
// point of the represented set lies within that distance (in the space's
// metric) of some sample; nullopt means UNCERTIFIED.
struct FiniteSet {
  std::vector<Point> points;
  std::optional<Num> covering_radius;
};

// How far corona-property scans may push eps at a given t.
struct Eps0Hook {
  enum class Kind { kExact, kUnbounded, kUnknown } kind = Kind::kUnknown;
  Rational value;  // meaningful for kExact only

  static Eps0Hook exact(Rational v) { return {Kind::kExact, std::move(v)}; }
  static Eps0Hook unbounded() { return {Kind::kUnbounded, Rational(0)}; }
  static Eps0Hook unknown() { return {Kind::kUnknown, Rational(0)}; }
};

// One concrete metric space with its certified ball-distance backend and
// samplers. All operations are pure; handles are immutable after creation.
class MetricSpace {
 public:
  MetricSpace(std::string name, PointKind kind, SpaceMetadata metadata, bool exact)
      : name_(std::move(name)), point_kind_(kind), metadata_(metadata), exact_(exact) {}
  virtual ~MetricSpace() = default;

  const std::string& name() const { return name_; }
  PointKind point_kind() const { return point_kind_; }
  const SpaceMetadata& metadata() const { return metadata_; }
  // Exact spaces compute in rationals end to end; planar spaces use doubles
  // with a 1e-9 comparison tolerance.
  bool exact() const { return exact_; }

  virtual bool contains(const Point& p) const = 0;
  virtual Num distance(const Point& p, const Point& q) const = 0;
  virtual bool in_closed_ball(const Point& x, const Rational& t, const Point& y) const;
  virtual CertifiedInterval ball_distance(const Point& x, const Rational& t,
                                          const Point& y) const = 0;
  virtual FiniteSet sample_closed_ball(const Point& x, const Rational& t, int resolution,
                                       uint64_t seed) const = 0;

  // Candidate worst points for the corona quotient: members of B(x, t+eps)
  // expected to sit far from B(x, t).
  virtual std::vector<Point> ratio_witnesses(const Point& x, const Rational& t,
                                             const Rational& eps, int resolution,
                                             uint64_t seed) const;

  // Exact supremum of the corona quotient where a closed form exists.
  virtual std::optional<CertifiedInterval> analytic_corona_ratio(const Point& x,
                                                                 const Rational& t,
                                                                 const Rational& eps) const {
    return std::nullopt;
  }

  virtual Eps0Hook cp_eps0(const Rational& t) const { return Eps0Hook::unknown(); }

  virtual Point zero_point() const = 0;
  virtual Point random_point(uint64_t seed, int index) const = 0;

  const std::vector<WitnessFamily>& witness_families() const { return families_; }
  const WitnessFamily& family(const std::string& name) const;

  // Planar-space comparison tolerance; exact spaces compare exactly.
  static constexpr double kPlanarTolerance = 1e-9;

 protected:
  void register_family(WitnessFamily family) { families_.push_back(std::move(family)); }
  void check_radius_positive(const Rational& t) const;

 private:
  std::string name_;
  PointKind point_kind_;
  SpaceMetadata metadata_;
  bool exact_;
  std::vector<WitnessFamily> families_;
};

using SpaceHandle = std::shared_ptr<const MetricSpace>;

}  // namespace corona

#endif  // CORONA_SPACE_HPP_
