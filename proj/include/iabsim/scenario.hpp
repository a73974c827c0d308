#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "iabsim/network.hpp"

namespace iabsim {

inline constexpr const char* kVersion = "0.1.0";

// Exactly one foliage mode is active per scenario.
//
// Deterministic mode models one seasonal tree stand per link class: each
// trial draws a single field-wide state (in-leaf with the given probability),
// and the class depth counts wholly toward that state. Pinned mode fixes the
// in/out split explicitly and draws nothing.
struct TreeDeterministic {
  double backhaul_depth_m = 0.0;
  double leg_depth_m = 0.0;
  double access_depth_m = 0.0;
  double in_leaf_probability = 0.5;
};
struct TreeStochastic {
  double density_per_m2 = 0.0;
  double line_length_m = 0.0;
  double line_width_m = 0.0;
  double in_leaf_probability = 0.5;
};
struct TreePinned {
  VegetationDepth backhaul;
  VegetationDepth leg;
  VegetationDepth access;
};
using TreeSpec = std::variant<TreeDeterministic, TreeStochastic, TreePinned>;

enum class Variant { DirectOnly, WithRis, WithNcr };
const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);
PathPolicy policy_for(Variant v);

enum class SweepAxis {
  TreeDepth,
  UeCount,
  RainRate,
  MainLobeGain,
  CarrierFrequency,
  Psi,
};
const char* axis_name(SweepAxis axis);
std::optional<SweepAxis> axis_from_name(const std::string& name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::TreeDepth;
  std::vector<double> values;
};

struct Scenario {
  Region region{3000.0, 3000.0, {-1500.0, -1500.0}};
  Deployment deployment;
  std::size_t ue_count = 0;
  std::vector<Point> pinned_ues;  // overrides sampling when non-empty
  Propagation prop;
  bool unit_fading = false;
  bool association_instantaneous_fading = false;
  bool rain_coeff_explicit = false;  // keep coeff fixed under carrier sweeps
  TreeSpec trees;
  double psi = 0.5;
  double beta_bps = 25.0e6;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::vector<Variant> variants{Variant::DirectOnly, Variant::WithRis,
                                Variant::WithNcr};
  std::optional<SweepSpec> sweep;
  std::unordered_map<int, Point> pinned_beams;
  std::string output_path;  // empty = caller decides
};

// Rejected configuration (schema, range, or semantic violation): exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};
// Filesystem trouble: exit code 3.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

Scenario parse_and_validate(const std::string& path);
// `origin` names the source in error messages.
Scenario parse_scenario_text(const std::string& text,
                             const std::string& origin);

// Canonical scenario templates for the four shipped experiments
// (fig2..fig5). Throws ConfigError for unknown names.
std::string preset_text(const std::string& name);

// One-line JSON echo of every resolved field; embedding it in an output
// header makes the run reproducible from the output alone.
std::string manifest_json(const Scenario& s);

// Returns the scenario for one sweep point. Validates the value against the
// axis (e.g. tree_depth requires the deterministic foliage mode).
Scenario apply_axis(const Scenario& base, SweepAxis axis, double value);

}  // namespace iabsim
