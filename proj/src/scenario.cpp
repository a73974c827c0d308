#include "iabsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace iabsim {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr double kPi = 3.141592653589793238462643383279502884;

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw ConfigError(ctx + ": " + msg);
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

// Strict schema: every key must be known; unknown keys name the closest
// accepted key when one is plausibly intended.
void check_keys(const Json& j, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(ctx, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (known) continue;
    std::string best;
    std::size_t best_d = 4;  // suggest only near misses
    for (const char* a : allowed) {
      const std::size_t d = levenshtein(key, a);
      if (d < best_d) {
        best_d = d;
        best = a;
      }
    }
    std::string msg = "unknown key '" + key + "'";
    if (!best.empty()) msg += " (did you mean '" + best + "'?)";
    fail(ctx, msg);
  }
}

double require_number(const Json& j, const std::string& ctx, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ctx, std::string("missing required key '") + key + "'");
  if (!it->is_number()) fail(ctx + "." + key, "expected a number");
  return it->get<double>();
}

double number_or(const Json& j, const std::string& ctx, const char* key,
                 double fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) fail(ctx + "." + key, "expected a number");
  return it->get<double>();
}

bool bool_or(const Json& j, const std::string& ctx, const char* key,
             bool fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) fail(ctx + "." + key, "expected a boolean");
  return it->get<bool>();
}

std::uint64_t u64_or(const Json& j, const std::string& ctx, const char* key,
                     std::uint64_t fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  if (it->is_number_integer() && it->get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(it->get<std::int64_t>());
  }
  fail(ctx + "." + key, "expected a non-negative integer");
}

int require_int(const Json& j, const std::string& ctx, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ctx, std::string("missing required key '") + key + "'");
  if (!it->is_number_integer()) fail(ctx + "." + key, "expected an integer");
  return it->get<int>();
}

Point point_from(const Json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    fail(ctx, "expected a position as [x_m, y_m]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

Point point_field(const Json& j, const std::string& ctx, const char* key,
                  Point fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  return point_from(*it, ctx + "." + key);
}

AntennaPattern parse_pattern(const Json& j, const std::string& ctx,
                             AntennaPattern defaults) {
  check_keys(j, ctx, {"g_main_dbi", "g_side_dbi", "hpbw_deg"});
  AntennaPattern p = defaults;
  p.g_main_dbi = number_or(j, ctx, "g_main_dbi", p.g_main_dbi);
  p.g_side_dbi = number_or(j, ctx, "g_side_dbi", p.g_side_dbi);
  const double hpbw_deg =
      number_or(j, ctx, "hpbw_deg", p.hpbw_rad * 180.0 / kPi);
  if (hpbw_deg < 0.0 || hpbw_deg > 360.0) {
    fail(ctx + ".hpbw_deg", "must lie in [0, 360]");
  }
  p.hpbw_rad = hpbw_deg * kPi / 180.0;
  return p;
}

AntennaPattern default_bs_pattern() {
  return {35.0, -10.0, 30.0 * kPi / 180.0};
}
AntennaPattern default_ncr_pattern() {
  return {15.0, -5.0, 60.0 * kPi / 180.0};
}

TreeSpec parse_trees(const Json& j, const std::string& ctx) {
  auto mode_it = j.find("mode");
  if (mode_it == j.end() || !mode_it->is_string()) {
    fail(ctx, "missing required key 'mode' (deterministic|stochastic|pinned)");
  }
  const std::string mode = mode_it->get<std::string>();
  const auto depth = [&](const char* key, double fallback) {
    const double v = number_or(j, ctx, key, fallback);
    if (v < 0.0) fail(ctx + "." + key, "must be non-negative");
    return v;
  };
  if (mode == "deterministic") {
    check_keys(j, ctx,
               {"mode", "backhaul_depth_m", "leg_depth_m", "access_depth_m",
                "in_leaf_probability"});
    TreeDeterministic t;
    t.backhaul_depth_m = depth("backhaul_depth_m", 0.0);
    t.leg_depth_m = depth("leg_depth_m", 0.0);
    t.access_depth_m = depth("access_depth_m", 0.0);
    t.in_leaf_probability = number_or(j, ctx, "in_leaf_probability", 0.5);
    if (t.in_leaf_probability < 0.0 || t.in_leaf_probability > 1.0) {
      fail(ctx + ".in_leaf_probability", "must lie in [0, 1]");
    }
    return t;
  }
  if (mode == "stochastic") {
    check_keys(j, ctx,
               {"mode", "density_per_m2", "line_length_m", "line_width_m",
                "in_leaf_probability"});
    TreeStochastic t;
    t.density_per_m2 = depth("density_per_m2", 0.0);
    t.line_length_m = depth("line_length_m", 0.0);
    t.line_width_m = depth("line_width_m", 0.0);
    t.in_leaf_probability = number_or(j, ctx, "in_leaf_probability", 0.5);
    if (t.in_leaf_probability < 0.0 || t.in_leaf_probability > 1.0) {
      fail(ctx + ".in_leaf_probability", "must lie in [0, 1]");
    }
    return t;
  }
  if (mode == "pinned") {
    check_keys(j, ctx,
               {"mode", "backhaul_in_m", "backhaul_out_m", "leg_in_m",
                "leg_out_m", "access_in_m", "access_out_m"});
    TreePinned t;
    t.backhaul = {depth("backhaul_in_m", 0.0), depth("backhaul_out_m", 0.0)};
    t.leg = {depth("leg_in_m", 0.0), depth("leg_out_m", 0.0)};
    t.access = {depth("access_in_m", 0.0), depth("access_out_m", 0.0)};
    return t;
  }
  fail(ctx + ".mode", "unknown mode '" + mode +
                          "' (expected deterministic|stochastic|pinned)");
}

std::vector<Variant> parse_variants(const Json& arr, const std::string& ctx) {
  if (!arr.is_array() || arr.empty()) {
    fail(ctx, "expected a non-empty array of variant names");
  }
  std::vector<Variant> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) fail(ctx, "variant names must be strings");
    const std::string name = arr[i].get<std::string>();
    const auto v = variant_from_name(name);
    if (!v) {
      fail(ctx, "unknown variant '" + name +
                    "' (expected direct_only|with_ris|with_ncr)");
    }
    if (std::find(out.begin(), out.end(), *v) != out.end()) {
      fail(ctx, "duplicate variant '" + name + "'");
    }
    out.push_back(*v);
  }
  return out;
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::DirectOnly:
      return "direct_only";
    case Variant::WithRis:
      return "with_ris";
    case Variant::WithNcr:
      return "with_ncr";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  if (name == "direct_only") return Variant::DirectOnly;
  if (name == "with_ris") return Variant::WithRis;
  if (name == "with_ncr") return Variant::WithNcr;
  return std::nullopt;
}

PathPolicy policy_for(Variant v) {
  switch (v) {
    case Variant::DirectOnly:
      return {false, false};
    case Variant::WithRis:
      return {true, false};
    case Variant::WithNcr:
      return {false, true};
  }
  return {false, false};
}

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::TreeDepth:
      return "tree_depth";
    case SweepAxis::UeCount:
      return "ue_count";
    case SweepAxis::RainRate:
      return "rain_rate";
    case SweepAxis::MainLobeGain:
      return "main_lobe_gain";
    case SweepAxis::CarrierFrequency:
      return "carrier_frequency";
    case SweepAxis::Psi:
      return "psi";
  }
  return "?";
}

std::optional<SweepAxis> axis_from_name(const std::string& name) {
  if (name == "tree_depth") return SweepAxis::TreeDepth;
  if (name == "ue_count") return SweepAxis::UeCount;
  if (name == "rain_rate") return SweepAxis::RainRate;
  if (name == "main_lobe_gain") return SweepAxis::MainLobeGain;
  if (name == "carrier_frequency") return SweepAxis::CarrierFrequency;
  if (name == "psi") return SweepAxis::Psi;
  return std::nullopt;
}

Scenario parse_and_validate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config file '" + path + "'");
  return parse_scenario_text(buf.str(), path);
}

Scenario parse_scenario_text(const std::string& text,
                             const std::string& origin) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  const std::string ctx = origin;
  // "version" is accepted so a result-header manifest echo is itself a valid
  // config; the value is informational only.
  check_keys(root, ctx,
             {"version", "region", "nodes", "ues", "channel", "antenna",
              "trees", "rain", "psi", "beta_bps", "trials", "seed",
              "association", "pinned_beams", "variants", "sweep", "output",
              "notes"});

  Scenario s;

  if (auto it = root.find("region"); it != root.end()) {
    const std::string rctx = ctx + ".region";
    check_keys(*it, rctx, {"width_m", "height_m", "origin"});
    s.region.width = require_number(*it, rctx, "width_m");
    s.region.height = require_number(*it, rctx, "height_m");
    if (s.region.width <= 0.0 || s.region.height <= 0.0) {
      fail(rctx, "region dimensions must be positive");
    }
    s.region.origin = point_field(
        *it, rctx, "origin", {-s.region.width / 2.0, -s.region.height / 2.0});
  }

  AntennaPattern bs_pattern = default_bs_pattern();
  s.prop.ncr_pattern = default_ncr_pattern();
  if (auto it = root.find("antenna"); it != root.end()) {
    const std::string actx = ctx + ".antenna";
    check_keys(*it, actx, {"bs", "ncr"});
    if (auto b = it->find("bs"); b != it->end()) {
      bs_pattern = parse_pattern(*b, actx + ".bs", bs_pattern);
    }
    if (auto n = it->find("ncr"); n != it->end()) {
      s.prop.ncr_pattern = parse_pattern(*n, actx + ".ncr", s.prop.ncr_pattern);
    }
  }

  if (auto it = root.find("channel"); it != root.end()) {
    const std::string cctx = ctx + ".channel";
    check_keys(*it, cctx,
               {"fc_ghz", "bandwidth_hz", "alpha_los", "alpha_nlos",
                "noise_figure_db", "fading", "tx_elements", "rx_elements"});
    s.prop.carrier.fc_ghz = number_or(*it, cctx, "fc_ghz", 28.0);
    s.prop.carrier.bandwidth_hz = number_or(*it, cctx, "bandwidth_hz", 4.0e8);
    s.prop.exponents.alpha_los = number_or(*it, cctx, "alpha_los", 2.0);
    s.prop.exponents.alpha_nlos = number_or(*it, cctx, "alpha_nlos", 2.2);
    s.prop.noise_figure_db = number_or(*it, cctx, "noise_figure_db", 7.0);
    if (s.prop.carrier.fc_ghz <= 0.0) fail(cctx + ".fc_ghz", "must be positive");
    if (s.prop.carrier.bandwidth_hz <= 0.0) {
      fail(cctx + ".bandwidth_hz", "must be positive");
    }
    if (s.prop.exponents.alpha_los <= 0.0 ||
        s.prop.exponents.alpha_nlos <= 0.0) {
      fail(cctx, "path-loss exponents must be positive");
    }
    if (auto f = it->find("fading"); f != it->end()) {
      if (!f->is_string()) fail(cctx + ".fading", "expected a string");
      const std::string fading = f->get<std::string>();
      if (fading == "unit") {
        s.unit_fading = true;
      } else if (fading != "rayleigh") {
        fail(cctx + ".fading", "unknown value '" + fading +
                                   "' (expected rayleigh|unit)");
      }
    }
    s.prop.tx_elements = static_cast<int>(u64_or(*it, cctx, "tx_elements", 16));
    s.prop.rx_elements = static_cast<int>(u64_or(*it, cctx, "rx_elements", 4));
    if (s.prop.tx_elements < 1 || s.prop.rx_elements < 1) {
      fail(cctx, "element counts must be at least 1");
    }
  }

  auto nodes_it = root.find("nodes");
  if (nodes_it == root.end()) fail(ctx, "missing required key 'nodes'");
  {
    const std::string nctx = ctx + ".nodes";
    check_keys(*nodes_it, nctx, {"mbs", "sbs", "ris", "ncr"});
    auto mbs_it = nodes_it->find("mbs");
    if (mbs_it == nodes_it->end() || !mbs_it->is_array() || mbs_it->empty()) {
      fail(nctx, "at least one entry under 'mbs' is required");
    }
    std::set<int> ids;
    const auto add_station = [&](const Json& e, const std::string& ectx,
                                 bool is_mbs) {
      check_keys(e, ectx, is_mbs
                              ? std::initializer_list<const char*>{
                                    "id", "position", "p_tx_dbm"}
                              : std::initializer_list<const char*>{
                                    "id", "position", "p_tx_dbm", "iab"});
      BaseStation b;
      b.id = require_int(e, ectx, "id");
      if (b.id < 0) fail(ectx + ".id", "must be non-negative");
      if (!ids.insert(b.id).second) {
        fail(ectx + ".id", "duplicate station id " + std::to_string(b.id));
      }
      b.position = point_from(e.at("position"), ectx + ".position");
      b.p_tx_dbm = require_number(e, ectx, "p_tx_dbm");
      b.antenna = bs_pattern;
      b.elements = s.prop.tx_elements;
      b.kind = is_mbs ? NodeKind::MbsDonor
                      : (bool_or(e, ectx, "iab", true) ? NodeKind::SbsIab
                                                       : NodeKind::SbsWired);
      s.deployment.stations.push_back(b);
    };
    for (std::size_t i = 0; i < mbs_it->size(); ++i) {
      add_station((*mbs_it)[i], nctx + ".mbs[" + std::to_string(i) + "]", true);
    }
    if (auto sbs_it = nodes_it->find("sbs"); sbs_it != nodes_it->end()) {
      if (!sbs_it->is_array()) fail(nctx + ".sbs", "expected an array");
      for (std::size_t i = 0; i < sbs_it->size(); ++i) {
        add_station((*sbs_it)[i], nctx + ".sbs[" + std::to_string(i) + "]",
                    false);
      }
    }
    if (auto ris_it = nodes_it->find("ris"); ris_it != nodes_it->end()) {
      if (!ris_it->is_array()) fail(nctx + ".ris", "expected an array");
      for (std::size_t i = 0; i < ris_it->size(); ++i) {
        const std::string ectx = nctx + ".ris[" + std::to_string(i) + "]";
        const Json& e = (*ris_it)[i];
        check_keys(e, ectx, {"position", "elements", "element_spacing_wl"});
        RisPanel p;
        p.position = point_from(e.at("position"), ectx + ".position");
        p.elements = static_cast<int>(u64_or(e, ectx, "elements", 256));
        p.element_spacing_wl =
            number_or(e, ectx, "element_spacing_wl", 0.5);
        if (p.elements < 1) fail(ectx + ".elements", "must be at least 1");
        if (p.element_spacing_wl <= 0.0) {
          fail(ectx + ".element_spacing_wl", "must be positive");
        }
        s.deployment.ris_panels.push_back(p);
      }
    }
    if (auto ncr_it = nodes_it->find("ncr"); ncr_it != nodes_it->end()) {
      if (!ncr_it->is_array()) fail(nctx + ".ncr", "expected an array");
      for (std::size_t i = 0; i < ncr_it->size(); ++i) {
        const std::string ectx = nctx + ".ncr[" + std::to_string(i) + "]";
        const Json& e = (*ncr_it)[i];
        check_keys(e, ectx, {"position", "amp_gain_db", "max_output_dbm"});
        NcrNode n;
        n.config.position = point_from(e.at("position"), ectx + ".position");
        n.config.amp_gain_db = number_or(e, ectx, "amp_gain_db", 100.0);
        n.config.max_output_power_dbm =
            number_or(e, ectx, "max_output_dbm", 40.0);
        if (n.config.amp_gain_db < 0.0) {
          fail(ectx + ".amp_gain_db", "must be non-negative");
        }
        n.antenna = s.prop.ncr_pattern;
        s.deployment.ncrs.push_back(n);
      }
    }
  }

  auto ues_it = root.find("ues");
  if (ues_it == root.end()) fail(ctx, "missing required key 'ues'");
  {
    const std::string uctx = ctx + ".ues";
    check_keys(*ues_it, uctx, {"count", "positions"});
    const bool has_count = ues_it->contains("count");
    const bool has_positions = ues_it->contains("positions");
    if (has_count == has_positions) {
      fail(uctx, "exactly one of 'count' and 'positions' is required");
    }
    if (has_count) {
      s.ue_count = static_cast<std::size_t>(u64_or(*ues_it, uctx, "count", 0));
      if (s.ue_count == 0) fail(uctx + ".count", "must be at least 1");
    } else {
      const Json& arr = ues_it->at("positions");
      if (!arr.is_array() || arr.empty()) {
        fail(uctx + ".positions", "expected a non-empty array of [x, y]");
      }
      for (std::size_t i = 0; i < arr.size(); ++i) {
        s.pinned_ues.push_back(point_from(
            arr[i], uctx + ".positions[" + std::to_string(i) + "]"));
      }
      s.ue_count = s.pinned_ues.size();
    }
  }

  if (auto it = root.find("trees"); it != root.end()) {
    s.trees = parse_trees(*it, ctx + ".trees");
  }

  s.prop.rain.coeff = rain_coefficients_for(s.prop.carrier.fc_ghz);
  if (auto it = root.find("rain"); it != root.end()) {
    const std::string rctx = ctx + ".rain";
    check_keys(*it, rctx, {"rate_mm_per_hr", "k", "alpha"});
    s.prop.rain.rate_mm_per_hr = number_or(*it, rctx, "rate_mm_per_hr", 0.0);
    if (s.prop.rain.rate_mm_per_hr < 0.0) {
      fail(rctx + ".rate_mm_per_hr", "must be non-negative");
    }
    const bool has_k = it->contains("k");
    const bool has_alpha = it->contains("alpha");
    if (has_k != has_alpha) {
      fail(rctx, "'k' and 'alpha' must be given together");
    }
    if (has_k) {
      s.prop.rain.coeff.k = require_number(*it, rctx, "k");
      s.prop.rain.coeff.alpha_rain = require_number(*it, rctx, "alpha");
      if (s.prop.rain.coeff.k <= 0.0) fail(rctx + ".k", "must be positive");
      s.rain_coeff_explicit = true;
    }
  }

  s.psi = number_or(root, ctx, "psi", 0.5);
  if (s.psi < 0.0 || s.psi > 1.0) fail(ctx + ".psi", "must lie in [0, 1]");
  s.beta_bps = number_or(root, ctx, "beta_bps", 25.0e6);
  if (s.beta_bps < 0.0) fail(ctx + ".beta_bps", "must be non-negative");
  s.trials = static_cast<std::size_t>(u64_or(root, ctx, "trials", 1000));
  if (s.trials == 0) fail(ctx + ".trials", "must be at least 1");
  s.seed = u64_or(root, ctx, "seed", 1);

  if (auto it = root.find("association"); it != root.end()) {
    const std::string actx = ctx + ".association";
    check_keys(*it, actx, {"instantaneous_fading"});
    s.association_instantaneous_fading =
        bool_or(*it, actx, "instantaneous_fading", false);
  }

  if (auto it = root.find("pinned_beams"); it != root.end()) {
    const std::string bctx = ctx + ".pinned_beams";
    if (!it->is_array()) fail(bctx, "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string ectx = bctx + "[" + std::to_string(i) + "]";
      const Json& e = (*it)[i];
      check_keys(e, ectx, {"station", "target"});
      const int id = require_int(e, ectx, "station");
      bool found = false;
      for (const BaseStation& b : s.deployment.stations) {
        if (b.id == id) found = true;
      }
      if (!found) fail(ectx + ".station", "unknown station id");
      s.pinned_beams[id] = point_from(e.at("target"), ectx + ".target");
    }
  }

  bool top_level_variants = false;
  if (auto it = root.find("variants"); it != root.end()) {
    s.variants = parse_variants(*it, ctx + ".variants");
    top_level_variants = true;
  }

  if (auto it = root.find("sweep"); it != root.end()) {
    const std::string sctx = ctx + ".sweep";
    check_keys(*it, sctx, {"axis", "values", "variants"});
    auto a = it->find("axis");
    if (a == it->end() || !a->is_string()) {
      fail(sctx, "missing required key 'axis'");
    }
    const auto axis = axis_from_name(a->get<std::string>());
    if (!axis) {
      fail(sctx + ".axis",
           "unknown axis '" + a->get<std::string>() +
               "' (expected tree_depth|ue_count|rain_rate|main_lobe_gain|"
               "carrier_frequency|psi)");
    }
    auto vals = it->find("values");
    if (vals == it->end() || !vals->is_array() || vals->empty()) {
      fail(sctx, "missing non-empty 'values' array");
    }
    SweepSpec spec;
    spec.axis = *axis;
    for (const Json& v : *vals) {
      if (!v.is_number()) fail(sctx + ".values", "values must be numbers");
      spec.values.push_back(v.get<double>());
    }
    s.sweep = spec;
    if (auto vit = it->find("variants"); vit != it->end()) {
      if (top_level_variants) {
        fail(sctx + ".variants",
             "variant list already given at the top level");
      }
      s.variants = parse_variants(*vit, sctx + ".variants");
    }
  }

  if (auto it = root.find("output"); it != root.end()) {
    const std::string octx = ctx + ".output";
    check_keys(*it, octx, {"path"});
    if (auto p = it->find("path"); p != it->end()) {
      if (!p->is_string()) fail(octx + ".path", "expected a string");
      s.output_path = p->get<std::string>();
    }
  }

  // Cross-field checks shared with the sweep path.
  if (s.sweep) {
    for (double v : s.sweep->values) {
      (void)apply_axis(s, s.sweep->axis, v);
    }
  }
  return s;
}

Scenario apply_axis(const Scenario& base, SweepAxis axis, double value) {
  Scenario s = base;
  switch (axis) {
    case SweepAxis::TreeDepth: {
      auto* det = std::get_if<TreeDeterministic>(&s.trees);
      if (det == nullptr) {
        throw ConfigError(
            "sweep axis 'tree_depth' requires the deterministic foliage mode");
      }
      if (value < 0.0) {
        throw ConfigError("tree_depth values must be non-negative");
      }
      det->backhaul_depth_m = value;
      break;
    }
    case SweepAxis::UeCount: {
      if (!base.pinned_ues.empty()) {
        throw ConfigError(
            "sweep axis 'ue_count' conflicts with pinned UE positions");
      }
      if (value < 1.0 || value != std::floor(value)) {
        throw ConfigError("ue_count values must be positive integers");
      }
      s.ue_count = static_cast<std::size_t>(value);
      break;
    }
    case SweepAxis::RainRate: {
      if (value < 0.0) {
        throw ConfigError("rain_rate values must be non-negative");
      }
      s.prop.rain.rate_mm_per_hr = value;
      break;
    }
    case SweepAxis::MainLobeGain: {
      for (BaseStation& b : s.deployment.stations) {
        b.antenna.g_main_dbi = value;
      }
      break;
    }
    case SweepAxis::CarrierFrequency: {
      if (value <= 0.0) {
        throw ConfigError("carrier_frequency values must be positive");
      }
      s.prop.carrier.fc_ghz = value;
      if (!s.rain_coeff_explicit) {
        s.prop.rain.coeff = rain_coefficients_for(value);
      }
      break;
    }
    case SweepAxis::Psi: {
      if (value < 0.0 || value > 1.0) {
        throw ConfigError("psi values must lie in [0, 1]");
      }
      s.psi = value;
      break;
    }
  }
  return s;
}

namespace {

OrderedJson point_json(const Point& p) {
  return OrderedJson::array({p.x, p.y});
}

OrderedJson pattern_json(const AntennaPattern& p) {
  OrderedJson j;
  j["g_main_dbi"] = p.g_main_dbi;
  j["g_side_dbi"] = p.g_side_dbi;
  j["hpbw_deg"] = p.hpbw_rad * 180.0 / kPi;
  return j;
}

}  // namespace

std::string manifest_json(const Scenario& s) {
  OrderedJson j;
  j["version"] = kVersion;
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  j["region"] = {{"width_m", s.region.width},
                 {"height_m", s.region.height},
                 {"origin", point_json(s.region.origin)}};
  OrderedJson mbs = OrderedJson::array();
  OrderedJson sbs = OrderedJson::array();
  for (const BaseStation& b : s.deployment.stations) {
    OrderedJson e;
    e["id"] = b.id;
    e["position"] = point_json(b.position);
    e["p_tx_dbm"] = b.p_tx_dbm;
    if (b.kind == NodeKind::MbsDonor) {
      mbs.push_back(e);
    } else {
      e["iab"] = (b.kind == NodeKind::SbsIab);
      sbs.push_back(e);
    }
  }
  OrderedJson ris = OrderedJson::array();
  for (const RisPanel& p : s.deployment.ris_panels) {
    ris.push_back({{"position", point_json(p.position)},
                   {"elements", p.elements},
                   {"element_spacing_wl", p.element_spacing_wl}});
  }
  OrderedJson ncr = OrderedJson::array();
  for (const NcrNode& n : s.deployment.ncrs) {
    ncr.push_back({{"position", point_json(n.config.position)},
                   {"amp_gain_db", n.config.amp_gain_db},
                   {"max_output_dbm", n.config.max_output_power_dbm}});
  }
  j["nodes"] = {{"mbs", mbs}, {"sbs", sbs}, {"ris", ris}, {"ncr", ncr}};
  // Stations all share one pattern until a sweep point retunes them, and the
  // manifest describes the base scenario, so one echo covers the fleet.
  const AntennaPattern bs_pattern = s.deployment.stations.empty()
                                        ? AntennaPattern{}
                                        : s.deployment.stations[0].antenna;
  j["antenna"] = {{"bs", pattern_json(bs_pattern)},
                  {"ncr", pattern_json(s.prop.ncr_pattern)}};
  if (s.pinned_ues.empty()) {
    j["ues"] = {{"count", s.ue_count}};
  } else {
    OrderedJson pts = OrderedJson::array();
    for (const Point& p : s.pinned_ues) pts.push_back(point_json(p));
    j["ues"] = {{"positions", pts}};
  }
  j["channel"] = {{"fc_ghz", s.prop.carrier.fc_ghz},
                  {"bandwidth_hz", s.prop.carrier.bandwidth_hz},
                  {"alpha_los", s.prop.exponents.alpha_los},
                  {"alpha_nlos", s.prop.exponents.alpha_nlos},
                  {"noise_figure_db", s.prop.noise_figure_db},
                  {"fading", s.unit_fading ? "unit" : "rayleigh"},
                  {"tx_elements", s.prop.tx_elements},
                  {"rx_elements", s.prop.rx_elements}};
  OrderedJson trees;
  if (const auto* det = std::get_if<TreeDeterministic>(&s.trees)) {
    trees = {{"mode", "deterministic"},
             {"backhaul_depth_m", det->backhaul_depth_m},
             {"leg_depth_m", det->leg_depth_m},
             {"access_depth_m", det->access_depth_m},
             {"in_leaf_probability", det->in_leaf_probability}};
  } else if (const auto* st = std::get_if<TreeStochastic>(&s.trees)) {
    trees = {{"mode", "stochastic"},
             {"density_per_m2", st->density_per_m2},
             {"line_length_m", st->line_length_m},
             {"line_width_m", st->line_width_m},
             {"in_leaf_probability", st->in_leaf_probability}};
  } else if (const auto* pin = std::get_if<TreePinned>(&s.trees)) {
    trees = {{"mode", "pinned"},
             {"backhaul_in_m", pin->backhaul.in_leaf_m},
             {"backhaul_out_m", pin->backhaul.out_of_leaf_m},
             {"leg_in_m", pin->leg.in_leaf_m},
             {"leg_out_m", pin->leg.out_of_leaf_m},
             {"access_in_m", pin->access.in_leaf_m},
             {"access_out_m", pin->access.out_of_leaf_m}};
  }
  j["trees"] = trees;
  // Coefficients are echoed only when the config pinned them; table-resolved
  // ones re-resolve identically from the carrier, and echoing them would
  // wrongly freeze the coefficients across a later carrier sweep.
  if (s.rain_coeff_explicit) {
    j["rain"] = {{"rate_mm_per_hr", s.prop.rain.rate_mm_per_hr},
                 {"k", s.prop.rain.coeff.k},
                 {"alpha", s.prop.rain.coeff.alpha_rain}};
  } else {
    j["rain"] = {{"rate_mm_per_hr", s.prop.rain.rate_mm_per_hr}};
  }
  j["psi"] = s.psi;
  j["beta_bps"] = s.beta_bps;
  j["association"] = {
      {"instantaneous_fading", s.association_instantaneous_fading}};
  if (!s.pinned_beams.empty()) {
    std::vector<int> ids;
    for (const auto& [id, p] : s.pinned_beams) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    OrderedJson beams = OrderedJson::array();
    for (int id : ids) {
      beams.push_back(
          {{"station", id}, {"target", point_json(s.pinned_beams.at(id))}});
    }
    j["pinned_beams"] = beams;
  }
  OrderedJson variants = OrderedJson::array();
  for (Variant v : s.variants) variants.push_back(variant_name(v));
  if (s.sweep) {
    OrderedJson vals = OrderedJson::array();
    for (double v : s.sweep->values) vals.push_back(v);
    j["sweep"] = {{"axis", axis_name(s.sweep->axis)},
                  {"values", vals},
                  {"variants", variants}};
  } else {
    j["variants"] = variants;
  }
  if (!s.output_path.empty()) {
    j["output"] = {{"path", s.output_path}};
  }
  return j.dump();
}

namespace {

// Shared deployment for the shipped experiments: one donor at the center,
// three IAB stations on a 1200 m ring, relays (where deployed) on each
// donor-to-station line with a 200 m lateral offset.
struct PresetGeometry {
  std::vector<Point> sbs;
  std::vector<Point> ris;
  std::vector<Point> ncr;
};

PresetGeometry preset_geometry() {
  PresetGeometry g;
  const double radius = 1200.0;
  const double angles_deg[3] = {90.0, 210.0, 330.0};
  for (double a_deg : angles_deg) {
    const double a = a_deg * kPi / 180.0;
    const Point dir{std::cos(a), std::sin(a)};
    const Point perp{-dir.y, dir.x};
    g.sbs.push_back({radius * dir.x, radius * dir.y});
    // Reflectors at the midpoint, repeaters closer to the station they feed.
    g.ris.push_back({0.5 * radius * dir.x + 200.0 * perp.x,
                     0.5 * radius * dir.y + 200.0 * perp.y});
    g.ncr.push_back({0.75 * radius * dir.x + 200.0 * perp.x,
                     0.75 * radius * dir.y + 200.0 * perp.y});
  }
  return g;
}

OrderedJson preset_base(const PresetGeometry& g) {
  OrderedJson j;
  j["region"] = {{"width_m", 3000.0},
                 {"height_m", 3000.0},
                 {"origin", OrderedJson::array({-1500.0, -1500.0})}};
  OrderedJson sbs = OrderedJson::array();
  for (std::size_t i = 0; i < g.sbs.size(); ++i) {
    sbs.push_back({{"id", static_cast<int>(i + 1)},
                   {"position", point_json(g.sbs[i])},
                   {"p_tx_dbm", 35.0},
                   {"iab", true}});
  }
  j["nodes"] = {
      {"mbs", OrderedJson::array(
                  {{{"id", 0},
                    {"position", OrderedJson::array({0.0, 0.0})},
                    {"p_tx_dbm", 40.0}}})},
      {"sbs", sbs}};
  j["ues"] = {{"count", 40}};
  j["channel"] = {{"fc_ghz", 28.0},          {"bandwidth_hz", 4.0e8},
                  {"alpha_los", 2.0},        {"alpha_nlos", 2.2},
                  {"noise_figure_db", 7.0},  {"fading", "rayleigh"},
                  {"tx_elements", 16},       {"rx_elements", 4}};
  j["antenna"] = {
      {"bs", {{"g_main_dbi", 35.0}, {"g_side_dbi", -10.0}, {"hpbw_deg", 30.0}}},
      {"ncr",
       {{"g_main_dbi", 15.0}, {"g_side_dbi", -5.0}, {"hpbw_deg", 60.0}}}};
  j["rain"] = {{"rate_mm_per_hr", 0.0}};
  j["psi"] = 0.5;
  j["beta_bps"] = 25.0e6;
  j["trials"] = 1000;
  j["seed"] = 1;
  return j;
}

OrderedJson ris_nodes(const PresetGeometry& g) {
  OrderedJson arr = OrderedJson::array();
  for (const Point& p : g.ris) {
    arr.push_back({{"position", point_json(p)},
                   {"elements", 384},
                   {"element_spacing_wl", 0.5}});
  }
  return arr;
}

OrderedJson ncr_nodes(const PresetGeometry& g) {
  OrderedJson arr = OrderedJson::array();
  for (const Point& p : g.ncr) {
    arr.push_back({{"position", point_json(p)},
                   {"amp_gain_db", 100.0},
                   {"max_output_dbm", 40.0}});
  }
  return arr;
}

OrderedJson trees_deterministic(double backhaul_m, double q, double leg_m = 0.0,
                                double access_m = 0.0) {
  return {{"mode", "deterministic"},
          {"backhaul_depth_m", backhaul_m},
          {"leg_depth_m", leg_m},
          {"access_depth_m", access_m},
          {"in_leaf_probability", q}};
}

}  // namespace

std::string preset_text(const std::string& name) {
  const PresetGeometry g = preset_geometry();
  OrderedJson j = preset_base(g);
  if (name == "fig2") {
    j["nodes"]["ris"] = ris_nodes(g);
    j["trees"] = trees_deterministic(0.0, 0.75);
    j["sweep"] = {
        {"axis", "tree_depth"},
        {"values", {0.0, 25.0, 50.0, 75.0, 100.0, 125.0, 150.0, 175.0, 200.0}},
        {"variants", {"direct_only", "with_ris"}}};
    j["output"] = {{"path", "fig2_results.csv"}};
  } else if (name == "fig3") {
    j["trees"] = trees_deterministic(25.0, 0.5);
    j["sweep"] = {{"axis", "ue_count"},
                  {"values", {20.0, 40.0, 60.0, 80.0, 100.0}},
                  {"variants", {"direct_only"}}};
    j["output"] = {{"path", "fig3_results.csv"}};
  } else if (name == "fig4") {
    j["nodes"]["ris"] = ris_nodes(g);
    // Backhaul canopy thin enough that the direct pipe stays fade-marginal
    // (rain keeps biting it); roadside foliage on access links puts the
    // cell edge in the rain-sensitive band too.
    j["trees"] = trees_deterministic(40.0, 0.75, 0.0, 5.0);
    j["sweep"] = {{"axis", "rain_rate"},
                  {"values", {0.0, 2.5, 5.0, 7.5, 10.0}},
                  {"variants", {"direct_only", "with_ris"}}};
    j["output"] = {{"path", "fig4_results.csv"}};
  } else if (name == "fig5") {
    j["nodes"]["ncr"] = ncr_nodes(g);
    // Light roadside foliage on the repeater hops: out-of-leaf it is nearly
    // transparent (the repeater rescues weak-gain backhaul), in-leaf it
    // drags the relayed path below the direct one once antennas are strong.
    j["trees"] = trees_deterministic(25.0, 0.75, 5.0, 0.0);
    j["sweep"] = {{"axis", "main_lobe_gain"},
                  {"values", {10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0}},
                  {"variants", {"direct_only", "with_ncr"}}};
    j["output"] = {{"path", "fig5_results.csv"}};
  } else {
    throw ConfigError("unknown preset '" + name +
                      "' (expected fig2|fig3|fig4|fig5)");
  }
  return j.dump(2) + "\n";
}

}  // namespace iabsim
