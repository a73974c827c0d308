#include "iabsim/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace iabsim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double bearing(const Point& from, const Point& to) {
  return std::atan2(to.y - from.y, to.x - from.x);
}

// Angular offset between a transmitter's boresight (aimed at `aim`) and the
// direction toward `target`, wrapped into [0, pi].
double offset_angle(const Point& origin, const Point& aim,
                    const Point& target) {
  double d = bearing(origin, target) - bearing(origin, aim);
  while (d > kPi) d -= 2.0 * kPi;
  while (d < -kPi) d += 2.0 * kPi;
  return std::abs(d);
}

const BaseStation& station_by_id(const Deployment& dep, int id) {
  for (const BaseStation& s : dep.stations) {
    if (s.id == id) return s;
  }
  throw std::logic_error("unknown station id " + std::to_string(id));
}

std::vector<int> sorted_station_ids(const Deployment& dep) {
  std::vector<int> ids;
  ids.reserve(dep.stations.size());
  for (const BaseStation& s : dep.stations) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<int> sorted_iab_ids(const Deployment& dep) {
  std::vector<int> ids;
  for (const BaseStation& s : dep.stations) {
    if (s.kind == NodeKind::SbsIab) ids.push_back(s.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Donor choice: minimum large-scale loss to `at`; ties toward the lowest id.
int select_donor(const Deployment& dep, const Propagation& prop,
                 const FoliageModel& foliage, const Point& at) {
  int best_id = -1;
  double best_loss = std::numeric_limits<double>::infinity();
  for (const BaseStation& s : dep.stations) {
    if (s.kind != NodeKind::MbsDonor) continue;
    const PathTerms t = path_terms(s.position, at, LinkClass::BackhaulDirect,
                                   prop, foliage);
    const double loss = t.path_db + t.foliage_db + t.rain_db;
    if (loss < best_loss || (loss == best_loss && s.id < best_id)) {
      best_loss = loss;
      best_id = s.id;
    }
  }
  if (best_id < 0) throw std::invalid_argument("deployment has no donor");
  return best_id;
}

// Signal and forwarded-noise levels at an IAB station fed by a repeater.
// Both ride the same engineered second hop, so the budget difference is
// exactly the levels at the repeater output.
struct NcrChildLevels {
  double signal_dbm;
  double forwarded_noise_dbm;
};
NcrChildLevels ncr_child_levels(const NcrState& state, const NcrNode& ncr,
                                const BaseStation& child,
                                const Propagation& prop,
                                const FoliageModel& foliage) {
  const PathTerms t = path_terms(ncr.config.position, child.position,
                                 LinkClass::Leg, prop, foliage);
  const double budget_db = ncr.antenna.g_main_dbi + child.antenna.g_main_dbi -
                           t.path_db - t.foliage_db - t.rain_db;
  return {state.p_out_dbm + budget_db, state.noise_out_dbm + budget_db};
}

}  // namespace

FoliageModel FoliageModel::from_field(TreeField field) {
  FoliageModel m;
  m.stochastic_ = true;
  m.field_ = std::move(field);
  return m;
}

FoliageModel FoliageModel::from_depths(VegetationDepth backhaul,
                                       VegetationDepth leg,
                                       VegetationDepth access) {
  FoliageModel m;
  m.backhaul_ = backhaul;
  m.leg_ = leg;
  m.access_ = access;
  return m;
}

VegetationDepth FoliageModel::depth(const Point& a, const Point& b,
                                    LinkClass link) const {
  if (stochastic_) return vegetation_depth(a, b, field_);
  switch (link) {
    case LinkClass::Access:
      return access_;
    case LinkClass::BackhaulDirect:
      return backhaul_;
    case LinkClass::Leg:
      return leg_;
  }
  return {};
}

PathTerms path_terms(const Point& a, const Point& b, LinkClass link,
                     const Propagation& prop, const FoliageModel& foliage) {
  PathTerms t;
  t.distance_m = distance(a, b);
  const VegetationDepth veg = foliage.depth(a, b, link);
  const double alpha = veg.total() == 0.0 ? prop.exponents.alpha_los
                                          : prop.exponents.alpha_nlos;
  t.path_db = path_loss_db(t.distance_m, prop.carrier.fc_ghz, alpha);
  t.foliage_db =
      foliage_loss_db(veg.in_leaf_m, veg.out_of_leaf_m, prop.carrier.fc_ghz);
  t.rain_db =
      rain_loss_db(prop.rain.rate_mm_per_hr, t.distance_m, prop.rain.coeff);
  return t;
}

double FadingProvider::link_gain(std::uint64_t tag_a,
                                 std::uint64_t tag_b) const {
  if (unit_) return 1.0;
  const std::uint64_t lo = std::min(tag_a, tag_b);
  const std::uint64_t hi = std::max(tag_a, tag_b);
  RandomStream stream =
      substream(master_seed_, trial_, StreamPurpose::Fading, lo, hi);
  return stream.exponential();
}

std::uint64_t FadingProvider::station_tag(int id) {
  return (1ull << 48) | static_cast<std::uint32_t>(id);
}
std::uint64_t FadingProvider::ue_tag(std::size_t index) {
  return (2ull << 48) | static_cast<std::uint64_t>(index);
}
std::uint64_t FadingProvider::ncr_tag(std::size_t index) {
  return (3ull << 48) | static_cast<std::uint64_t>(index);
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

std::vector<int> associate_ues(const std::vector<Point>& ues,
                               const Deployment& deployment,
                               const Propagation& prop,
                               const FoliageModel& foliage,
                               const FadingProvider* fading) {
  if (deployment.stations.empty()) {
    throw std::invalid_argument("at least one base station required");
  }
  std::vector<int> out(ues.size(), -1);
  for (std::size_t i = 0; i < ues.size(); ++i) {
    double best_power = -std::numeric_limits<double>::infinity();
    int best_id = -1;
    for (const BaseStation& s : deployment.stations) {
      const PathTerms t =
          path_terms(s.position, ues[i], LinkClass::Access, prop, foliage);
      const double h =
          fading ? fading->link_gain(FadingProvider::station_tag(s.id),
                                     FadingProvider::ue_tag(i))
                 : 1.0;
      const double p = received_power_dbm(
          s.p_tx_dbm, s.antenna.g_main_dbi + prop.ue_gain_dbi, t.path_db,
          t.foliage_db, t.rain_db, h);
      if (p > best_power || (p == best_power && s.id < best_id)) {
        best_power = p;
        best_id = s.id;
      }
    }
    out[i] = best_id;
  }
  return out;
}

RisGainTable build_ris_gains(const Deployment& deployment,
                             const Propagation& prop,
                             const FoliageModel& foliage) {
  RisGainTable table;
  for (int sbs_id : sorted_iab_ids(deployment)) {
    const BaseStation& sbs = station_by_id(deployment, sbs_id);
    const int donor_id = select_donor(deployment, prop, foliage, sbs.position);
    const BaseStation& donor = station_by_id(deployment, donor_id);
    for (std::size_t j = 0; j < deployment.ris_panels.size(); ++j) {
      const RisPanel& panel = deployment.ris_panels[j];
      const PathTerms t1 = path_terms(donor.position, panel.position,
                                      LinkClass::Leg, prop, foliage);
      const PathTerms t2 = path_terms(panel.position, sbs.position,
                                      LinkClass::Leg, prop, foliage);
      // The sectored endpoint gains fold into each hop budget; the panel
      // itself contributes only through its element count in the cascade.
      const double loss1 = t1.path_db + t1.foliage_db + t1.rain_db -
                           donor.antenna.g_main_dbi;
      const double loss2 =
          t2.path_db + t2.foliage_db + t2.rain_db - sbs.antenna.g_main_dbi;
      const ComplexMatrix g_br = synthesize_los_channel(
          donor.position, panel.position, donor.elements, panel.elements,
          prop.carrier.fc_ghz, loss1, panel.element_spacing_wl);
      const ComplexMatrix g_ru_mat = synthesize_los_channel(
          panel.position, sbs.position, panel.elements, 1,
          prop.carrier.fc_ghz, loss2, panel.element_spacing_wl);
      const RisOptimum opt = optimize_ris(g_br, g_ru_mat.row(0));
      table.push_back({sbs_id, static_cast<int>(j), opt.gain});
    }
  }
  return table;
}

std::vector<NcrState> plan_ncr_states(const Deployment& deployment,
                                      const Propagation& prop,
                                      const FoliageModel& foliage) {
  std::vector<NcrState> out;
  const double noise_in_dbm =
      noise_power_dbm(prop.carrier.bandwidth_hz, prop.noise_figure_db);
  const std::vector<int> iab_ids = sorted_iab_ids(deployment);
  for (std::size_t i = 0; i < deployment.ncrs.size(); ++i) {
    const NcrNode& ncr = deployment.ncrs[i];
    NcrState state;
    state.ncr_index = static_cast<int>(i);
    double best_d = std::numeric_limits<double>::infinity();
    for (int id : iab_ids) {
      const double d = distance(ncr.config.position,
                                station_by_id(deployment, id).position);
      if (d < best_d) {
        best_d = d;
        state.child_sbs_id = id;
      }
    }
    if (state.child_sbs_id >= 0) {
      const BaseStation& child =
          station_by_id(deployment, state.child_sbs_id);
      state.donor_id = select_donor(deployment, prop, foliage, child.position);
      const BaseStation& donor = station_by_id(deployment, state.donor_id);
      const PathTerms t1 = path_terms(donor.position, ncr.config.position,
                                      LinkClass::Leg, prop, foliage);
      const double p_in_dbm = received_power_dbm(
          donor.p_tx_dbm, donor.antenna.g_main_dbi + ncr.antenna.g_main_dbi,
          t1.path_db, t1.foliage_db, t1.rain_db, 1.0);
      const NcrForward fwd = ncr_forward(p_in_dbm, ncr.config);
      state.p_out_dbm = fwd.p_out_dbm;
      state.noise_out_dbm = noise_in_dbm + fwd.applied_gain_db;
    }
    out.push_back(state);
  }
  return out;
}

std::unordered_map<int, BackhaulRoute> associate_backhaul(
    const Deployment& deployment, const Propagation& prop,
    const FoliageModel& foliage, const PathPolicy& policy,
    const RisGainTable& ris_gains, const std::vector<NcrState>& ncr_states) {
  std::unordered_map<int, BackhaulRoute> out;
  const double noise_mw = dbm_to_mw(
      noise_power_dbm(prop.carrier.bandwidth_hz, prop.noise_figure_db));
  for (int sbs_id : sorted_iab_ids(deployment)) {
    const BaseStation& sbs = station_by_id(deployment, sbs_id);
    BackhaulRoute route;
    route.donor_id = select_donor(deployment, prop, foliage, sbs.position);
    const BaseStation& donor = station_by_id(deployment, route.donor_id);

    const PathTerms t = path_terms(donor.position, sbs.position,
                                   LinkClass::BackhaulDirect, prop, foliage);
    const double direct_dbm = received_power_dbm(
        donor.p_tx_dbm, donor.antenna.g_main_dbi + sbs.antenna.g_main_dbi,
        t.path_db, t.foliage_db, t.rain_db, 1.0);
    double best_sinr = dbm_to_mw(direct_dbm) / noise_mw;

    if (policy.allow_ris) {
      for (const RisGainEntry& entry : ris_gains) {
        if (entry.sbs_id != sbs_id) continue;
        const double sinr =
            dbm_to_mw(donor.p_tx_dbm) * entry.gain / noise_mw;
        if (sinr > best_sinr) {
          best_sinr = sinr;
          route.path = BackhaulPathKind::ViaRis;
          route.via_index = entry.panel_index;
          route.ris_gain = entry.gain;
        }
      }
    }
    if (policy.allow_ncr) {
      for (const NcrState& state : ncr_states) {
        if (state.child_sbs_id != sbs_id) continue;
        const NcrChildLevels lv = ncr_child_levels(
            state, deployment.ncrs[static_cast<std::size_t>(state.ncr_index)],
            sbs, prop, foliage);
        const double sinr = dbm_to_mw(lv.signal_dbm) /
                            (dbm_to_mw(lv.forwarded_noise_dbm) + noise_mw);
        if (sinr > best_sinr) {
          best_sinr = sinr;
          route.path = BackhaulPathKind::ViaNcr;
          route.via_index = state.ncr_index;
          route.ris_gain = 0.0;
        }
      }
    }
    out.emplace(sbs_id, route);
  }
  return out;
}

BandwidthAllocation allocate_bandwidth(
    const ResourceSplit& split, const Deployment& deployment,
    const std::unordered_map<int, std::size_t>& ue_counts) {
  if (!(split.psi >= 0.0 && split.psi <= 1.0)) {
    throw std::invalid_argument("psi must lie in [0, 1]");
  }
  if (split.total_bandwidth_hz < 0.0) {
    throw std::invalid_argument("bandwidth must be non-negative");
  }
  BandwidthAllocation alloc;
  const double backhaul_pool = split.psi * split.total_bandwidth_hz;
  const double access_pool = (1.0 - split.psi) * split.total_bandwidth_hz;

  std::size_t iab_total = 0;
  for (int id : sorted_iab_ids(deployment)) {
    auto it = ue_counts.find(id);
    iab_total += (it == ue_counts.end()) ? 0 : it->second;
  }
  for (int id : sorted_iab_ids(deployment)) {
    auto it = ue_counts.find(id);
    const std::size_t n = (it == ue_counts.end()) ? 0 : it->second;
    alloc.backhaul_hz[id] =
        (iab_total == 0)
            ? 0.0
            : backhaul_pool * static_cast<double>(n) /
                  static_cast<double>(iab_total);
  }
  for (const BaseStation& s : deployment.stations) {
    auto it = ue_counts.find(s.id);
    const std::size_t n = (it == ue_counts.end()) ? 0 : it->second;
    alloc.access_per_ue_hz[s.id] =
        (n == 0) ? 0.0 : access_pool / static_cast<double>(n);
  }
  return alloc;
}

BeamPlan plan_beams(const Deployment& deployment, const Association& assoc,
                    const std::vector<Point>& ues,
                    const std::vector<NcrState>& ncr_states, bool ncrs_active,
                    RandomStream& rng,
                    const std::unordered_map<int, Point>* pinned) {
  BeamPlan plan;
  std::unordered_map<int, std::vector<Point>> receivers;
  for (std::size_t i = 0; i < assoc.ue_to_bs.size(); ++i) {
    receivers[assoc.ue_to_bs[i]].push_back(ues[i]);
  }

  std::vector<int> backhaul_ids;
  backhaul_ids.reserve(assoc.sbs_backhaul.size());
  for (const auto& [id, route] : assoc.sbs_backhaul) backhaul_ids.push_back(id);
  std::sort(backhaul_ids.begin(), backhaul_ids.end());
  for (int id : backhaul_ids) {
    const BackhaulRoute& route = assoc.sbs_backhaul.at(id);
    Point first_hop;
    switch (route.path) {
      case BackhaulPathKind::Direct:
        first_hop = station_by_id(deployment, route.donor_id).position;
        break;
      case BackhaulPathKind::ViaRis:
        first_hop =
            deployment.ris_panels[static_cast<std::size_t>(route.via_index)]
                .position;
        break;
      case BackhaulPathKind::ViaNcr:
        first_hop =
            deployment.ncrs[static_cast<std::size_t>(route.via_index)]
                .config.position;
        break;
    }
    plan.sbs_rx_point[id] = first_hop;
    // The donor's candidate receiver for this child is the first hop as the
    // donor sees it: the station itself on the direct path, otherwise the
    // relay element.
    const Point donor_side = (route.path == BackhaulPathKind::Direct)
                                 ? station_by_id(deployment, id).position
                                 : first_hop;
    receivers[route.donor_id].push_back(donor_side);
  }

  for (int id : sorted_station_ids(deployment)) {
    if (pinned != nullptr) {
      auto it = pinned->find(id);
      if (it != pinned->end()) {
        plan.station_target[id] = it->second;
        continue;
      }
    }
    auto it = receivers.find(id);
    if (it == receivers.end() || it->second.empty()) continue;  // silent
    const std::uint64_t pick = rng.uniform_index(it->second.size());
    plan.station_target[id] = it->second[static_cast<std::size_t>(pick)];
  }

  if (ncrs_active) {
    for (const NcrState& state : ncr_states) {
      if (state.child_sbs_id >= 0) plan.active_ncrs.push_back(state.ncr_index);
    }
  }
  return plan;
}

double aggregate_interference_mw(const VictimRef& victim,
                                 int serving_station_id, int serving_ncr_index,
                                 const Deployment& deployment,
                                 const BeamPlan& beams,
                                 const std::vector<NcrState>& ncr_states,
                                 const Propagation& prop,
                                 const FoliageModel& foliage,
                                 const FadingProvider& fading) {
  double total_mw = 0.0;
  const auto rx_gain = [&victim](const Point& from) {
    if (victim.rx_pattern == nullptr) return victim.rx_gain_dbi;
    return antenna_gain_db(
        offset_angle(victim.position, victim.rx_beam_point, from),
        *victim.rx_pattern);
  };
  for (const BaseStation& s : deployment.stations) {
    if (s.id == serving_station_id) continue;
    if (s.id == victim.victim_station_id) continue;
    auto it = beams.station_target.find(s.id);
    if (it == beams.station_target.end()) continue;  // silent this epoch
    const double g_tx = antenna_gain_db(
        offset_angle(s.position, it->second, victim.position), s.antenna);
    const PathTerms t =
        path_terms(s.position, victim.position, LinkClass::Access, prop,
                   foliage);
    const double h = fading.link_gain(FadingProvider::station_tag(s.id),
                                      victim.fading_tag);
    total_mw += dbm_to_mw(received_power_dbm(s.p_tx_dbm,
                                             g_tx + rx_gain(s.position),
                                             t.path_db, t.foliage_db,
                                             t.rain_db, h));
  }
  for (int idx : beams.active_ncrs) {
    if (idx == serving_ncr_index) continue;
    const NcrState& state = ncr_states[static_cast<std::size_t>(idx)];
    const NcrNode& ncr = deployment.ncrs[static_cast<std::size_t>(idx)];
    const Point aim =
        station_by_id(deployment, state.child_sbs_id).position;
    const double g_tx = antenna_gain_db(
        offset_angle(ncr.config.position, aim, victim.position), ncr.antenna);
    const PathTerms t = path_terms(ncr.config.position, victim.position,
                                   LinkClass::Access, prop, foliage);
    const double h = fading.link_gain(FadingProvider::ncr_tag(
                                          static_cast<std::size_t>(idx)),
                                      victim.fading_tag);
    total_mw += dbm_to_mw(
        received_power_dbm(state.p_out_dbm, g_tx + rx_gain(ncr.config.position),
                           t.path_db, t.foliage_db, t.rain_db, h));
  }
  return total_mw;
}

RateReport compute_rates(const Deployment& deployment,
                         const std::vector<Point>& ues,
                         const Association& assoc,
                         const BandwidthAllocation& allocation,
                         const BeamPlan& beams,
                         const std::vector<NcrState>& ncr_states,
                         const ResourceSplit& split, const Propagation& prop,
                         const FoliageModel& foliage,
                         const FadingProvider& fading) {
  (void)split;
  RateReport report;
  const double noise_mw = dbm_to_mw(
      noise_power_dbm(prop.carrier.bandwidth_hz, prop.noise_figure_db));

  std::unordered_map<int, std::size_t> ue_counts;
  for (int id : assoc.ue_to_bs) ++ue_counts[id];

  std::vector<int> backhaul_ids;
  for (const auto& [id, route] : assoc.sbs_backhaul) backhaul_ids.push_back(id);
  std::sort(backhaul_ids.begin(), backhaul_ids.end());

  std::unordered_map<int, double> pipe_bps;
  for (int id : backhaul_ids) {
    const BackhaulRoute& route = assoc.sbs_backhaul.at(id);
    const BaseStation& sbs = station_by_id(deployment, id);
    const BaseStation& donor = station_by_id(deployment, route.donor_id);
    auto share_it = allocation.backhaul_hz.find(id);
    const double share_hz =
        (share_it == allocation.backhaul_hz.end()) ? 0.0 : share_it->second;

    double sinr = 0.0;
    switch (route.path) {
      case BackhaulPathKind::Direct: {
        const PathTerms t = path_terms(donor.position, sbs.position,
                                       LinkClass::BackhaulDirect, prop,
                                       foliage);
        const double h =
            fading.link_gain(FadingProvider::station_tag(donor.id),
                             FadingProvider::station_tag(id));
        const double s_mw = dbm_to_mw(received_power_dbm(
            donor.p_tx_dbm,
            donor.antenna.g_main_dbi + sbs.antenna.g_main_dbi, t.path_db,
            t.foliage_db, t.rain_db, h));
        VictimRef victim;
        victim.position = sbs.position;
        victim.fading_tag = FadingProvider::station_tag(id);
        victim.rx_pattern = &sbs.antenna;
        victim.rx_beam_point = beams.sbs_rx_point.at(id);
        victim.victim_station_id = id;
        // A repeater aimed at this node relays the donor's own waveform, so
        // it adds a usable echo rather than interference; skip it.
        int echo_ncr = -1;
        for (int idx : beams.active_ncrs) {
          if (ncr_states[static_cast<std::size_t>(idx)].child_sbs_id == id) {
            echo_ncr = idx;
            break;
          }
        }
        const double i_mw = aggregate_interference_mw(
            victim, donor.id, echo_ncr, deployment, beams, ncr_states, prop,
            foliage, fading);
        sinr = s_mw / (i_mw + noise_mw);
        break;
      }
      case BackhaulPathKind::ViaRis: {
        sinr = dbm_to_mw(donor.p_tx_dbm) * route.ris_gain / noise_mw;
        break;
      }
      case BackhaulPathKind::ViaNcr: {
        const NcrState& state =
            ncr_states[static_cast<std::size_t>(route.via_index)];
        const NcrChildLevels lv = ncr_child_levels(
            state,
            deployment.ncrs[static_cast<std::size_t>(route.via_index)], sbs,
            prop, foliage);
        sinr = dbm_to_mw(lv.signal_dbm) /
               (dbm_to_mw(lv.forwarded_noise_dbm) + noise_mw);
        break;
      }
    }
    const double rate =
        (share_hz > 0.0) ? share_hz * std::log2(1.0 + sinr) : 0.0;
    pipe_bps[id] = rate;
    report.backhaul_rows.push_back(
        {id, route.path, route.via_index, linear_to_db(sinr), rate});
  }

  for (std::size_t i = 0; i < ues.size(); ++i) {
    const int sid = assoc.ue_to_bs[i];
    const BaseStation& s = station_by_id(deployment, sid);
    auto bw_it = allocation.access_per_ue_hz.find(sid);
    const double bw_hz =
        (bw_it == allocation.access_per_ue_hz.end()) ? 0.0 : bw_it->second;

    const PathTerms t =
        path_terms(s.position, ues[i], LinkClass::Access, prop, foliage);
    const double h = fading.link_gain(FadingProvider::station_tag(sid),
                                      FadingProvider::ue_tag(i));
    const double s_mw = dbm_to_mw(received_power_dbm(
        s.p_tx_dbm, s.antenna.g_main_dbi + prop.ue_gain_dbi, t.path_db,
        t.foliage_db, t.rain_db, h));
    VictimRef victim;
    victim.position = ues[i];
    victim.fading_tag = FadingProvider::ue_tag(i);
    victim.rx_gain_dbi = prop.ue_gain_dbi;
    const double i_mw = aggregate_interference_mw(victim, sid, -1, deployment,
                                                  beams, ncr_states, prop,
                                                  foliage, fading);
    const double sinr = s_mw / (i_mw + noise_mw);
    const double access_rate =
        (bw_hz > 0.0) ? bw_hz * std::log2(1.0 + sinr) : 0.0;

    UeRateRow row;
    row.ue_index = i;
    row.serving = sid;
    row.access_sinr_db = linear_to_db(sinr);
    row.access_rate_bps = access_rate;
    row.rate_bps = access_rate;
    if (s.kind == NodeKind::SbsIab) {
      const double share =
          pipe_bps.at(sid) / static_cast<double>(ue_counts.at(sid));
      row.backhaul_share_bps = share;
      row.rate_bps = std::min(access_rate, share);
    }
    report.ue_rows.push_back(row);
  }
  return report;
}

}  // namespace iabsim
