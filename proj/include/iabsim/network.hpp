#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "iabsim/channel.hpp"
#include "iabsim/geometry.hpp"
#include "iabsim/ris.hpp"
#include "iabsim/rng.hpp"

namespace iabsim {

enum class NodeKind { MbsDonor, SbsIab, SbsWired };

struct BaseStation {
  int id = 0;  // unique across all base stations
  NodeKind kind = NodeKind::MbsDonor;
  Point position;
  double p_tx_dbm = 0.0;
  AntennaPattern antenna;
  int elements = 1;  // transmit array size (feeds the reflected-path cascade)
};

// A repeater node: amplify-and-forward config plus its panel pattern, used on
// both hops and for the interference it radiates while active.
struct NcrNode {
  NcrConfig config;
  AntennaPattern antenna;
};

struct Deployment {
  std::vector<BaseStation> stations;
  std::vector<RisPanel> ris_panels;  // panel id = index
  std::vector<NcrNode> ncrs;         // repeater id = index
};

// Backhaul carriers a comparison variant may use. Direct is always allowed.
struct PathPolicy {
  bool allow_ris = true;
  bool allow_ncr = true;
};

enum class BackhaulPathKind { Direct, ViaRis, ViaNcr };

struct BackhaulRoute {
  int donor_id = -1;
  BackhaulPathKind path = BackhaulPathKind::Direct;
  int via_index = -1;    // RIS panel / repeater index for the via paths
  double ris_gain = 0.0; // optimized cascade gain when path == ViaRis
};

struct Association {
  std::vector<int> ue_to_bs;  // serving station id per UE
  std::unordered_map<int, BackhaulRoute> sbs_backhaul;  // per IAB SBS id
};

// Foliage exposure differs by what a link is for: donor-to-SBS backhaul runs
// cross-country, reflector/repeater hops sit on engineered corridors, access
// links stay inside the cell.
enum class LinkClass { Access, BackhaulDirect, Leg };

// Vegetation seen by a link: either geometric strip crossings of a sampled
// tree field, or fixed per-class depths (seasonal scenarios, pinned oracles).
class FoliageModel {
 public:
  static FoliageModel from_field(TreeField field);
  static FoliageModel from_depths(VegetationDepth backhaul, VegetationDepth leg,
                                  VegetationDepth access);

  VegetationDepth depth(const Point& a, const Point& b, LinkClass link) const;
  bool stochastic() const { return stochastic_; }

 private:
  bool stochastic_ = false;
  TreeField field_;
  VegetationDepth backhaul_;
  VegetationDepth leg_;
  VegetationDepth access_;
};

struct Propagation {
  CarrierConfig carrier;
  PathLossConfig exponents;
  AntennaPattern ncr_pattern;  // shared by all repeaters
  double ue_gain_dbi = 0.0;    // UEs are omnidirectional
  double noise_figure_db = 7.0;
  RainConfig rain;    // coefficients already resolved for the carrier
  int tx_elements = 16;
  int rx_elements = 4;  // UE array size; recorded for the manifest
};

// Large-scale budget between two points. The path-loss exponent switches to
// its non-line-of-sight value whenever the link crosses any vegetation.
struct PathTerms {
  double path_db = 0.0;
  double foliage_db = 0.0;
  double rain_db = 0.0;
  double distance_m = 0.0;
};
PathTerms path_terms(const Point& a, const Point& b, LinkClass link,
                     const Propagation& prop, const FoliageModel& foliage);

// Deterministic per-link Rayleigh power gains keyed by (seed, trial, link
// endpoints), so the same link sees the same draw no matter which code path
// asks first, and paired comparison variants share all fading.
class FadingProvider {
 public:
  FadingProvider(std::uint64_t master_seed, std::uint64_t trial, bool unit)
      : master_seed_(master_seed), trial_(trial), unit_(unit) {}

  double link_gain(std::uint64_t tag_a, std::uint64_t tag_b) const;

  static std::uint64_t station_tag(int id);
  static std::uint64_t ue_tag(std::size_t index);
  static std::uint64_t ncr_tag(std::size_t index);

 private:
  std::uint64_t master_seed_ = 0;
  std::uint64_t trial_ = 0;
  bool unit_ = false;
};

// -174 dBm/Hz thermal floor integrated over the bandwidth, plus the receiver
// noise figure.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

// Each UE attaches to the base station with the highest fading-averaged
// received power, i.e. the full budget with expected unit fading and the
// candidate assumed to beamform at the UE. Ties break toward the lowest id.
// Pass a provider to fold instantaneous fading into the ranking instead.
std::vector<int> associate_ues(const std::vector<Point>& ues,
                               const Deployment& deployment,
                               const Propagation& prop,
                               const FoliageModel& foliage,
                               const FadingProvider* fading = nullptr);

// Reflected-path gains are trial-invariant whenever the hop budgets are
// (fixed geometry, per-class depths): callers cache the table and rebuild it
// only when the hop environment changes.
struct RisGainEntry {
  int sbs_id = -1;
  int panel_index = -1;
  double gain = 0.0;
};
using RisGainTable = std::vector<RisGainEntry>;
RisGainTable build_ris_gains(const Deployment& deployment,
                             const Propagation& prop,
                             const FoliageModel& foliage);

// Forwarding state of a deployed repeater: input taken from its donor's
// boresight over the engineered hop, output clamped by the power cap, input
// noise carried forward at the same effective gain. The child is the nearest
// IAB base station; the repeater aims there while active.
struct NcrState {
  int ncr_index = -1;
  int donor_id = -1;
  int child_sbs_id = -1;
  double p_out_dbm = 0.0;
  double noise_out_dbm = 0.0;
};
std::vector<NcrState> plan_ncr_states(const Deployment& deployment,
                                      const Propagation& prop,
                                      const FoliageModel& foliage);

// Donor = minimum total loss (path + foliage + rain). Among the allowed
// carriers each IAB base station takes the one with the highest
// fading-averaged backhaul spectral efficiency; the bandwidth share is common
// to all carriers, so ranking by SINR is ranking by rate. Ties prefer the
// direct path, then the lowest via index.
std::unordered_map<int, BackhaulRoute> associate_backhaul(
    const Deployment& deployment, const Propagation& prop,
    const FoliageModel& foliage, const PathPolicy& policy,
    const RisGainTable& ris_gains, const std::vector<NcrState>& ncr_states);

struct ResourceSplit {
  double psi = 0.5;
  double total_bandwidth_hz = 4.0e8;
};

struct BandwidthAllocation {
  std::unordered_map<int, double> backhaul_hz;       // per IAB SBS id
  std::unordered_map<int, double> access_per_ue_hz;  // per station id
};

// Backhaul pool psi*B splits over IAB base stations in proportion to their
// attached-UE counts (zero UEs, zero share; empty pool divides nothing).
// Every station's access pool (1-psi)*B splits equally over its own UEs.
BandwidthAllocation allocate_bandwidth(
    const ResourceSplit& split, const Deployment& deployment,
    const std::unordered_map<int, std::size_t>& ue_counts);

// One scheduling epoch per trial: every station with at least one receiver
// (own UEs, plus first hops of its IAB children for the donor) points one
// beam at a uniformly drawn receiver; stations with nothing to serve stay
// silent. Active repeaters always aim at their child. Pinned targets override
// the draw for the stations they name.
struct BeamPlan {
  std::unordered_map<int, Point> station_target;
  std::unordered_map<int, Point> sbs_rx_point;  // IAB SBS id -> first-hop aim
  std::vector<int> active_ncrs;
};
BeamPlan plan_beams(const Deployment& deployment, const Association& assoc,
                    const std::vector<Point>& ues,
                    const std::vector<NcrState>& ncr_states, bool ncrs_active,
                    RandomStream& rng,
                    const std::unordered_map<int, Point>* pinned = nullptr);

// Receiver view for interference aggregation: position, fading identity, and
// the receive pattern (omni for UEs, the station's sectored pattern aimed at
// its first hop for backhaul receivers).
struct VictimRef {
  Point position;
  std::uint64_t fading_tag = 0;
  const AntennaPattern* rx_pattern = nullptr;  // null = omni at rx_gain_dbi
  Point rx_beam_point;
  double rx_gain_dbi = 0.0;
  int victim_station_id = -1;  // a receiving node never jams itself
};

// Sum of received power from every transmitter except the serving one: all
// beam-scheduled stations plus active repeaters, each weighted by its pattern
// at the offset between its own beam and the victim. Interference arrives
// over ambient side paths, which carry access-class foliage. UE-to-UE
// interference is out of scope (downlink).
double aggregate_interference_mw(const VictimRef& victim,
                                 int serving_station_id, int serving_ncr_index,
                                 const Deployment& deployment,
                                 const BeamPlan& beams,
                                 const std::vector<NcrState>& ncr_states,
                                 const Propagation& prop,
                                 const FoliageModel& foliage,
                                 const FadingProvider& fading);

struct UeRateRow {
  std::size_t ue_index = 0;
  int serving = -1;
  double access_sinr_db = 0.0;
  double access_rate_bps = 0.0;
  std::optional<double> backhaul_share_bps;  // pipe/N_k when served over IAB
  double rate_bps = 0.0;
};

struct BackhaulRow {
  int sbs_id = -1;
  BackhaulPathKind path = BackhaulPathKind::Direct;
  int via_index = -1;
  double sinr_db = 0.0;
  double rate_bps = 0.0;  // pipe rate over this station's backhaul share
};

struct RateReport {
  std::vector<UeRateRow> ue_rows;
  std::vector<BackhaulRow> backhaul_rows;
};

// End-to-end rates. Serving links use boresight gains (each receiver is
// served in its own slot); interference comes from the trial's beam plan.
// Direct backhaul is interference-limited like any access link; reflected
// and repeated backhaul are engineered noise-limited hops, the repeated one
// carrying the repeater's forwarded noise through the same second-hop
// channel as the signal. A UE served over IAB backhaul gets
// min(access rate, equal share of the serving station's backhaul pipe).
RateReport compute_rates(const Deployment& deployment,
                         const std::vector<Point>& ues,
                         const Association& assoc,
                         const BandwidthAllocation& allocation,
                         const BeamPlan& beams,
                         const std::vector<NcrState>& ncr_states,
                         const ResourceSplit& split, const Propagation& prop,
                         const FoliageModel& foliage,
                         const FadingProvider& fading);

}  // namespace iabsim
