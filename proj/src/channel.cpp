#include "iabsim/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace iabsim {

namespace {
std::atomic<std::uint64_t> g_clamp_count{0};
}

double path_loss_db(double distance_m, double fc_ghz, double alpha) {
  if (!(fc_ghz > 0.0)) throw std::invalid_argument("carrier must be > 0 GHz");
  if (distance_m < 1.0) {
    g_clamp_count.fetch_add(1, std::memory_order_relaxed);
    distance_m = 1.0;
  }
  return 32.4 + 10.0 * alpha * std::log10(distance_m) +
         20.0 * std::log10(fc_ghz);
}

std::uint64_t path_loss_clamp_count() {
  return g_clamp_count.load(std::memory_order_relaxed);
}

void reset_path_loss_clamp_count() {
  g_clamp_count.store(0, std::memory_order_relaxed);
}

double antenna_gain_db(double theta_rad, const AntennaPattern& pattern) {
  const double offset = std::fabs(theta_rad);
  return offset <= pattern.hpbw_rad / 2.0 ? pattern.g_main_dbi
                                          : pattern.g_side_dbi;
}

double foliage_loss_db(double in_leaf_depth_m, double out_of_leaf_depth_m,
                       double fc_ghz) {
  if (in_leaf_depth_m < 0.0 || out_of_leaf_depth_m < 0.0) {
    throw std::invalid_argument("vegetation depths must be >= 0");
  }
  const double f_mhz = fc_ghz * 1000.0;
  double loss = 0.0;
  if (in_leaf_depth_m > 0.0) {
    loss += 0.39 * std::pow(f_mhz, 0.39) * std::pow(in_leaf_depth_m, 0.25);
  }
  if (out_of_leaf_depth_m > 0.0) {
    loss += 0.37 * std::pow(f_mhz, 0.18) * std::pow(out_of_leaf_depth_m, 0.59);
  }
  return loss;
}

double rain_loss_db(double rate_mm_per_hr, double distance_m,
                    const RainCoefficients& coeff) {
  if (rate_mm_per_hr < 0.0 || distance_m < 0.0) {
    throw std::invalid_argument("rain rate and distance must be >= 0");
  }
  if (rate_mm_per_hr == 0.0) return 0.0;
  const double gamma_db_per_km =
      coeff.k * std::pow(rate_mm_per_hr, coeff.alpha_rain);
  return gamma_db_per_km * (distance_m / 1000.0);
}

double sample_fading_power(RandomStream& rng) { return rng.exponential(); }

double received_power_dbm(double p_tx_dbm, double gains_db, double path_db,
                          double foliage_db, double rain_db,
                          double fading_power) {
  if (fading_power < 0.0) throw std::invalid_argument("fading power < 0");
  if (fading_power == 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return p_tx_dbm + gains_db - path_db - foliage_db - rain_db +
         10.0 * std::log10(fading_power);
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace iabsim
