#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "iabsim/rng.hpp"

namespace iabsim {

struct CarrierConfig {
  double fc_ghz = 28.0;
  double bandwidth_hz = 4.0e8;
};

struct PathLossConfig {
  double alpha_los = 2.0;
  double alpha_nlos = 2.2;
};

struct AntennaPattern {
  double g_main_dbi = 0.0;
  double g_side_dbi = 0.0;
  double hpbw_rad = 0.0;  // full half-power beamwidth
};

struct RainCoefficients {
  double k = 0.0;
  double alpha_rain = 0.0;
};

struct RainConfig {
  double rate_mm_per_hr = 0.0;
  RainCoefficients coeff;
};

// Close-in model: 32.4 + 10*alpha*log10(d[m]) + 20*log10(fc[GHz]).
// Distances below the 1 m reference clamp to 1 m and bump a diagnostic
// counter (sub-reference geometry is a scenario smell, not an error).
double path_loss_db(double distance_m, double fc_ghz, double alpha);
std::uint64_t path_loss_clamp_count();
void reset_path_loss_clamp_count();

// Two-level sectored pattern: g_main inside |theta| <= hpbw/2 (inclusive),
// g_side everywhere else. theta is the offset from boresight.
double antenna_gain_db(double theta_rad, const AntennaPattern& pattern);

// Fitted vegetation loss, one power-law branch per seasonal state, applied to
// the link's accumulated depth per state and summed. Frequency enters in MHz
// (the fit's native unit; the carrier is passed in GHz everywhere else).
//   in-leaf:     0.39 * f_mhz^0.39 * depth^0.25
//   out-of-leaf: 0.37 * f_mhz^0.18 * depth^0.59
double foliage_loss_db(double in_leaf_depth_m, double out_of_leaf_depth_m,
                       double fc_ghz);

// Power-law specific attenuation gamma = k * rate^alpha_rain dB/km, scaled by
// path length.
double rain_loss_db(double rate_mm_per_hr, double distance_m,
                    const RainCoefficients& coeff);

// Per-frequency (k, alpha_rain) defaults, linearly interpolated between the
// embedded table rows and clamped at the table ends.
RainCoefficients rain_coefficients_for(double fc_ghz);
struct RainTableRow {
  double fc_ghz;
  double k;
  double alpha_rain;
};
const std::vector<RainTableRow>& rain_coefficient_table();

// Rayleigh amplitude => unit-mean exponential power gain.
double sample_fading_power(RandomStream& rng);

// Full budget composition in dB domain. fading_power = 0 maps to -inf dBm.
double received_power_dbm(double p_tx_dbm, double gains_db, double path_db,
                          double foliage_db, double rain_db,
                          double fading_power);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);
double db_to_linear(double db);
double linear_to_db(double lin);

}  // namespace iabsim
