#pragma once

#include <Eigen/Dense>
#include <vector>

#include "iabsim/geometry.hpp"

namespace iabsim {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexRowVector = Eigen::RowVectorXcd;
using ComplexVector = Eigen::VectorXcd;

struct RisPanel {
  Point position;
  int elements = 1;
  double element_spacing_wl = 0.5;  // in wavelengths
};

struct PhaseConfig {
  std::vector<double> phases;  // radians in [0, 2*pi), one per element
};

struct NcrConfig {
  double amp_gain_db = 0.0;
  double max_output_power_dbm = 0.0;
  Point position;
};

// Rank-one line-of-sight channel: sqrt(linear gain) * a_rx * a_tx^H with
// uniform-linear-array steering vectors taken at the geometric link angle
// and a common propagation phase. Entries of each steering vector are unit
// modulus, so ||H||_F^2 = linear_gain * tx_elements * rx_elements.
ComplexMatrix synthesize_los_channel(const Point& tx_position,
                                     const Point& rx_position, int tx_elements,
                                     int rx_elements, double fc_ghz,
                                     double large_scale_loss_db,
                                     double element_spacing_wl = 0.5);

// g_ru * diag(e^{j*phase}) * g_br
ComplexRowVector cascaded_channel(const ComplexRowVector& g_ru,
                                  const PhaseConfig& phases,
                                  const ComplexMatrix& g_br);

struct RisOptimum {
  PhaseConfig phases;
  ComplexVector beamformer;  // unit norm
  double gain = 0.0;         // |g_ru * Omega * g_br * w|^2
  std::vector<double> trajectory;  // gain after each alternating iteration
};

// Alternating optimization. Given w: phase m cancels arg([g_ru]_m*[g_br w]_m)
// so all cascade terms add coherently. Given phases: w is the maximum-ratio
// beamformer (normalized conjugate of the cascaded row). The objective never
// decreases across iterations.
RisOptimum optimize_ris(const ComplexMatrix& g_br, const ComplexRowVector& g_ru,
                        double tolerance = 1e-12, int max_iterations = 64);

// Upper bound (sum_m |[g_ru]_m| * ||row_m(g_br)||)^2, attained for rank-one
// g_br.
double ris_gain_upper_bound(const ComplexMatrix& g_br,
                            const ComplexRowVector& g_ru);

// Spectral efficiency log2(1 + P*gain/sigma^2) scaled by the backhaul
// bandwidth share.
double ris_backhaul_rate(double p_tx_dbm, double gain, double noise_power_dbm,
                         double bandwidth_hz);

struct NcrForward {
  double p_out_dbm = 0.0;
  double applied_gain_db = 0.0;  // p_out - p_in; feeds forwarded-noise level
};

// Amplify-and-forward with a hard output power cap. The same effective gain
// applies to the repeater's input noise, which the caller must carry to the
// child receiver alongside the signal.
NcrForward ncr_forward(double p_in_dbm, const NcrConfig& config);

}  // namespace iabsim
