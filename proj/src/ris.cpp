#include "iabsim/ris.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "iabsim/channel.hpp"

namespace iabsim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSpeedOfLight = 299792458.0;

// Steering vector for an N-element uniform linear array observed at angle
// `angle` from the array normal, element spacing in wavelengths.
ComplexVector steering(int elements, double spacing_wl, double angle) {
  ComplexVector a(elements);
  const double step = 2.0 * kPi * spacing_wl * std::sin(angle);
  for (int n = 0; n < elements; ++n) {
    a(n) = std::polar(1.0, step * n);
  }
  return a;
}

double wrap_phase(double phi) {
  const double two_pi = 2.0 * kPi;
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return phi;
}

}  // namespace

ComplexMatrix synthesize_los_channel(const Point& tx_position,
                                     const Point& rx_position, int tx_elements,
                                     int rx_elements, double fc_ghz,
                                     double large_scale_loss_db,
                                     double element_spacing_wl) {
  if (tx_elements < 1 || rx_elements < 1) {
    throw std::invalid_argument("array sizes must be positive");
  }
  if (fc_ghz <= 0.0) {
    throw std::invalid_argument("carrier frequency must be positive");
  }
  const double d = distance(tx_position, rx_position);
  const double lambda = kSpeedOfLight / (fc_ghz * 1e9);
  const double angle =
      std::atan2(rx_position.y - tx_position.y, rx_position.x - tx_position.x);
  const double amplitude = std::sqrt(db_to_linear(-large_scale_loss_db));
  const std::complex<double> scale =
      amplitude * std::polar(1.0, -2.0 * kPi * d / lambda);
  const ComplexVector a_tx = steering(tx_elements, element_spacing_wl, angle);
  const ComplexVector a_rx = steering(rx_elements, element_spacing_wl, angle);
  return scale * a_rx * a_tx.adjoint();
}

ComplexRowVector cascaded_channel(const ComplexRowVector& g_ru,
                                  const PhaseConfig& phases,
                                  const ComplexMatrix& g_br) {
  const Eigen::Index m = g_br.rows();
  if (g_ru.cols() != m) {
    throw std::invalid_argument("reflector-to-receiver row length mismatch");
  }
  if (static_cast<Eigen::Index>(phases.phases.size()) != m) {
    throw std::invalid_argument("phase vector length mismatch");
  }
  ComplexRowVector shifted(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    shifted(i) = g_ru(i) * std::polar(1.0, phases.phases[i]);
  }
  return shifted * g_br;
}

RisOptimum optimize_ris(const ComplexMatrix& g_br, const ComplexRowVector& g_ru,
                        double tolerance, int max_iterations) {
  const Eigen::Index m = g_br.rows();
  const Eigen::Index n = g_br.cols();
  if (g_ru.cols() != m) {
    throw std::invalid_argument("reflector-to-receiver row length mismatch");
  }
  if (m < 1 || n < 1) {
    throw std::invalid_argument("channel matrices must be non-empty");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be positive");
  }
  if (!(tolerance >= 0.0)) {
    throw std::invalid_argument("tolerance must be non-negative");
  }

  RisOptimum out;
  out.phases.phases.assign(static_cast<size_t>(m), 0.0);
  out.beamformer = ComplexVector::Zero(n);
  out.beamformer(0) = 1.0;

  if (g_br.norm() == 0.0 || g_ru.norm() == 0.0) {
    return out;  // dead link: gain stays 0, trajectory empty
  }

  // Start from the dominant right singular vector so g_br * w cannot vanish.
  Eigen::JacobiSVD<ComplexMatrix> svd(g_br, Eigen::ComputeThinV);
  ComplexVector w = svd.matrixV().col(0);

  // Each half-step maximizes the objective with the other block fixed, so the
  // true objective cannot decrease; once an iteration fails to improve we are
  // at a fixed point (any apparent drop is rounding) and keep the best state.
  std::vector<double> phases(static_cast<size_t>(m), 0.0);
  double best_gain = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    const ComplexVector via = g_br * w;  // M x 1
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::complex<double> term = g_ru(i) * via(i);
      phases[static_cast<size_t>(i)] =
          (std::abs(term) == 0.0) ? 0.0 : wrap_phase(-std::arg(term));
    }
    PhaseConfig candidate{phases};
    const ComplexRowVector cascade = cascaded_channel(g_ru, candidate, g_br);
    const double cascade_norm = cascade.norm();
    const double gain = cascade_norm * cascade_norm;
    if (gain <= best_gain) break;
    out.phases = std::move(candidate);
    if (cascade_norm > 0.0) {
      w = cascade.adjoint() / cascade_norm;
    }
    out.beamformer = w;
    out.trajectory.push_back(gain);
    const bool converged =
        best_gain >= 0.0 && gain - best_gain <= tolerance * best_gain;
    best_gain = gain;
    if (converged || cascade_norm == 0.0) break;
  }
  out.gain = std::max(best_gain, 0.0);
  return out;
}

double ris_gain_upper_bound(const ComplexMatrix& g_br,
                            const ComplexRowVector& g_ru) {
  if (g_ru.cols() != g_br.rows()) {
    throw std::invalid_argument("reflector-to-receiver row length mismatch");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < g_br.rows(); ++i) {
    sum += std::abs(g_ru(i)) * g_br.row(i).norm();
  }
  return sum * sum;
}

double ris_backhaul_rate(double p_tx_dbm, double gain, double noise_power_dbm,
                         double bandwidth_hz) {
  if (gain < 0.0 || bandwidth_hz < 0.0) {
    throw std::invalid_argument("gain and bandwidth must be non-negative");
  }
  const double snr = dbm_to_mw(p_tx_dbm) * gain / dbm_to_mw(noise_power_dbm);
  return bandwidth_hz * std::log2(1.0 + snr);
}

NcrForward ncr_forward(double p_in_dbm, const NcrConfig& config) {
  NcrForward fwd;
  fwd.p_out_dbm =
      std::min(p_in_dbm + config.amp_gain_db, config.max_output_power_dbm);
  fwd.applied_gain_db = fwd.p_out_dbm - p_in_dbm;
  return fwd;
}

}  // namespace iabsim
