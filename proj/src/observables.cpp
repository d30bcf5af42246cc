#include "ptmm/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace ptmm {

IncidentState default_incident_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {{Complex{0.0, 0.0}, Complex{inv_sqrt2, 0.0}, Complex{0.0, inv_sqrt2}}};
}

double density_at(const CoefficientPair& pair, const WaveParams& params,
                  double c_layer, double local_x) {
  double direct = 0.0;
  Complex cross{};
  for (int i = 0; i < 3; ++i) {
    direct += std::norm(pair.forward[i]) + std::norm(pair.backward[i]);
    cross += std::conj(pair.forward[i]) * pair.backward[i];
  }
  const double phase = -2.0 * params.k0 * c_layer * local_x;
  const Complex osc{std::cos(phase), std::sin(phase)};
  return direct + 2.0 * std::real(cross * osc);
}

double current_at(const CoefficientPair& pair, const WaveParams& params,
                  double c_layer, double local_x) {
  const Amplitude3& f = pair.forward;
  const Amplitude3& b = pair.backward;
  // i(z - z*) = -2 Im z, applied to each quadratic pairing of Eq-style terms
  const double forward_term = 2.0 * std::imag(std::conj(f[1]) * f[2]);
  const double backward_term = 2.0 * std::imag(std::conj(b[1]) * b[2]);
  const Complex cross =
      Complex{0.0, 1.0} * (std::conj(f[2]) * b[1] - std::conj(f[1]) * b[2]);
  const double phase = -2.0 * params.k0 * c_layer * local_x;
  const Complex osc{std::cos(phase), std::sin(phase)};
  return forward_term + backward_term + 2.0 * std::real(cross * osc);
}

FieldProfile sample_profile(const Stack& stack, double theta, double omega,
                            std::size_t samples) {
  if (stack.empty()) {
    throw std::invalid_argument("profile of empty stack");
  }
  if (samples < 2) {
    throw std::invalid_argument("profile needs at least 2 samples");
  }
  const ScatterSolution solution =
      solve_scatter(stack, theta, omega, default_incident_state().amplitude);

  FieldProfile profile;
  profile.x.resize(samples);
  profile.rho.resize(samples);
  profile.j_over_c.resize(samples);
  const double length = stack.total_length();
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = (i + 1 == samples)
                         ? length
                         : length * static_cast<double>(i) /
                               static_cast<double>(samples - 1);
    const LayerLocation loc = stack.locate(x);
    const CoefficientPair& pair = solution.layer_coefficients[loc.layer_index];
    const double c_layer = solution.params.c_layer[loc.layer_index];
    profile.x[i] = x;
    profile.rho[i] = density_at(pair, solution.params, c_layer, loc.local_x);
    profile.j_over_c[i] =
        current_at(pair, solution.params, c_layer, loc.local_x);
  }
  return profile;
}

}  // namespace ptmm
