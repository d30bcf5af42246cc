#include "ptmm/wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ptmm/constants.hpp"

namespace ptmm {

double c_for_index(double refractive_index, double sin_theta) {
  return std::sqrt(refractive_index * refractive_index -
                   sin_theta * sin_theta);
}

WaveParams wave_params(double omega, double theta, const Stack& stack) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("omega must be > 0");
  }
  if (!(theta >= 0.0) || !(theta < std::numbers::pi / 2)) {
    throw std::invalid_argument("theta must lie in [0, pi/2)");
  }
  WaveParams params;
  params.omega = omega;
  params.k0 = omega / kSpeedOfLightNmPerS;
  params.sin_theta = std::sin(theta);
  params.c_ambient = c_for_index(1.0, params.sin_theta);
  params.c_layer.reserve(stack.size());
  for (const Layer& layer : stack.layers()) {
    params.c_layer.push_back(c_for_index(layer.refractive_index,
                                         params.sin_theta));
  }
  return params;
}

}  // namespace ptmm
