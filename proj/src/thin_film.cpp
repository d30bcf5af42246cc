#include "ptmm/thin_film.hpp"

#include <cmath>

#include "ptmm/constants.hpp"
#include "ptmm/wave.hpp"

namespace ptmm {

namespace {

using Cx = std::complex<double>;

CharacteristicMatrix multiply(const CharacteristicMatrix& lhs,
                              const CharacteristicMatrix& rhs) {
  return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21,
          lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
          lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21,
          lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

}  // namespace

CharacteristicMatrix characteristic_matrix(const Layer& layer, double theta,
                                           double omega) {
  const double sin_theta = std::sin(theta);
  const double q = c_for_index(layer.refractive_index, sin_theta);
  const double delta = (omega / kSpeedOfLightNmPerS) * q * layer.thickness;
  const double c = std::cos(delta);
  const double s = std::sin(delta);
  return {Cx{c, 0.0}, Cx{0.0, -s / q}, Cx{0.0, -q * s}, Cx{c, 0.0}};
}

FluxSplit classical_transmissivity(const Stack& stack, double theta,
                                   double omega) {
  CharacteristicMatrix m{Cx{1.0, 0.0}, Cx{}, Cx{}, Cx{1.0, 0.0}};
  for (const Layer& layer : stack.layers()) {
    m = multiply(m, characteristic_matrix(layer, theta, omega));
  }
  // equal vacuum ambients: q0 = qs = C1
  const double q0 = c_for_index(1.0, std::sin(theta));
  const Cx denom = q0 * m.m11 + q0 * q0 * m.m12 + m.m21 + q0 * m.m22;
  const Cx t = 2.0 * q0 / denom;
  const Cx r = (q0 * m.m11 + q0 * q0 * m.m12 - m.m21 - q0 * m.m22) / denom;
  return {std::norm(t), std::norm(r)};
}

FluxSplit quarter_wave_reference(double n_a, double n_b, std::size_t periods) {
  const double admittance =
      std::pow(n_a / n_b, 2.0 * static_cast<double>(periods));
  const double ratio = (1.0 - admittance) / (1.0 + admittance);
  const double reflectivity = ratio * ratio;
  return {1.0 - reflectivity, reflectivity};
}

}  // namespace ptmm
