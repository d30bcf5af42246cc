#pragma once

#include <vector>

#include "ptmm/stack.hpp"

namespace ptmm {

// Frequency/angle dependent quantities shared by both engines.
//
// For a medium of index n at incidence angle theta (measured in the vacuum
// ambient), C = sqrt(n^2 - sin^2 theta) is the longitudinal direction cosine
// scaled by n; the phase accumulated across a slab of thickness d is
// K0 * C * d. With vacuum ambients and n >= 1 every C is real and positive
// for theta in [0, pi/2).
struct WaveParams {
  double omega;      // rad/s
  double k0;         // rad/nm, omega / c
  double sin_theta;
  double c_ambient;  // sqrt(1 - sin^2 theta)
  std::vector<double> c_layer;  // one entry per layer
};

double c_for_index(double refractive_index, double sin_theta);

// Preconditions: omega > 0, 0 <= theta < pi/2.
WaveParams wave_params(double omega, double theta, const Stack& stack);

}  // namespace ptmm
