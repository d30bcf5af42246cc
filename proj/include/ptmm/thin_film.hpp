#pragma once

#include <complex>

#include "ptmm/stack.hpp"

namespace ptmm {

// Classical TE thin-film calculator (Abeles characteristic matrices).
// Deliberately shares no code with the transfer-matrix engine beyond the
// C = sqrt(n^2 - sin^2 theta) convention, so agreement between the two is
// evidence rather than tautology. TE is the polarization whose interface
// conditions (field and derivative continuous) coincide with the photon
// matching conditions; TM (q = C/n^2) would not match and is out of scope.

struct CharacteristicMatrix {
  std::complex<double> m11, m12, m21, m22;
};

// [[cos d, -i sin d / q], [-i q sin d, cos d]] with d = K0 C thickness and
// q = C. Unimodular for lossless layers.
CharacteristicMatrix characteristic_matrix(const Layer& layer, double theta,
                                           double omega);

struct FluxSplit {
  double transmissivity;
  double reflectivity;
};

// Multiplies layer matrices in traversal order and applies the two-ambient
// formula with q0 = qs = C1 (vacuum both sides):
//   t = 2 q0 / (q0 m11 + q0 qs m12 + m21 + qs m22).
FluxSplit classical_transmissivity(const Stack& stack, double theta,
                                   double omega);

// Closed-form quarter-wave mirror admittance: Y = (n_a/n_b)^(2N),
// R = ((1-Y)/(1+Y))^2, T = 1 - R. Valid when every layer is a quarter wave
// at the evaluation frequency, normal incidence, vacuum ambients.
FluxSplit quarter_wave_reference(double n_a, double n_b, std::size_t periods);

}  // namespace ptmm
