#pragma once

#include <array>
#include <complex>
#include <vector>

#include "ptmm/stack.hpp"
#include "ptmm/wave.hpp"

namespace ptmm {

using Complex = std::complex<double>;
using Amplitude3 = std::array<Complex, 3>;

// Boundary amplitudes: components 0..2 are the incident (rightward) wave in
// the left vacuum, components 3..5 the reflected (leftward) wave.
using Boundary6 = std::array<Complex, 6>;

// 2x2 scalar block of the interface/propagation matrices. The photon
// wavefunction has three components, but every matching matrix acts on them
// as (scalar 2x2) x identity, so the full 6x6 chain reduces exactly to this
// block applied per component.
struct TransferBlock {
  Complex m11, m12, m21, m22;

  static TransferBlock identity() { return {1.0, 0.0, 0.0, 1.0}; }
  Complex det() const { return m11 * m22 - m12 * m21; }
};

TransferBlock multiply(const TransferBlock& lhs, const TransferBlock& rhs);

// Vacuum -> first layer matching at x = 0:
//   (1/2) [[p, q], [q, p]],  p = 1 + C1/C_first,  q = 1 - C1/C_first.
TransferBlock entry_block(const WaveParams& params, double n_first);

// Propagation through `from` (thickness d, direction cosine C_from) followed
// by matching into a medium with direction cosine to_c:
//   (1/2) [[(1+rho) E, (1-rho)/E], [(1-rho) E, (1+rho)/E]],
//   rho = C_from/to_c,  E = exp(i K0 C_from d).
// det = rho, so the full chain including the exit interface telescopes to
// determinant 1.
TransferBlock layer_block(const WaveParams& params, const Layer& from,
                          double to_c);

// Forward/backward amplitude vectors of one layer, phases referenced to the
// layer's own left edge.
struct CoefficientPair {
  Amplitude3 forward;
  Amplitude3 backward;
};

// Walks the matching chain left to right and returns each layer's
// coefficient pair. The block of layer k (with the interface into layer k+1,
// or into vacuum for the last layer) is applied component-wise.
std::vector<CoefficientPair> propagate_coefficients(const Stack& stack,
                                                    const WaveParams& params,
                                                    const Boundary6& boundary);

struct ScatterSolution {
  Complex r;  // reflected / incident amplitude ratio
  Complex t;  // transmitted / incident amplitude ratio
  double transmissivity;  // |t|^2
  double reflectivity;    // |r|^2
  Boundary6 boundary;     // (incident; r * incident)
  std::vector<CoefficientPair> layer_coefficients;
  WaveParams params;
};

// Solves the two-point boundary problem: unit-scaled incidence from the left
// vacuum, no backward wave in the right vacuum. With G the full chain acting
// on (forward, backward) pairs, (t, 0)^T = G (1, r)^T gives r = -G21/G22 and
// t = G11 + G12 r. For lossless real-index stacks |G22|^2 = 1 + |G21|^2, so
// the system cannot be singular; a failure of that bound throws.
ScatterSolution solve_scatter(const Stack& stack, double theta, double omega,
                              const Amplitude3& incident);

}  // namespace ptmm
