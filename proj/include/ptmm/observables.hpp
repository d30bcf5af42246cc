#pragma once

#include <cstddef>
#include <vector>

#include "ptmm/transfer.hpp"

namespace ptmm {

// Incident photon state. The default is circularly polarized so that the
// density normalizes to 1 and the current to +c:
//   sum |a_i|^2 = 1,  i (a3* a2 - a2* a3) = +1.
struct IncidentState {
  Amplitude3 amplitude;
};

IncidentState default_incident_state();

// rho(local_x) inside one layer, from that layer's coefficient pair:
//   sum|f|^2 + sum|b|^2 + 2 Re[(f . b) exp(-2i K0 C local_x)]
// where the conjugation sits on f. The oscillation uses the layer's own C;
// the transverse phase factor cancels in every quadratic observable, so y
// never appears.
double density_at(const CoefficientPair& pair, const WaveParams& params,
                  double c_layer, double local_x);

// J(local_x)/c inside one layer:
//   i(f3* f2 - f2* f3) + i(b3* b2 - b2* b3)
//   + 2 Re[ i(f3* b2 - f2* b3) exp(-2i K0 C local_x) ].
// For the scattering solutions produced here both waves carry the incident
// polarization vector, which is the +1 eigenvector of the spin-projection
// along x; the expression then coincides with rho(x) pointwise.
double current_at(const CoefficientPair& pair, const WaveParams& params,
                  double c_layer, double local_x);

struct FieldProfile {
  std::vector<double> x;         // nm, strictly increasing over [0, L]
  std::vector<double> rho;       // probability density, incident wave = 1
  std::vector<double> j_over_c;  // probability current in units of c
};

// Uniform grid over [0, total_length], both endpoints included. Grid points
// on interfaces evaluate the right-hand layer (same rule as Stack::locate).
FieldProfile sample_profile(const Stack& stack, double theta, double omega,
                            std::size_t samples);

}  // namespace ptmm
