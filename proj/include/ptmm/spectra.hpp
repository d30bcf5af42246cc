#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ptmm/kernels.hpp"
#include "ptmm/observables.hpp"
#include "ptmm/stack.hpp"

namespace ptmm {

struct Spectrum {
  std::vector<double> omega;  // rad/s, strictly increasing
  std::vector<double> T;
  std::vector<double> R;
  std::vector<double> T_classical;
};

// Uniform inclusive grid. Points are evaluated by the selected kernel lane;
// the grid may be chunked across threads (PHOTONIC_TMM_THREADS caps the
// count) and results are assembled in grid order regardless of schedule.
Spectrum sweep_frequency(const Stack& stack, double theta, double omega_min,
                         double omega_max, std::size_t samples,
                         kernels::Lane lane = kernels::Lane::Auto);

struct GapInterval {
  double omega_lo;
  double omega_hi;
  double min_T;
};

// Maximal runs of consecutive samples with T < threshold; runs shorter than
// 2 samples are discarded. Intervals come out disjoint and ordered.
std::vector<GapInterval> find_band_gaps(const Spectrum& spectrum,
                                        double threshold);

struct EnvelopePoint {
  double x;    // position of the period's density maximum
  double rho;  // that maximum
};

// Per-period density maxima; periods are consecutive layer pairs. Samples
// landing on a period boundary count for both neighbors.
std::vector<EnvelopePoint> period_envelope(const FieldProfile& profile,
                                           const Stack& stack);

// Decay length of the per-period density envelope: least squares fit of
// ln(envelope) vs x. Returns nullopt when the envelope does not decay
// (slope >= 0). Throws when the stack holds fewer than 3 periods.
std::optional<double> decay_length(const FieldProfile& profile,
                                   const Stack& stack);

struct AmplitudeStats {
  double peak;
  double trough;
  double mean;
};

AmplitudeStats amplitude_stats(const FieldProfile& profile);

struct EdgeResonance {
  double omega;
  double T;
};

// First transmission maximum adjacent to one edge of a gap: a fine directed
// scan away from the edge locates the first local maximum, and a ternary
// search refines it. Band-edge resonances carry the strongest field
// enhancement, which is what the amplitude comparisons evaluate.
EdgeResonance find_edge_resonance(const Stack& stack, double theta,
                                  const GapInterval& gap, bool above);

}  // namespace ptmm
