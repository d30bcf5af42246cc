// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances are fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ptmm/constants.hpp"
#include "ptmm/observables.hpp"
#include "ptmm/spectra.hpp"
#include "ptmm/thin_film.hpp"
#include "ptmm/transfer.hpp"

using namespace ptmm;

namespace {

constexpr double kOmega0 = 2.0 * std::numbers::pi * 171.0e12;
const Stack kReferenceStack = make_periodic_stack(2.68, 1.68, 200.0, 300.0, 10);

int g_failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!pass) {
    ++g_failures;
  }
}

std::string fmt(const char* format, ...) {
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

Stack random_stack(std::mt19937_64& rng) {
  const std::size_t count = 1 + static_cast<std::size_t>(rng() % 20);
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < count; ++i) {
    layers.push_back({uniform(rng, 1.0, 4.0), uniform(rng, 50.0, 500.0),
                      i % 2 == 0 ? LayerLabel::A : LayerLabel::B});
  }
  return Stack(std::move(layers));
}

double peak_rho(const Stack& stack, double theta, double omega) {
  return amplitude_stats(sample_profile(stack, theta, omega, 2000)).peak;
}

// criteria 1 and 2 share the randomized case set
void criteria_equivalence_and_flux() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x5eedULL);
  const Amplitude3 incident = default_incident_state().amplitude;
  double max_dev = 0.0;
  double max_flux = 0.0;
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    const Stack stack = random_stack(rng);
    const double theta = uniform(rng, 0.0, 1.3);
    const double omega = uniform(rng, 5e13, 5e15);
    const ScatterSolution solution =
        solve_scatter(stack, theta, omega, incident);
    const FluxSplit classical = classical_transmissivity(stack, theta, omega);
    max_dev = std::max(
        max_dev, std::abs(solution.transmissivity - classical.transmissivity));
    max_flux = std::max(max_flux,
                        std::abs(solution.transmissivity +
                                 solution.reflectivity - 1.0));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(1, "photon vs classical transmissivity",
         max_dev < 1e-9 && seconds < 5.0,
         fmt("max |T_q - T_cl| = %.3e over %d cases (tol 1e-9), %.2f s",
             max_dev, kCases, seconds));
  report(2, "flux conservation", max_flux < 1e-10,
         fmt("max |T + R - 1| = %.3e (tol 1e-10)", max_flux));
}

void criterion_quarter_wave() {
  const double n_a = 2.68;
  const double n_b = 1.68;
  const double a = 200.0;
  const double lambda = 4.0 * n_a * a;  // both layers a quarter wave here
  const double b = lambda / (4.0 * n_b);
  const double omega = 2.0 * std::numbers::pi * kSpeedOfLightNmPerS / lambda;
  const Stack stack = make_periodic_stack(n_a, n_b, a, b, 10);

  const double reference = quarter_wave_reference(n_a, n_b, 10).transmissivity;
  const double quantum =
      solve_scatter(stack, 0.0, omega, default_incident_state().amplitude)
          .transmissivity;
  const double classical =
      classical_transmissivity(stack, 0.0, omega).transmissivity;
  const double err_q = std::abs(quantum - reference) / reference;
  const double err_c = std::abs(classical - reference) / reference;
  report(3, "quarter-wave closed form", err_q < 1e-9 && err_c < 1e-9,
         fmt("T_ref = %.9e, rel err quantum %.2e classical %.2e (tol 1e-9)",
             reference, err_q, err_c));
}

struct Landmarks {
  GapInterval first_gap;
  double gap_center;
  EdgeResonance resonance;  // first maximum above the upper gap edge
};

Landmarks find_landmarks() {
  const Spectrum spectrum = sweep_frequency(kReferenceStack, 0.0,
                                            0.1 * kOmega0, 3.5 * kOmega0, 2001);
  const std::vector<GapInterval> gaps = find_band_gaps(spectrum, 1e-3);
  if (gaps.empty()) {
    std::printf("landmark scan found no gap, aborting\n");
    std::exit(2);
  }
  Landmarks landmarks;
  landmarks.first_gap = gaps.front();
  landmarks.gap_center =
      0.5 * (gaps.front().omega_lo + gaps.front().omega_hi);
  landmarks.resonance =
      find_edge_resonance(kReferenceStack, 0.0, gaps.front(), true);
  return landmarks;
}

void criteria_field_consistency(const Landmarks& landmarks) {
  // two in-gap and three pass-band frequencies
  const std::vector<double> omegas = {
      landmarks.gap_center,
      0.5 * (landmarks.first_gap.omega_lo + landmarks.gap_center),
      0.5 * kOmega0, 1.25 * kOmega0, landmarks.resonance.omega};

  double worst_rel = 0.0;
  double worst_exit = 0.0;
  for (const double omega : omegas) {
    const ScatterSolution solution = solve_scatter(
        kReferenceStack, 0.0, omega, default_incident_state().amplitude);
    for (std::size_t k = 0; k + 1 < kReferenceStack.size(); ++k) {
      const double d = kReferenceStack.layers()[k].thickness;
      const double left_rho =
          density_at(solution.layer_coefficients[k], solution.params,
                     solution.params.c_layer[k], d);
      const double right_rho =
          density_at(solution.layer_coefficients[k + 1], solution.params,
                     solution.params.c_layer[k + 1], 0.0);
      const double left_j =
          current_at(solution.layer_coefficients[k], solution.params,
                     solution.params.c_layer[k], d);
      const double right_j =
          current_at(solution.layer_coefficients[k + 1], solution.params,
                     solution.params.c_layer[k + 1], 0.0);
      worst_rel = std::max(
          worst_rel, std::abs(left_rho - right_rho) /
                         std::max(std::abs(right_rho), 1e-300));
      worst_rel = std::max(worst_rel,
                           std::abs(left_j - right_j) /
                               std::max(std::abs(right_j), 1e-300));
    }
    const double exit_j =
        current_at(solution.layer_coefficients.back(), solution.params,
                   solution.params.c_layer.back(),
                   kReferenceStack.layers().back().thickness);
    worst_exit =
        std::max(worst_exit, std::abs(exit_j - solution.transmissivity));
  }
  report(4, "interface continuity of rho and J", worst_rel < 1e-10,
         fmt("worst one-sided mismatch %.3e relative over 19 interfaces x 5 "
             "frequencies (tol 1e-10)",
             worst_rel));
  report(5, "exit current equals T", worst_exit < 1e-10,
         fmt("worst |J_exit/c - T| = %.3e (tol 1e-10)", worst_exit));
}

void criterion_tunnel(const Landmarks& landmarks) {
  const FieldProfile profile =
      sample_profile(kReferenceStack, 0.0, landmarks.gap_center, 2000);
  const std::vector<EnvelopePoint> envelope =
      period_envelope(profile, kReferenceStack);
  const double ratio = envelope.back().rho / envelope.front().rho;
  const std::optional<double> length = decay_length(profile, kReferenceStack);
  const bool ok = length.has_value() && *length > 0.0 &&
                  std::isfinite(*length) && ratio < 1e-2;
  report(6, "tunneling decay through the gap", ok,
         fmt("decay length %.1f nm, envelope exit/entry = %.3e (< 1e-2) at "
             "omega/omega0 = %.4f",
             length.value_or(-1.0), ratio, landmarks.gap_center / kOmega0));
}

void criterion_resonance_contrast(const Landmarks& landmarks) {
  const double peak_resonance =
      peak_rho(kReferenceStack, 0.0, landmarks.resonance.omega);
  const double peak_gap = peak_rho(kReferenceStack, 0.0, landmarks.gap_center);
  const double ratio = peak_resonance / peak_gap;
  report(7, "resonance-to-gap density contrast",
         ratio >= 10.0 && landmarks.resonance.T > 0.99,
         fmt("peak rho %.3f at resonance omega/omega0 = %.5f (T = %.6f) vs "
             "%.3f at gap center, ratio %.1f (>= 10)",
             peak_resonance, landmarks.resonance.omega / kOmega0,
             landmarks.resonance.T, peak_gap, ratio));
}

void criterion_monotonicity(const Landmarks& landmarks) {
  // period-count comparison at the recorded resonance frequency
  const double w_rec = landmarks.resonance.omega;
  double peaks_n[3];
  int idx = 0;
  for (const std::size_t periods : {8u, 9u, 10u}) {
    const Stack stack = make_periodic_stack(2.68, 1.68, 200.0, 300.0, periods);
    peaks_n[idx++] = peak_rho(stack, 0.0, w_rec);
  }
  const bool n_ok = peaks_n[0] < peaks_n[1] && peaks_n[1] < peaks_n[2];

  // angle comparison, each angle at its own tracked band-edge resonance
  double peaks_theta[3];
  double omegas_theta[3];
  idx = 0;
  for (const double theta :
       {std::numbers::pi / 10.0, std::numbers::pi / 6.0,
        std::numbers::pi / 4.0}) {
    const Spectrum scan = sweep_frequency(kReferenceStack, theta,
                                          0.1 * kOmega0, 3.5 * kOmega0, 2001);
    const std::vector<GapInterval> gaps = find_band_gaps(scan, 1e-3);
    const EdgeResonance resonance =
        find_edge_resonance(kReferenceStack, theta, gaps.front(), true);
    omegas_theta[idx] = resonance.omega;
    peaks_theta[idx] = peak_rho(kReferenceStack, theta, resonance.omega);
    ++idx;
  }
  const bool theta_ok =
      peaks_theta[0] < peaks_theta[1] && peaks_theta[1] < peaks_theta[2];

  // mirror structure comparison at the recorded resonance
  const Stack mirror = make_mirror_stack(2.68, 1.68, 200.0, 300.0, 5);
  const double mean_mirror =
      amplitude_stats(sample_profile(mirror, 0.0, w_rec, 2000)).mean;
  const double mean_periodic =
      amplitude_stats(sample_profile(kReferenceStack, 0.0, w_rec, 2000)).mean;
  const bool mirror_ok = mean_mirror < mean_periodic;

  report(8, "amplitude monotonicity reproductions",
         n_ok && theta_ok && mirror_ok,
         fmt("peaks N=8,9,10: %.3f/%.3f/%.3f at omega/omega0=%.5f | peaks "
             "theta=pi/10,pi/6,pi/4: %.3f/%.3f/%.3f at omega/omega0="
             "%.5f/%.5f/%.5f | mirror mean %.3f < periodic mean %.3f",
             peaks_n[0], peaks_n[1], peaks_n[2], w_rec / kOmega0,
             peaks_theta[0], peaks_theta[1], peaks_theta[2],
             omegas_theta[0] / kOmega0, omegas_theta[1] / kOmega0,
             omegas_theta[2] / kOmega0, mean_mirror, mean_periodic));
}

void criterion_invariances() {
  std::mt19937_64 rng(0xACCE55ULL);
  const Amplitude3 incident = default_incident_state().amplitude;
  double worst_reciprocity = 0.0;
  double worst_scale = 0.0;
  double worst_component = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Stack stack = random_stack(rng);
    const double theta = uniform(rng, 0.0, 1.3);
    const double omega = uniform(rng, 5e13, 5e15);
    const double transmissivity =
        solve_scatter(stack, theta, omega, incident).transmissivity;

    const double mirrored =
        solve_scatter(reversed(stack), theta, omega, incident).transmissivity;
    worst_reciprocity =
        std::max(worst_reciprocity, std::abs(mirrored - transmissivity));

    const double scale = uniform(rng, 0.5, 2.0);
    std::vector<Layer> scaled = stack.layers();
    for (Layer& layer : scaled) {
      layer.thickness /= scale;
    }
    const double rescaled =
        solve_scatter(Stack(scaled), theta, scale * omega, incident)
            .transmissivity;
    worst_scale = std::max(worst_scale, std::abs(rescaled - transmissivity));

    const Amplitude3 e2{Complex{}, Complex{1.0, 0.0}, Complex{}};
    const Amplitude3 e3{Complex{}, Complex{}, Complex{1.0, 0.0}};
    const ScatterSolution a = solve_scatter(stack, theta, omega, e2);
    const ScatterSolution b = solve_scatter(stack, theta, omega, e3);
    worst_component = std::max(
        worst_component, std::max(std::abs(a.t - b.t), std::abs(a.r - b.r)));
  }
  report(9, "reversal, scaling and component invariances",
         worst_reciprocity < 1e-10 && worst_scale < 1e-10 &&
             worst_component < 1e-12,
         fmt("reciprocity %.3e (tol 1e-10), scale %.3e (tol 1e-10), "
             "component split %.3e (tol 1e-12)",
             worst_reciprocity, worst_scale, worst_component));
}

void criterion_frequency_landmarks() {
  const Amplitude3 incident = default_incident_state().amplitude;
  // the omega0 unit convention is ambiguous; report both readings and assert
  // only the structure of the configured one
  const double readings[2] = {kOmega0, 171.0e12};
  const char* names[2] = {"2pi*171THz", "171e12 rad/s"};
  std::string detail;
  for (int reading = 0; reading < 2; ++reading) {
    detail += fmt("%s[%s: ", reading == 0 ? "" : " | ", names[reading]);
    for (const double ratio : {1.25, 1.5, 3.2}) {
      const double transmissivity =
          solve_scatter(kReferenceStack, 0.0, ratio * readings[reading],
                        incident)
              .transmissivity;
      detail += fmt("T(%.2f w0)=%.3f ", ratio, transmissivity);
    }
    detail += "]";
  }
  const Spectrum scan = sweep_frequency(kReferenceStack, 0.0, 0.1 * kOmega0,
                                        3.5 * kOmega0, 2001);
  const double min_t = *std::min_element(scan.T.begin(), scan.T.end());
  const double max_t = *std::max_element(scan.T.begin(), scan.T.end());
  report(10, "frequency landmark structure", min_t < 1e-3 && max_t > 0.99,
         detail + fmt(" scan min T %.2e (< 1e-3), max T %.6f (> 0.99)", min_t,
                      max_t));
}

}  // namespace

int main() {
  std::printf("acceptance suite, reference stack (AB)^10, n=2.68/1.68, "
              "200/300 nm\n");
  criteria_equivalence_and_flux();
  criterion_quarter_wave();
  const Landmarks landmarks = find_landmarks();
  criteria_field_consistency(landmarks);
  criterion_tunnel(landmarks);
  criterion_resonance_contrast(landmarks);
  criterion_monotonicity(landmarks);
  criterion_invariances();
  criterion_frequency_landmarks();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
