#include "ptmm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "ptmm/transfer.hpp"

namespace ptmm {

namespace {

std::size_t sweep_thread_count(std::size_t samples) {
  std::size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) {
    cap = 1;
  }
  if (const char* env = std::getenv("PHOTONIC_TMM_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) {
      cap = static_cast<std::size_t>(parsed);
    }
  }
  // below ~512 points the spawn cost outweighs the work
  const std::size_t useful = std::max<std::size_t>(samples / 512, 1);
  return std::min(cap, useful);
}

}  // namespace

Spectrum sweep_frequency(const Stack& stack, double theta, double omega_min,
                         double omega_max, std::size_t samples,
                         kernels::Lane lane) {
  if (!(omega_min < omega_max)) {
    throw std::invalid_argument("omega_min must be < omega_max");
  }
  if (samples < 2) {
    throw std::invalid_argument("sweep needs at least 2 samples");
  }

  Spectrum spectrum;
  spectrum.omega.resize(samples);
  spectrum.T.resize(samples);
  spectrum.R.resize(samples);
  spectrum.T_classical.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    spectrum.omega[i] = (i + 1 == samples)
                            ? omega_max
                            : omega_min + (omega_max - omega_min) *
                                              static_cast<double>(i) /
                                              static_cast<double>(samples - 1);
  }

  const kernels::SweepPlan plan = kernels::make_plan(stack, theta);
  const kernels::SweepFn fn = kernels::select(lane);

  const std::size_t workers = sweep_thread_count(samples);
  if (workers <= 1) {
    fn(plan, spectrum.omega.data(), samples, spectrum.T.data(),
       spectrum.R.data(), spectrum.T_classical.data());
  } else {
    // disjoint contiguous chunks, aligned to the widest vector lane so the
    // ragged remainder lands on the same grid points for every schedule
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk =
        ((samples + workers - 1) / workers + 7) & ~std::size_t{7};
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      if (begin >= samples) {
        break;
      }
      const std::size_t len = std::min(chunk, samples - begin);
      pool.emplace_back([&, begin, len] {
        fn(plan, spectrum.omega.data() + begin, len,
           spectrum.T.data() + begin, spectrum.R.data() + begin,
           spectrum.T_classical.data() + begin);
      });
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }
  return spectrum;
}

std::vector<GapInterval> find_band_gaps(const Spectrum& spectrum,
                                        double threshold) {
  if (spectrum.omega.empty()) {
    throw std::invalid_argument("empty spectrum");
  }
  if (!(threshold > 0.0) || !(threshold < 1.0)) {
    throw std::invalid_argument("gap threshold must lie in (0, 1)");
  }
  std::vector<GapInterval> gaps;
  const std::size_t n = spectrum.omega.size();
  std::size_t i = 0;
  while (i < n) {
    if (spectrum.T[i] < threshold) {
      std::size_t j = i;
      double min_t = spectrum.T[i];
      while (j + 1 < n && spectrum.T[j + 1] < threshold) {
        ++j;
        min_t = std::min(min_t, spectrum.T[j]);
      }
      if (j > i) {
        gaps.push_back({spectrum.omega[i], spectrum.omega[j], min_t});
      }
      i = j + 1;
    } else {
      ++i;
    }
  }
  return gaps;
}

std::vector<EnvelopePoint> period_envelope(const FieldProfile& profile,
                                           const Stack& stack) {
  const std::size_t periods = stack.size() / 2;
  if (periods == 0) {
    throw std::invalid_argument("stack has no complete period");
  }
  const std::vector<double>& starts = stack.starts();

  std::vector<EnvelopePoint> envelope;
  envelope.reserve(periods);
  std::size_t cursor = 0;
  for (std::size_t p = 0; p < periods; ++p) {
    const double lo = starts[2 * p];
    const double hi = starts[2 * p + 2];
    double best = -1.0;
    double best_x = lo;
    while (cursor < profile.x.size() && profile.x[cursor] <= hi) {
      if (profile.x[cursor] >= lo && profile.rho[cursor] > best) {
        best = profile.rho[cursor];
        best_x = profile.x[cursor];
      }
      // the sample on a boundary stays visible to the next window
      if (profile.x[cursor] < hi) {
        ++cursor;
      } else {
        break;
      }
    }
    if (best < 0.0) {
      throw std::invalid_argument("profile too coarse for the period grid");
    }
    envelope.push_back({best_x, best});
  }
  return envelope;
}

std::optional<double> decay_length(const FieldProfile& profile,
                                   const Stack& stack) {
  if (stack.size() / 2 < 3) {
    throw std::invalid_argument("decay fit needs at least 3 periods");
  }
  const std::vector<EnvelopePoint> envelope = period_envelope(profile, stack);

  // least squares slope of ln(envelope) vs x
  const double n = static_cast<double>(envelope.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const EnvelopePoint& point : envelope) {
    const double y = std::log(std::max(point.rho, 1e-300));
    sx += point.x;
    sy += y;
    sxx += point.x * point.x;
    sxy += point.x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("degenerate envelope abscissae");
  }
  const double slope = (n * sxy - sx * sy) / denom;
  if (slope >= 0.0) {
    return std::nullopt;
  }
  return -1.0 / slope;
}

AmplitudeStats amplitude_stats(const FieldProfile& profile) {
  if (profile.rho.empty()) {
    throw std::invalid_argument("empty profile");
  }
  AmplitudeStats stats{profile.rho[0], profile.rho[0], 0.0};
  for (const double value : profile.rho) {
    stats.peak = std::max(stats.peak, value);
    stats.trough = std::min(stats.trough, value);
    stats.mean += value;
  }
  stats.mean /= static_cast<double>(profile.rho.size());
  return stats;
}

EdgeResonance find_edge_resonance(const Stack& stack, double theta,
                                  const GapInterval& gap, bool above) {
  const auto transmissivity = [&](double omega) {
    return solve_scatter(stack, theta, omega,
                         default_incident_state().amplitude)
        .transmissivity;
  };

  const double edge = above ? gap.omega_hi : gap.omega_lo;
  const double direction = above ? 1.0 : -1.0;
  const double span = 0.15 * edge;
  constexpr int kScanPoints = 600;
  const double step = direction * span / kScanPoints;

  double prev = transmissivity(edge);
  double here = transmissivity(edge + step);
  for (int i = 2; i <= kScanPoints; ++i) {
    const double next_omega = edge + static_cast<double>(i) * step;
    const double next = transmissivity(next_omega);
    if (here >= prev && here >= next && here > 0.5) {
      // ternary refinement inside the bracketing pair of steps
      double lo = edge + static_cast<double>(i - 2) * step;
      double hi = next_omega;
      if (lo > hi) {
        std::swap(lo, hi);
      }
      for (int iter = 0; iter < 200; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (transmissivity(m1) < transmissivity(m2)) {
          lo = m1;
        } else {
          hi = m2;
        }
      }
      const double omega = 0.5 * (lo + hi);
      return {omega, transmissivity(omega)};
    }
    prev = here;
    here = next;
  }
  throw std::runtime_error("no transmission maximum found near the gap edge");
}

}  // namespace ptmm
