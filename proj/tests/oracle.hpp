// Test-only reference computations, kept independent of the library's
// matrix-block code paths:
//  - a dense solver for the full interface-matching linear system,
//  - wavefunction reconstruction with an explicit spin-projection matrix.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "ptmm/constants.hpp"
#include "ptmm/stack.hpp"
#include "ptmm/transfer.hpp"

namespace oracle {

using Cx = std::complex<double>;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline ptmm::Stack random_stack(std::mt19937_64& rng, std::size_t max_layers) {
  const std::size_t count = 1 + static_cast<std::size_t>(rng() % max_layers);
  std::vector<ptmm::Layer> layers;
  for (std::size_t i = 0; i < count; ++i) {
    layers.push_back({uniform(rng, 1.0, 4.0), uniform(rng, 50.0, 500.0),
                      i % 2 == 0 ? ptmm::LayerLabel::A : ptmm::LayerLabel::B});
  }
  return ptmm::Stack(std::move(layers));
}

// Gaussian elimination with partial pivoting, complex, dense.
inline std::vector<Cx> solve_dense(std::vector<std::vector<Cx>> a,
                                   std::vector<Cx> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) {
        pivot = row;
      }
    }
    if (std::abs(a[pivot][col]) == 0.0) {
      throw std::runtime_error("singular dense system");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Cx factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) {
        a[row][k] -= factor * a[col][k];
      }
      b[row] -= factor * b[col];
    }
  }
  std::vector<Cx> x(n);
  for (std::size_t row = n; row-- > 0;) {
    Cx sum = b[row];
    for (std::size_t k = row + 1; k < n; ++k) {
      sum -= a[row][k] * x[k];
    }
    x[row] = sum / a[row][row];
  }
  return x;
}

// Scalar scattering problem solved from first principles: one unknown pair
// (f, b) per layer plus r and t, equations from continuity of the field and
// its derivative at every interface. Unit incidence from the left vacuum.
struct DenseScatter {
  Cx r;
  Cx t;
  std::vector<std::pair<Cx, Cx>> layer_pairs;
};

inline DenseScatter dense_scatter(const ptmm::Stack& stack, double theta,
                                  double omega) {
  const double k0 = omega / ptmm::kSpeedOfLightNmPerS;
  const double sin_theta = std::sin(theta);
  const double c1 = std::sqrt(1.0 - sin_theta * sin_theta);
  const std::size_t layers = stack.size();
  if (layers == 0) {
    return {Cx{}, Cx{1.0, 0.0}, {}};
  }

  std::vector<double> c(layers);
  for (std::size_t i = 0; i < layers; ++i) {
    const double n = stack.layers()[i].refractive_index;
    c[i] = std::sqrt(n * n - sin_theta * sin_theta);
  }

  // unknowns: r, f_0, b_0, ..., f_{L-1}, b_{L-1}, t
  const std::size_t dim = 2 * layers + 2;
  std::vector<std::vector<Cx>> a(dim, std::vector<Cx>(dim, Cx{}));
  std::vector<Cx> rhs(dim, Cx{});
  const Cx iu{0.0, 1.0};

  // entry interface, x = 0
  a[0][0] = 1.0;
  a[0][1] = -1.0;
  a[0][2] = -1.0;
  rhs[0] = -1.0;
  a[1][0] = -c1;
  a[1][1] = -c[0];
  a[1][2] = c[0];
  rhs[1] = -c1;

  for (std::size_t k = 0; k + 1 < layers; ++k) {
    const Cx phase = std::exp(iu * (k0 * c[k] * stack.layers()[k].thickness));
    const std::size_t row = 2 * (k + 1);
    const std::size_t fk = 1 + 2 * k;
    a[row][fk] = phase;
    a[row][fk + 1] = 1.0 / phase;
    a[row][fk + 2] = -1.0;
    a[row][fk + 3] = -1.0;
    a[row + 1][fk] = c[k] * phase;
    a[row + 1][fk + 1] = -c[k] / phase;
    a[row + 1][fk + 2] = -c[k + 1];
    a[row + 1][fk + 3] = c[k + 1];
  }

  // exit interface
  const Cx exit_phase =
      std::exp(iu * (k0 * c[layers - 1] * stack.layers()[layers - 1].thickness));
  const std::size_t row = 2 * layers;
  const std::size_t fl = 1 + 2 * (layers - 1);
  a[row][fl] = exit_phase;
  a[row][fl + 1] = 1.0 / exit_phase;
  a[row][dim - 1] = -1.0;
  a[row + 1][fl] = c[layers - 1] * exit_phase;
  a[row + 1][fl + 1] = -c[layers - 1] / exit_phase;
  a[row + 1][dim - 1] = -c1;

  const std::vector<Cx> x = solve_dense(std::move(a), std::move(rhs));
  DenseScatter result;
  result.r = x[0];
  result.t = x[dim - 1];
  result.layer_pairs.reserve(layers);
  for (std::size_t k = 0; k < layers; ++k) {
    result.layer_pairs.emplace_back(x[1 + 2 * k], x[2 + 2 * k]);
  }
  return result;
}

// Explicit spin projection along the stacking axis.
inline std::array<Cx, 3> spin_x_apply(const std::array<Cx, 3>& v) {
  const Cx iu{0.0, 1.0};
  return {Cx{}, -iu * v[2], iu * v[1]};
}

struct FieldSample {
  double rho;
  double j_over_c;
};

// rho = psi^dagger psi, J/c = psi^dagger S_x psi with psi reconstructed from
// the layer pair at a local coordinate.
inline FieldSample field_oracle(const ptmm::CoefficientPair& pair, double k0,
                                double c_layer, double local_x) {
  const Cx iu{0.0, 1.0};
  const Cx plus = std::exp(iu * (k0 * c_layer * local_x));
  const Cx minus = std::exp(-iu * (k0 * c_layer * local_x));
  std::array<Cx, 3> psi;
  for (int i = 0; i < 3; ++i) {
    psi[i] = pair.forward[i] * plus + pair.backward[i] * minus;
  }
  const std::array<Cx, 3> spun = spin_x_apply(psi);
  double rho = 0.0;
  Cx current{};
  for (int i = 0; i < 3; ++i) {
    rho += std::norm(psi[i]);
    current += std::conj(psi[i]) * spun[i];
  }
  return {rho, std::real(current)};
}

}  // namespace oracle
