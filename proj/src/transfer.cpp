#include "ptmm/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace ptmm {

namespace {

bool all_zero(const Amplitude3& v) {
  return v[0] == Complex{} && v[1] == Complex{} && v[2] == Complex{};
}

std::pair<Complex, Complex> apply(const TransferBlock& block, Complex forward,
                                  Complex backward) {
  return {block.m11 * forward + block.m12 * backward,
          block.m21 * forward + block.m22 * backward};
}

// Chain of all blocks from the left vacuum through the exit interface.
TransferBlock full_chain(const Stack& stack, const WaveParams& params) {
  if (stack.empty()) {
    return TransferBlock::identity();
  }
  TransferBlock chain =
      entry_block(params, stack.layers().front().refractive_index);
  for (std::size_t k = 0; k < stack.size(); ++k) {
    const double to_c = (k + 1 < stack.size()) ? params.c_layer[k + 1]
                                               : params.c_ambient;
    chain = multiply(layer_block(params, stack.layers()[k], to_c), chain);
  }
  return chain;
}

}  // namespace

TransferBlock multiply(const TransferBlock& lhs, const TransferBlock& rhs) {
  return {lhs.m11 * rhs.m11 + lhs.m12 * rhs.m21,
          lhs.m11 * rhs.m12 + lhs.m12 * rhs.m22,
          lhs.m21 * rhs.m11 + lhs.m22 * rhs.m21,
          lhs.m21 * rhs.m12 + lhs.m22 * rhs.m22};
}

TransferBlock entry_block(const WaveParams& params, double n_first) {
  const double c_first = c_for_index(n_first, params.sin_theta);
  const double p = 1.0 + params.c_ambient / c_first;
  const double q = 1.0 - params.c_ambient / c_first;
  return {0.5 * p, 0.5 * q, 0.5 * q, 0.5 * p};
}

TransferBlock layer_block(const WaveParams& params, const Layer& from,
                          double to_c) {
  const double c_from = c_for_index(from.refractive_index, params.sin_theta);
  const double ratio = c_from / to_c;
  const double phase = params.k0 * c_from * from.thickness;
  const Complex e{std::cos(phase), std::sin(phase)};
  const Complex e_conj = std::conj(e);
  return {0.5 * (1.0 + ratio) * e, 0.5 * (1.0 - ratio) * e_conj,
          0.5 * (1.0 - ratio) * e, 0.5 * (1.0 + ratio) * e_conj};
}

std::vector<CoefficientPair> propagate_coefficients(const Stack& stack,
                                                    const WaveParams& params,
                                                    const Boundary6& boundary) {
  std::vector<CoefficientPair> pairs;
  if (stack.empty()) {
    return pairs;
  }
  pairs.reserve(stack.size());

  CoefficientPair current;
  const TransferBlock entry =
      entry_block(params, stack.layers().front().refractive_index);
  for (int i = 0; i < 3; ++i) {
    auto [f, b] = apply(entry, boundary[i], boundary[i + 3]);
    current.forward[i] = f;
    current.backward[i] = b;
  }
  pairs.push_back(current);

  for (std::size_t k = 1; k < stack.size(); ++k) {
    const TransferBlock block =
        layer_block(params, stack.layers()[k - 1], params.c_layer[k]);
    for (int i = 0; i < 3; ++i) {
      auto [f, b] = apply(block, current.forward[i], current.backward[i]);
      current.forward[i] = f;
      current.backward[i] = b;
    }
    pairs.push_back(current);
  }
  return pairs;
}

ScatterSolution solve_scatter(const Stack& stack, double theta, double omega,
                              const Amplitude3& incident) {
  if (all_zero(incident)) {
    throw std::invalid_argument("incident amplitude must be nonzero");
  }
  ScatterSolution solution;
  solution.params = wave_params(omega, theta, stack);

  const TransferBlock chain = full_chain(stack, solution.params);
  if (std::abs(chain.m22) < 1e-12) {
    // |G22|^2 = 1 + |G21|^2 >= 1 for lossless stacks; reaching this means
    // the inputs violated the model assumptions.
    throw std::runtime_error("singular boundary system");
  }
  solution.r = -chain.m21 / chain.m22;
  solution.t = chain.m11 + chain.m12 * solution.r;
  solution.transmissivity = std::norm(solution.t);
  solution.reflectivity = std::norm(solution.r);
  for (int i = 0; i < 3; ++i) {
    solution.boundary[i] = incident[i];
    solution.boundary[i + 3] = solution.r * incident[i];
  }
  solution.layer_coefficients =
      propagate_coefficients(stack, solution.params, solution.boundary);
  return solution;
}

}  // namespace ptmm
