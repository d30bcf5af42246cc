#include "ptmm/stack.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ptmm {

namespace {

void check_layer_params(double n_a, double n_b, double a_nm, double b_nm) {
  if (!(n_a >= 1.0) || !(n_b >= 1.0)) {
    throw std::invalid_argument("refractive index must be >= 1, got n_a=" +
                                std::to_string(n_a) +
                                " n_b=" + std::to_string(n_b));
  }
  if (!(a_nm > 0.0) || !(b_nm > 0.0)) {
    throw std::invalid_argument("layer thickness must be > 0, got a=" +
                                std::to_string(a_nm) +
                                " b=" + std::to_string(b_nm));
  }
}

}  // namespace

Stack::Stack(std::vector<Layer> layers) : layers_(std::move(layers)) {
  starts_.reserve(layers_.size() + 1);
  starts_.push_back(0.0);
  for (const Layer& layer : layers_) {
    if (!(layer.refractive_index >= 1.0)) {
      throw std::invalid_argument("refractive index must be >= 1");
    }
    if (!(layer.thickness > 0.0)) {
      throw std::invalid_argument("layer thickness must be > 0");
    }
    starts_.push_back(starts_.back() + layer.thickness);
  }
}

double Stack::total_length() const {
  return starts_.empty() ? 0.0 : starts_.back();
}

LayerLocation Stack::locate(double x) const {
  if (empty()) {
    throw std::out_of_range("locate on empty stack");
  }
  if (x < 0.0 || x > total_length()) {
    throw std::out_of_range("x=" + std::to_string(x) +
                            " outside [0, " + std::to_string(total_length()) +
                            "]");
  }
  if (x == total_length()) {
    return {layers_.size() - 1, layers_.back().thickness};
  }
  // first boundary strictly greater than x; the layer left of it contains x
  auto it = std::upper_bound(starts_.begin() + 1, starts_.end(), x);
  auto index = static_cast<std::size_t>(it - starts_.begin()) - 1;
  return {index, x - starts_[index]};
}

Stack make_periodic_stack(double n_a, double n_b, double a_nm, double b_nm,
                          std::size_t periods) {
  check_layer_params(n_a, n_b, a_nm, b_nm);
  std::vector<Layer> layers;
  layers.reserve(2 * periods);
  for (std::size_t i = 0; i < periods; ++i) {
    layers.push_back({n_a, a_nm, LayerLabel::A});
    layers.push_back({n_b, b_nm, LayerLabel::B});
  }
  return Stack(std::move(layers));
}

Stack make_mirror_stack(double n_a, double n_b, double a_nm, double b_nm,
                        std::size_t half_periods) {
  check_layer_params(n_a, n_b, a_nm, b_nm);
  std::vector<Layer> layers;
  layers.reserve(4 * half_periods);
  for (std::size_t i = 0; i < half_periods; ++i) {
    layers.push_back({n_a, a_nm, LayerLabel::A});
    layers.push_back({n_b, b_nm, LayerLabel::B});
  }
  for (std::size_t i = 0; i < half_periods; ++i) {
    layers.push_back({n_b, b_nm, LayerLabel::B});
    layers.push_back({n_a, a_nm, LayerLabel::A});
  }
  return Stack(std::move(layers));
}

Stack reversed(const Stack& stack) {
  std::vector<Layer> layers(stack.layers().rbegin(), stack.layers().rend());
  return Stack(std::move(layers));
}

}  // namespace ptmm
