#pragma once

#include <cstddef>
#include <vector>

namespace ptmm {

enum class LayerLabel { A, B };

// One lossless dielectric slab. Index is real and >= 1, thickness in nm > 0.
struct Layer {
  double refractive_index = 1.0;
  double thickness = 0.0;  // nm
  LayerLabel label = LayerLabel::A;
};

struct LayerLocation {
  std::size_t layer_index;
  double local_x;  // nm from the start of that layer
};

// Ordered multilayer with vacuum (n = 1) on both sides. Immutable after
// construction, safe to share across threads.
class Stack {
 public:
  Stack() = default;
  explicit Stack(std::vector<Layer> layers);

  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }
  bool empty() const { return layers_.empty(); }
  double total_length() const;

  // Start coordinate of layer k; starts()[size()] == total_length().
  const std::vector<double>& starts() const { return starts_; }

  // Maps a global coordinate x in [0, total_length] to (layer, local offset).
  // Interface points belong to the right-hand layer, except x == total_length
  // which belongs to the last layer.
  LayerLocation locate(double x) const;

 private:
  std::vector<Layer> layers_;
  std::vector<double> starts_;
};

Stack make_periodic_stack(double n_a, double n_b, double a_nm, double b_nm,
                          std::size_t periods);

// (AB)^m followed by (BA)^m; palindromic by construction.
Stack make_mirror_stack(double n_a, double n_b, double a_nm, double b_nm,
                        std::size_t half_periods);

Stack reversed(const Stack& stack);

}  // namespace ptmm
