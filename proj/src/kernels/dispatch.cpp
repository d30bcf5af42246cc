#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ptmm/kernels.hpp"
#include "ptmm/wave.hpp"

namespace ptmm::kernels {

SweepPlan make_plan(const Stack& stack, double theta) {
  // reuse the index-to-C convention; omega is irrelevant for the plan
  const WaveParams params = wave_params(1.0, theta, stack);
  SweepPlan plan;
  plan.c_ambient = params.c_ambient;
  plan.c = params.c_layer;
  plan.d_nm.reserve(stack.size());
  for (const Layer& layer : stack.layers()) {
    plan.d_nm.push_back(layer.thickness);
  }
  return plan;
}

bool avx2_available() {
#if defined(PTMM_HAVE_AVX2_KERNEL)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Lane lane_from_env() {
  const char* env = std::getenv("PHOTONIC_TMM_SIMD");
  if (env == nullptr) {
    return Lane::Auto;
  }
  const std::string value(env);
  if (value == "scalar") {
    return Lane::Scalar;
  }
  if (value == "avx2") {
    return Lane::Avx2;
  }
  if (value == "auto" || value.empty()) {
    return Lane::Auto;
  }
  throw std::runtime_error("PHOTONIC_TMM_SIMD must be scalar, avx2 or auto, got '" +
                           value + "'");
}

}  // namespace

SweepFn select(Lane lane) {
  if (lane == Lane::Auto) {
    lane = lane_from_env();
  }
  switch (lane) {
    case Lane::Scalar:
      return sweep_scalar;
    case Lane::Avx2:
#if defined(PTMM_HAVE_AVX2_KERNEL)
      if (avx2_available()) {
        return sweep_avx2;
      }
#endif
      throw std::runtime_error("AVX2 kernel not available on this machine");
    case Lane::Auto:
    default:
#if defined(PTMM_HAVE_AVX2_KERNEL)
      if (avx2_available()) {
        return sweep_avx2;
      }
#endif
      return sweep_scalar;
  }
}

std::string lane_name(SweepFn fn) {
#if defined(PTMM_HAVE_AVX2_KERNEL)
  if (fn == sweep_avx2) {
    return "avx2";
  }
#endif
  if (fn == sweep_scalar) {
    return "scalar";
  }
  return "unknown";
}

std::vector<std::pair<std::string, SweepFn>> available_lanes() {
  std::vector<std::pair<std::string, SweepFn>> lanes;
  lanes.emplace_back("scalar", sweep_scalar);
#if defined(PTMM_HAVE_AVX2_KERNEL)
  if (avx2_available()) {
    lanes.emplace_back("avx2", sweep_avx2);
  }
#endif
  return lanes;
}

}  // namespace ptmm::kernels
