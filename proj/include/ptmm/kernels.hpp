#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ptmm/stack.hpp"

namespace ptmm::kernels {

// Geometry of one sweep, fixed per (stack, theta). Each frequency point is
// independent, which is what the SIMD lanes exploit: the per-layer direction
// cosines and thicknesses are broadcast constants, the omegas are the lanes.
struct SweepPlan {
  double c_ambient = 1.0;
  std::vector<double> c;     // per-layer sqrt(n^2 - sin^2 theta)
  std::vector<double> d_nm;  // per-layer thickness
};

SweepPlan make_plan(const Stack& stack, double theta);

// Computes, for each omega, the photon-TMM transmissivity/reflectivity and
// the classical TE transmissivity. Both chains share the per-layer phase
// K0 * C * d but are otherwise independent code paths.
using SweepFn = void (*)(const SweepPlan& plan, const double* omega,
                         std::size_t count, double* transmissivity,
                         double* reflectivity, double* classical_t);

void sweep_scalar(const SweepPlan& plan, const double* omega,
                  std::size_t count, double* transmissivity,
                  double* reflectivity, double* classical_t);

#if defined(PTMM_HAVE_AVX2_KERNEL)
void sweep_avx2(const SweepPlan& plan, const double* omega, std::size_t count,
                double* transmissivity, double* reflectivity,
                double* classical_t);
#endif

enum class Lane { Auto, Scalar, Avx2 };

// True when the AVX2 lane is both compiled in and supported by this CPU.
bool avx2_available();

// Runtime lane selection. Auto honors the PHOTONIC_TMM_SIMD environment
// variable ("scalar", "avx2", "auto") and otherwise picks the widest
// available lane. Requesting an unavailable lane throws.
SweepFn select(Lane lane);
std::string lane_name(SweepFn fn);

// All lanes usable on this machine, for equivalence tests.
std::vector<std::pair<std::string, SweepFn>> available_lanes();

}  // namespace ptmm::kernels
