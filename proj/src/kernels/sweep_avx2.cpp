// AVX2/FMA lane: four frequency points per pass. Compiled only into this
// translation unit (see CMakeLists) and reached through runtime dispatch, so
// nothing here may be inlined into generic code paths.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "ptmm/constants.hpp"
#include "ptmm/kernels.hpp"

namespace ptmm::kernels {

namespace {

struct V4c {
  __m256d re;
  __m256d im;
};

inline V4c vc_broadcast(double re) {
  return {_mm256_set1_pd(re), _mm256_setzero_pd()};
}

inline V4c vc_mul(V4c a, V4c b) {
  return {_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
          _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re))};
}

inline V4c vc_add(V4c a, V4c b) {
  return {_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im)};
}

// a*b + c*d with complex operands
inline V4c vc_muladd2(V4c a, V4c b, V4c c, V4c d) {
  return vc_add(vc_mul(a, b), vc_mul(c, d));
}

inline __m256d vc_norm(V4c a) {
  return _mm256_fmadd_pd(a.re, a.re, _mm256_mul_pd(a.im, a.im));
}

// a / b without FMA surprises: (a * conj b) / |b|^2
inline V4c vc_div(V4c a, V4c b) {
  const __m256d inv = _mm256_div_pd(_mm256_set1_pd(1.0), vc_norm(b));
  const V4c conj_b{b.re, _mm256_sub_pd(_mm256_setzero_pd(), b.im)};
  V4c prod = vc_mul(a, conj_b);
  return {_mm256_mul_pd(prod.re, inv), _mm256_mul_pd(prod.im, inv)};
}

}  // namespace

void sweep_avx2(const SweepPlan& plan, const double* omega, std::size_t count,
                double* transmissivity, double* reflectivity,
                double* classical_t) {
  const std::size_t layers = plan.c.size();
  const double c1 = plan.c_ambient;
  const double inv_c_light = 1.0 / kSpeedOfLightNmPerS;

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega + i);
    const __m256d k0 = _mm256_mul_pd(w, _mm256_set1_pd(inv_c_light));

    V4c g11 = vc_broadcast(1.0), g12 = vc_broadcast(0.0);
    V4c g21 = vc_broadcast(0.0), g22 = vc_broadcast(1.0);
    if (layers > 0) {
      const double p = 0.5 * (1.0 + c1 / plan.c[0]);
      const double q = 0.5 * (1.0 - c1 / plan.c[0]);
      g11 = vc_broadcast(p);
      g12 = vc_broadcast(q);
      g21 = vc_broadcast(q);
      g22 = vc_broadcast(p);
    }
    V4c m11 = vc_broadcast(1.0), m12 = vc_broadcast(0.0);
    V4c m21 = vc_broadcast(0.0), m22 = vc_broadcast(1.0);

    alignas(32) double phi[4];
    alignas(32) double co[4];
    alignas(32) double si[4];
    for (std::size_t k = 0; k < layers; ++k) {
      const double ck = plan.c[k];
      const __m256d tau = _mm256_set1_pd(ck * plan.d_nm[k]);
      _mm256_store_pd(phi, _mm256_mul_pd(k0, tau));
      for (int lane = 0; lane < 4; ++lane) {
        co[lane] = std::cos(phi[lane]);
        si[lane] = std::sin(phi[lane]);
      }
      const __m256d vco = _mm256_load_pd(co);
      const __m256d vsi = _mm256_load_pd(si);

      const double to_c = (k + 1 < layers) ? plan.c[k + 1] : c1;
      const double ratio = ck / to_c;
      const __m256d half_plus = _mm256_set1_pd(0.5 * (1.0 + ratio));
      const __m256d half_minus = _mm256_set1_pd(0.5 * (1.0 - ratio));
      const V4c b11{_mm256_mul_pd(half_plus, vco), _mm256_mul_pd(half_plus, vsi)};
      const V4c b12{_mm256_mul_pd(half_minus, vco),
                    _mm256_mul_pd(half_minus, _mm256_sub_pd(_mm256_setzero_pd(), vsi))};
      const V4c b21{_mm256_mul_pd(half_minus, vco), _mm256_mul_pd(half_minus, vsi)};
      const V4c b22{_mm256_mul_pd(half_plus, vco),
                    _mm256_mul_pd(half_plus, _mm256_sub_pd(_mm256_setzero_pd(), vsi))};

      const V4c n11 = vc_muladd2(b11, g11, b12, g21);
      const V4c n12 = vc_muladd2(b11, g12, b12, g22);
      const V4c n21 = vc_muladd2(b21, g11, b22, g21);
      const V4c n22 = vc_muladd2(b21, g12, b22, g22);
      g11 = n11;
      g12 = n12;
      g21 = n21;
      g22 = n22;

      const V4c a11{vco, _mm256_setzero_pd()};
      const V4c a12{_mm256_setzero_pd(),
                    _mm256_mul_pd(_mm256_set1_pd(-1.0 / ck), vsi)};
      const V4c a21{_mm256_setzero_pd(),
                    _mm256_mul_pd(_mm256_set1_pd(-ck), vsi)};
      const V4c c11 = vc_muladd2(m11, a11, m12, a21);
      const V4c c12 = vc_muladd2(m11, a12, m12, a11);
      const V4c c21 = vc_muladd2(m21, a11, m22, a21);
      const V4c c22 = vc_muladd2(m21, a12, m22, a11);
      m11 = c11;
      m12 = c12;
      m21 = c21;
      m22 = c22;
    }

    const V4c neg_g21{_mm256_sub_pd(_mm256_setzero_pd(), g21.re),
                      _mm256_sub_pd(_mm256_setzero_pd(), g21.im)};
    const V4c r = vc_div(neg_g21, g22);
    const V4c t = vc_add(g11, vc_mul(g12, r));
    _mm256_storeu_pd(transmissivity + i, vc_norm(t));
    _mm256_storeu_pd(reflectivity + i, vc_norm(r));

    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vc1sq = _mm256_set1_pd(c1 * c1);
    V4c denom{_mm256_mul_pd(vc1, m11.re), _mm256_mul_pd(vc1, m11.im)};
    denom = vc_add(denom, V4c{_mm256_mul_pd(vc1sq, m12.re),
                              _mm256_mul_pd(vc1sq, m12.im)});
    denom = vc_add(denom, m21);
    denom = vc_add(denom, V4c{_mm256_mul_pd(vc1, m22.re),
                              _mm256_mul_pd(vc1, m22.im)});
    const V4c t_cl = vc_div(vc_broadcast(2.0 * c1), denom);
    _mm256_storeu_pd(classical_t + i, vc_norm(t_cl));
  }

  if (i < count) {
    sweep_scalar(plan, omega + i, count - i, transmissivity + i,
                 reflectivity + i, classical_t + i);
  }
}

}  // namespace ptmm::kernels
