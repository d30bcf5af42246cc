#include <cmath>
#include <complex>

#include "ptmm/constants.hpp"
#include "ptmm/kernels.hpp"

namespace ptmm::kernels {

// Reference lane. Both chains consume the same per-layer phase
// phi = (omega/c) * C * d, so cos/sin are computed once per layer.
void sweep_scalar(const SweepPlan& plan, const double* omega,
                  std::size_t count, double* transmissivity,
                  double* reflectivity, double* classical_t) {
  using Cx = std::complex<double>;
  const std::size_t layers = plan.c.size();
  const double c1 = plan.c_ambient;

  for (std::size_t i = 0; i < count; ++i) {
    const double k0 = omega[i] / kSpeedOfLightNmPerS;

    // photon chain, entry block first
    Cx g11{1.0, 0.0}, g12{}, g21{}, g22{1.0, 0.0};
    if (layers > 0) {
      const double p = 0.5 * (1.0 + c1 / plan.c[0]);
      const double q = 0.5 * (1.0 - c1 / plan.c[0]);
      g11 = p;
      g12 = q;
      g21 = q;
      g22 = p;
    }
    // classical chain
    Cx m11{1.0, 0.0}, m12{}, m21{}, m22{1.0, 0.0};

    for (std::size_t k = 0; k < layers; ++k) {
      const double ck = plan.c[k];
      const double phi = k0 * ck * plan.d_nm[k];
      const double co = std::cos(phi);
      const double si = std::sin(phi);

      const double to_c = (k + 1 < layers) ? plan.c[k + 1] : c1;
      const double ratio = ck / to_c;
      const Cx e{co, si};
      const Cx ec{co, -si};
      const Cx b11 = 0.5 * (1.0 + ratio) * e;
      const Cx b12 = 0.5 * (1.0 - ratio) * ec;
      const Cx b21 = 0.5 * (1.0 - ratio) * e;
      const Cx b22 = 0.5 * (1.0 + ratio) * ec;
      const Cx n11 = b11 * g11 + b12 * g21;
      const Cx n12 = b11 * g12 + b12 * g22;
      const Cx n21 = b21 * g11 + b22 * g21;
      const Cx n22 = b21 * g12 + b22 * g22;
      g11 = n11;
      g12 = n12;
      g21 = n21;
      g22 = n22;

      const Cx a11{co, 0.0};
      const Cx a12{0.0, -si / ck};
      const Cx a21{0.0, -ck * si};
      const Cx c11 = m11 * a11 + m12 * a21;
      const Cx c12 = m11 * a12 + m12 * a11;
      const Cx c21 = m21 * a11 + m22 * a21;
      const Cx c22 = m21 * a12 + m22 * a11;
      m11 = c11;
      m12 = c12;
      m21 = c21;
      m22 = c22;
    }

    const Cx r = -g21 / g22;
    const Cx t = g11 + g12 * r;
    transmissivity[i] = std::norm(t);
    reflectivity[i] = std::norm(r);

    const Cx denom = c1 * m11 + c1 * c1 * m12 + m21 + c1 * m22;
    const Cx t_cl = 2.0 * c1 / denom;
    classical_t[i] = std::norm(t_cl);
  }
}

}  // namespace ptmm::kernels
