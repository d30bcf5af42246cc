#pragma once

namespace ptmm {

// Vacuum speed of light in nm/s. All lengths in this library are nanometers,
// all frequencies are absolute angular frequencies in rad/s, so wavenumbers
// K0 = omega / c come out in rad/nm.
inline constexpr double kSpeedOfLightNmPerS = 2.99792458e17;

}  // namespace ptmm
