#pragma once

#include <iosfwd>

#include "ptmm/config.hpp"

namespace ptmm {

enum class Command { Spectrum, Profile, Bandgap, Validate };

// Exit codes shared with the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

// Executes one command against a validated config. Data files land in
// config.output.directory; human-readable progress and the validation report
// go to `out`. I/O failures are reported with their paths and map to
// kExitIo; validate maps failed checks to kExitPropertyFailure.
int run(const RunConfig& config, Command command, std::ostream& out);

}  // namespace ptmm
