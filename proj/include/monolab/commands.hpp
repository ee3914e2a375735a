// Command-line front end. run_cli is the whole program; the executable only
// forwards argv and the standard streams.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace monolab {

struct VerifyCheck {
  std::string name;
  double deviation = 0.0;  ///< measured deviation from the expected value
  double tolerance = 0.0;
  bool pass = false;
};

/// The self-check suite behind `verify`: closed-form vs numeric
/// concurrences, a hand-evaluated concurrence, W-state constants, volume
/// Monte-Carlo points, the source-bracket gradient and a CKW sweep.
std::vector<VerifyCheck> run_verify_checks(std::uint64_t seed);

/// Parses and executes one command. Reports go to `out`, diagnostics to
/// `err`. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monolab
