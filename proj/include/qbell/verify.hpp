#pragma once

#include <cstdint>
#include <ostream>

namespace qbell {

/// Runs the full invariant suite, writing one [PASS]/[FAIL] line per check.
/// Returns the number of failed checks. Output is deterministic for a fixed
/// seed.
int run_verification(std::ostream& out, std::uint64_t seed);

}  // namespace qbell
