// Seeded property corpus runnable from the command line.
#pragma once

#include <cstdint>
#include <ostream>

namespace twist {

// Runs the property groups, printing one line per group plus a summary.
// Returns the number of failed checks.
int run_selftest(std::uint64_t seed, std::ostream& out);

}  // namespace twist
