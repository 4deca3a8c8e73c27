#pragma once

#include <iosfwd>

namespace mvop::verify {

// Runs every acceptance check, printing one pass/fail line per criterion.
// Returns true when all pass.
bool run_suite(std::ostream& os);

}  // namespace mvop::verify
