#pragma once

#include <iosfwd>
#include <string>

namespace lefkit {

// End-to-end acceptance suite. Runs every criterion whose identifier contains
// `filter` (all of them when the filter is empty), writes one [PASS] or [FAIL]
// line per criterion to `out` followed by a summary count, and returns the
// number of failed criteria. Individual check failures print their own
// [FAIL] file:line lines before the criterion verdict.
int run_acceptance(const std::string& filter, std::ostream& out);

}  // namespace lefkit
