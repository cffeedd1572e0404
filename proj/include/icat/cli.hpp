#pragma once

// Batch front-end. Every command emits one deterministic report (JSON, or
// CSV of the report's table) and maps its verdict to an exit status.

#include <iosfwd>
#include <string>
#include <vector>

namespace icat {

inline constexpr const char* kToolVersion = "icat 0.1.0";

/// Exit statuses: 0 pass or complete, 1 configuration error, 2 fail with
/// witness, 3 inconclusive.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icat
