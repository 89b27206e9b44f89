#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. run_cli takes argv-style arguments (program name
// excluded) and writes to the given streams, so tests can drive it
// in-process. Exit codes: 0 success/agreement, 1 mathematical disagreement
// or a discovered counterexample (also: invalid spec under `validate`),
// 2 usage or config errors.

namespace pncc::cli {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1..10,25" -> 1,2,...,10,25. Comma-separated tokens, each a nonnegative
// integer or an a..b range with a <= b. Throws std::invalid_argument.
std::vector<long long> parse_degrees(const std::string& text);

}  // namespace pncc::cli
