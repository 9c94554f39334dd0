#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace storalloc::cli {

// Parses argv-style arguments (program name excluded), dispatches to the
// engines, and writes CSV or JSON records to `out` (or to --out <path>).
// Exit codes: 0 success, 2 usage/parameter errors, 3 instances too large to
// enumerate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace storalloc::cli
