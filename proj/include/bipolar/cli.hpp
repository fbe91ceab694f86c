#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bipolar/error.hpp"

namespace bipolar::cli {

enum Exit { ok = 0, negative = 1, input_error = 2, limit = 3 };

// `command` is the subcommand that raised; law violations are verdicts under `check`.
int exit_code(ErrorKind kind, const std::string& command);

// args excludes the program name. Documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bipolar::cli
