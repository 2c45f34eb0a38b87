#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toricap {

// Full command-line surface, callable in-process.  `args` excludes the
// program name.  Result documents go to `out`; CLI11 help text goes to `out`,
// its diagnostics to `err`.  Returns the process exit code: 0 success,
// 2 input problem (bad flags, malformed JSON, schema or precondition
// violations), 3 undecided mathematics (step limits, failed internal gates).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricap
