#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nnr3 {

// Command-line entry point, callable in-process for testing. `args` are the
// arguments after the program name, in natural order. The JSON report is
// written to `out`, diagnostics to `err`. Exit codes: 0 all checks pass,
// 1 some check FAILs, 2 a work budget was exhausted (ABORTED), 64 usage or
// input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nnr3
