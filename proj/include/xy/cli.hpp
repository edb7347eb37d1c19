#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xy {

// Parses and runs one command line (argv[0] excluded). Returns the process
// exit code: 0 success, 1 usage error, 2 verification failure, 3 numerical
// non-convergence. All output goes to the given streams or to --output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xy
