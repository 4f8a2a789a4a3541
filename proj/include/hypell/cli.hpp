#pragma once

// Command-line entry points.  The CLI is a thin shell over these functions so
// the tests can drive them in-process and assert byte-identical output.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 numeric
// non-convergence, 4 hyperellipticity failure, 5 inversion failure.

#include <iostream>
#include <string>
#include <vector>

namespace hypell {

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hypell
