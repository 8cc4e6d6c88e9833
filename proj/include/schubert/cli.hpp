#pragma once

#include <iosfwd>

namespace schubert {

// Entry point behind the command-line binary, separated so tests can drive
// it directly. Exit codes: 0 success, 1 mathematical domain error, 2 parse
// or usage error, 3 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}
