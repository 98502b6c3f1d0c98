#pragma once

// Command-line front end, exposed as an in-process entry point so tests can
// drive it without spawning.  Exit codes: 0 success/verified, 1 verification
// failure, 2 usage or input error, 3 indeterminate outcome.  All payload goes
// to out, diagnostics to err; JSON output is only ever written whole.

#include <iosfwd>

namespace goodfact {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace goodfact
