#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gonal::cli {

// Full command-line driver, factored out of main() so tests can invoke it
// in-process and capture the exact bytes written to out/err.
//
// Exit codes: 0 success, 1 usage or input error (message on err), 2 violated
// internal invariant or failed self-check (the invariant is named on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gonal::cli
