// Entry point for the gcf command-line tool, split from main() so the
// scripted-session tests can drive it in process and capture its streams.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcflab::cli {

// Parses and runs one command line (arguments only, no program name).
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcflab::cli
