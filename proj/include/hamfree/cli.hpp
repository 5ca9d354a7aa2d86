#pragma once

// Command-line front end. Everything on stdout is machine-parseable (graph6
// lines or JSON); human prose goes to stderr. Exit codes: 0 success, 1
// verification mismatch, 2 usage error, 3 budget or hypothesis refusal.

#include <iosfwd>
#include <string>
#include <vector>

namespace hamfree {

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace hamfree
