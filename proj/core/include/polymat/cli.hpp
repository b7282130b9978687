#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polymat {

// Runs one command-line invocation (arguments without the program name).
// Exit status: 0 success, 1 sweep mismatch / failed verification, 2 usage
// or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polymat
