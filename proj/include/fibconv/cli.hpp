#pragma once

#include <iosfwd>

namespace fibconv {

// Command-line entry point. Exit codes: 0 success, 1 verification failure,
// 2 usage or solver error (reported as a JSON object on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibconv
