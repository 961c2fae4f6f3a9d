#pragma once

#include <iosfwd>

namespace shimorin {

// Exit codes: 0 pass, 1 fail, 2 usage or validation error, 3 numerical breakdown.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shimorin
