#pragma once

#include <iosfwd>

namespace gsp {

// Entry point of the `gsp` tool. Exit status: 0 yes, 1 no, 2 error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsp
