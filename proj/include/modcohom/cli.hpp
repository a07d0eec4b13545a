#pragma once

#include <iosfwd>

namespace modcohom {

// Entry point of the command-line tool. Exit codes: 0 when every check
// passes, 1 when a mathematical check fails, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modcohom
