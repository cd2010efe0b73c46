// Command-line front end.  `run` is the whole program minus process setup,
// so that tests can drive it with in-memory streams.
//
// Exit codes: 0 success (or a passing verification), 1 a failing
// verification, 2 a usage, input or precondition error.

#ifndef COXRANK_TOOLS_CLI_HPP_
#define COXRANK_TOOLS_CLI_HPP_

#include <ostream>

namespace coxrank::cli {

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxrank::cli

#endif  // COXRANK_TOOLS_CLI_HPP_
