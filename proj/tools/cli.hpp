#pragma once

#include <ostream>

namespace fairrep::cli {

// Exit codes: 0 success, 1 infeasible input or failed check, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fairrep::cli
