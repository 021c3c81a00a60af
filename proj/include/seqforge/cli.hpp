#pragma once

#include <ostream>

namespace seqforge::cli {

/// Exit codes: 0 success, 1 usage error, 2 domain error (message on err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqforge::cli
