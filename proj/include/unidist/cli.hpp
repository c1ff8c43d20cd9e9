#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unidist::cli {

// Batch front end. JSON on stdout; exit 0 on success, 2 on input validation
// failure, 3 when a size cap is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace unidist::cli
