#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dc::cli {

// args excludes the program name. Exit status: 0 success, 1 domain error
// (including malformed input), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dc::cli
