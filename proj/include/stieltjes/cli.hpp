#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stieltjes::cli {

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on a verification mismatch, 2 on any error; errors
/// are written to `out` as {"error": name, "message": text}.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stieltjes::cli
