#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skeinpf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitMismatch = 3;

/// Entry point shared by the executable and the tests. Results go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeinpf::cli
