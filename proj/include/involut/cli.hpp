#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace involut {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNoVerdict = 3;

/// Entry point of the `involut` command line; args[0] is the program name.
/// JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace involut
