#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCrossCheck = 2;

// args[0] is the program name. Report goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqc
