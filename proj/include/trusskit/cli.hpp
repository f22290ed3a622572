#pragma once

#include <ostream>

namespace trusskit {

// Exit codes: 0 every finding passed, 1 a finding failed, 2 bad input,
// 3 an enumeration bound was exceeded.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBound = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trusskit
