#pragma once

#include <iosfwd>

namespace krsl2 {

// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace krsl2
