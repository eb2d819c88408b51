#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace girthforge::cli {

// Exit codes: 0 all certificates pass, 2 verification failure,
// 3 parse/config error, 4 resource budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitBudget = 4;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace girthforge::cli
