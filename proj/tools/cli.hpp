#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gotzmann::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBudgetRefused = 3;

// args[0] is the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gotzmann::cli
