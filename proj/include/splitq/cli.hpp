#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitq::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;         // bad flags, unreadable or malformed input
inline constexpr int kPrecondition = 2;  // inputs parse but violate a precondition
inline constexpr int kNegative = 3;      // not decomposable / verification failed
inline constexpr int kExhausted = 4;     // witness search found nothing

// Runs the tool with args excluding the program name. Data goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Shortest text that keeps at least 12 significant digits, '.' separator,
// independent of the global locale.
std::string format_number(double v);

}  // namespace splitq::cli
