/// @file cli.hpp
/// @brief The strat_euler command line, as a library function so tests can
///        drive it without spawning processes.
///
/// Exit codes: 0 all results ok, 1 some identity or expected value failed,
/// 2 bad input (usage, schema or data errors).

#pragma once

#include <iosfwd>

namespace strateuler {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Color is used when `out` is a terminal and STRAT_EULER_COLOR is not "0".
bool color_enabled(bool is_terminal);

}  // namespace strateuler
