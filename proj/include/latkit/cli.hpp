#pragma once

namespace latkit {

// Parses argv, dispatches to the computation modules and writes the report.
// Exit codes: 0 success, 1 violated bound or identity, 2 input error,
// 3 budget exceeded.
int run_cli(int argc, const char* const* argv);

} // namespace latkit
