#pragma once

namespace sofd::cli {

/// Runs one subcommand. Exit codes: 0 success, 1 usage/config error,
/// 2 numerical failure (instability).
int dispatch(int argc, const char* const* argv);

}  // namespace sofd::cli
