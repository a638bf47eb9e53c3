#pragma once

namespace tildeiso::cli {

// Entry point behind main(). Exit codes: 0 success, 2 invalid input,
// 3 no witness found (the `witness` subcommand), 4 budget exceeded.
int run(int argc, const char* const* argv);

}  // namespace tildeiso::cli
