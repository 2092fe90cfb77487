#pragma once

#include <iosfwd>

namespace pcmrank {

/**
 * @brief Runs the command-line tool.
 *
 * Subcommands: `validate <file>`, `solve <file>` and `single <file>`; see the
 * README for flags. Exit codes: 0 success, 1 validation failure, 2 parse or
 * usage error, 3 numerical failure.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcmrank
