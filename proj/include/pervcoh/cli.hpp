#pragma once

namespace pervcoh {

// Full command-line driver. Exit code contract: 0 = every requested check
// passed, 2 = a mathematical check produced a false verdict (witnesses in the
// JSON report on stdout), 1 = unusable input (bad usage, unreadable file,
// schema violation, unknown names). The canonical JSON report goes to stdout,
// a one-line-per-check summary to stderr.
int run_cli(int argc, const char* const* argv);

}  // namespace pervcoh
