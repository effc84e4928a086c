#pragma once

namespace uniformize {

/// Entry point of the `uniformize` tool. Exit codes: 0 every check passed
/// (SKIPPED and INFO included), 1 some check failed, 2 usage, config or
/// input error.
int run_cli(int argc, char** argv);

}  // namespace uniformize
