#pragma once

#include <string>
#include <vector>

namespace trioalign {

/// Command-line entry point. `args` excludes the program name. Exit codes:
/// 0 success, 1 usage error, 2 input/parse error, 3 capacity error.
int cli_main(std::vector<std::string> args);

/// Picks the default tile size by timing a short synthetic alignment sweep
/// over N in {2, 4, 8, 16}. Cached per process; a --tile-size flag bypasses
/// it entirely.
int32_t auto_tile_size();

}  // namespace trioalign
