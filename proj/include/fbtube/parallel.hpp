#pragma once
// Minimal fork-join helper for index-parallel sweeps. Workers own disjoint
// contiguous ranges and write only to their own slots, so results do not
// depend on the worker count.

#include <cstdint>
#include <functional>

namespace fbtube {

/// Runs fn(begin, end) over a static partition of [0, n) on `threads`
/// workers (0 = hardware concurrency). Exceptions from workers are rethrown.
void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace fbtube
