#ifndef EULERPATH_PARALLEL_HPP
#define EULERPATH_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace eulerpath {

// Worker count from EULER_THREADS, clamped to [1, 256]; 1 when unset or
// unparsable.
unsigned configured_threads();

// Split [0, n) into one contiguous range per worker and run
// fn(worker, begin, end) on each.  With one worker everything runs inline.
// Workers must only touch worker-indexed state; results must be merged by
// worker index afterwards so the outcome is independent of the thread count.
// The first worker exception (if any) is rethrown after all threads join.
void parallel_ranges(std::uint64_t n,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace eulerpath

#endif  // EULERPATH_PARALLEL_HPP
