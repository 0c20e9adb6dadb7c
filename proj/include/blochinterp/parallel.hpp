#pragma once

#include <cstddef>
#include <functional>

namespace blochinterp {

// Worker count used by grid sweeps: BLOCH_INTERP_THREADS when set to a
// positive value, hardware concurrency when unset or 0. Read once per
// process.
int thread_cap();

// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
// possibly concurrently. Deterministic as long as chunks write to disjoint
// slots; reductions over the results stay serial and ordered. If chunks
// throw, the exception of the lowest chunk is rethrown after all workers
// join.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace blochinterp
