#pragma once

#include <functional>

namespace birot {

// Requested <= 0 means "use what the machine has", never less than 1.
int resolve_workers(int requested);

// Runs fn(begin, end) over a static partition of [0, n) into `workers`
// contiguous chunks, one thread per chunk. The partition depends only on n
// and workers, and callers only ever write to disjoint state per index, so
// results cannot depend on scheduling. The first exception thrown by any
// chunk is rethrown on the calling thread after all chunks join.
void parallel_for(long long n, int workers,
                  const std::function<void(long long, long long)>& fn);

}  // namespace birot
