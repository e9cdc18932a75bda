#pragma once

#include <functional>

namespace sg {

// Worker count: SPLATGUIDE_THREADS if set (values < 1 clamp to 1),
// otherwise hardware concurrency.
int worker_count();

// Runs fn(chunk, begin, end) over a static partition of [0, n). The
// partition depends only on n and chunk_count, never on the worker count,
// so per-chunk accumulation combined in chunk order is bit-reproducible
// regardless of threading.
void parallel_chunks(int n, int chunk_count,
                     const std::function<void(int, int, int)>& fn);

} // namespace sg
