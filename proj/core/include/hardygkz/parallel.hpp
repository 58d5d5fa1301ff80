#pragma once

#include <functional>

namespace hardygkz {

// Worker cap for column-parallel loops. Resolution order:
// set_max_threads() override, HARDY_GKZ_THREADS, hardware_concurrency.
int max_threads();
void set_max_threads(int n);

// Static contiguous split of [begin, end) over at most max_threads()
// workers. Chunk boundaries depend only on the range and the thread
// count, and each index is touched by exactly one worker, so any
// computation whose per-index work is independent produces identical
// bytes at every thread count.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace hardygkz
