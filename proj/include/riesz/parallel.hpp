#ifndef RIESZ_PARALLEL_HPP
#define RIESZ_PARALLEL_HPP

#include <cstddef>

namespace riesz {

// Global worker bound for data-parallel loops (0 = hardware concurrency).
void set_thread_count(int n);
int thread_count();

// Splits [0, n) into contiguous chunks, runs body(chunk_index, begin, end) in
// parallel, then lets the caller combine per-chunk results in chunk order so
// floating-point reductions stay deterministic for a fixed n.
int parallel_chunk_count(size_t n);

} // namespace riesz

#endif
