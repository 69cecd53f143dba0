#include "riesz/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace riesz {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int parallel_chunk_count(size_t n) {
    int t = thread_count();
    size_t per = 2048;
    int by_size = static_cast<int>(std::min<size_t>(t, std::max<size_t>(1, n / per)));
    return std::max(1, by_size);
}

} // namespace riesz
