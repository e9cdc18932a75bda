#include "parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sg {

int worker_count() {
    if (const char* env = std::getenv("SPLATGUIDE_THREADS")) {
        int n = std::atoi(env);
        return n < 1 ? 1 : n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(int n, int chunk_count,
                     const std::function<void(int, int, int)>& fn) {
    if (n <= 0) return;
    if (chunk_count > n) chunk_count = n;
    if (chunk_count < 1) chunk_count = 1;

    auto bounds = [n, chunk_count](int c, int& begin, int& end) {
        begin = static_cast<int>(static_cast<long long>(n) * c / chunk_count);
        end = static_cast<int>(static_cast<long long>(n) * (c + 1) / chunk_count);
    };

    int workers = worker_count();
    if (workers == 1 || chunk_count == 1) {
        for (int c = 0; c < chunk_count; ++c) {
            int begin, end;
            bounds(c, begin, end);
            fn(c, begin, end);
        }
        return;
    }

    std::atomic<int> next{0};
    auto run = [&] {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= chunk_count) return;
            int begin, end;
            bounds(c, begin, end);
            fn(c, begin, end);
        }
    };

    int spawn = workers < chunk_count ? workers : chunk_count;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(spawn - 1));
    for (int i = 1; i < spawn; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

} // namespace sg
