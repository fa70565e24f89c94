#include "besovclaw/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace besovclaw {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
    if (const char* s = std::getenv("BESOVCLAW_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

}  // namespace

int thread_cap() {
    int o = g_override.load();
    return o >= 1 ? o : env_threads();
}

void set_thread_cap(int n) { g_override.store(n < 1 ? 0 : n); }

void parallel_for_blocked(std::size_t n, std::size_t block,
                          const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    if (block == 0) block = 1;
    const std::size_t nblocks = (n + block - 1) / block;
    const int workers = std::min<int>(thread_cap(), static_cast<int>(nblocks));
    if (workers <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            body(b * block, std::min(n, (b + 1) * block));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        try {
            for (;;) {
                std::size_t b = next.fetch_add(1);
                if (b >= nblocks) break;
                body(b * block, std::min(n, (b + 1) * block));
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(nblocks);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace besovclaw
