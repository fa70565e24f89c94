#pragma once

#include <cstddef>
#include <functional>

namespace besovclaw {

// Worker count used by parallel_for. Resolved from BESOVCLAW_THREADS on
// first use; set_thread_cap overrides it (0 restores the env/default value).
int thread_cap();
void set_thread_cap(int n);

// Runs body(begin, end) over fixed-size blocks of [0, n). Block boundaries
// depend only on n, never on the worker count, so any value written per
// index is identical for every thread configuration.
void parallel_for_blocked(std::size_t n, std::size_t block,
                          const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace besovclaw
