#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace besovclaw {

// Pairwise (tree) summation. Fixed association order, so results are
// bit-identical across runs and thread counts.
double pairwise_sum(std::span<const double> xs);

// Sum of f(i) for i in [0, n) through a scratch buffer, pairwise-reduced.
template <typename F>
double pairwise_sum_of(std::size_t n, F&& f) {
    std::vector<double> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = f(i);
    return pairwise_sum(buf);
}

// Row-major grid reduction: pairwise within each row, then pairwise across
// row partials. Rows are independent, so the row loop may run in parallel
// without changing a single bit of the result.
double pairwise_sum_rows(std::size_t rows, std::size_t cols,
                         const std::function<double(std::size_t, std::size_t)>& cell);

}  // namespace besovclaw
