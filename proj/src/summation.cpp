#include "besovclaw/summation.hpp"

#include <functional>

#include "besovclaw/parallel.hpp"

namespace besovclaw {

namespace {

double pairwise_impl(const double* xs, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_impl(xs, half) + pairwise_impl(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise_impl(xs.data(), xs.size());
}

double pairwise_sum_rows(std::size_t rows, std::size_t cols,
                         const std::function<double(std::size_t, std::size_t)>& cell) {
    std::vector<double> partial(rows, 0.0);
    parallel_for_blocked(rows, 16, [&](std::size_t r0, std::size_t r1) {
        std::vector<double> buf(cols);
        for (std::size_t r = r0; r < r1; ++r) {
            for (std::size_t c = 0; c < cols; ++c) buf[c] = cell(r, c);
            partial[r] = pairwise_sum(buf);
        }
    });
    return pairwise_sum(partial);
}

}  // namespace besovclaw
