#include "besovclaw/field.hpp"

#include <cmath>
#include <stdexcept>

#include "besovclaw/summation.hpp"

namespace besovclaw {

SpaceTimeField::SpaceTimeField(Grid2D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)), supnorm_(0.0) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("SpaceTimeField: value count does not match grid");
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::domain_error("non-finite sample");
        supnorm_ = std::max(supnorm_, std::abs(v));
    }
}

SpaceTimeField SpaceTimeField::from_function(const Grid2D& grid,
                                             const std::function<double(double, double)>& f) {
    std::vector<double> vals(grid.size());
    for (int n = 0; n < grid.nt(); ++n)
        for (int i = 0; i < grid.nx(); ++i)
            vals[static_cast<std::size_t>(n) * grid.nx() + i] =
                f(grid.tcenter(n), grid.xcenter(i));
    return SpaceTimeField(grid, std::move(vals));
}

SpaceTimeField SpaceTimeField::constant(const Grid2D& grid, double c) {
    return SpaceTimeField(grid, std::vector<double>(grid.size(), c));
}

double grid_integral(const Grid2D& g, const std::function<double(int, int)>& cell) {
    const double sum = pairwise_sum_rows(
        static_cast<std::size_t>(g.nt()), static_cast<std::size_t>(g.nx()),
        [&](std::size_t n, std::size_t i) {
            return cell(static_cast<int>(n), static_cast<int>(i));
        });
    return sum * g.dt() * g.dx();
}

}  // namespace besovclaw
