#pragma once

#include <functional>
#include <vector>

#include "besovclaw/grid.hpp"

namespace besovclaw {

// Immutable cell-centered samples u(t_n, x_i) with cached sup norm.
class SpaceTimeField {
  public:
    SpaceTimeField(Grid2D grid, std::vector<double> values);

    static SpaceTimeField from_function(const Grid2D& grid,
                                        const std::function<double(double, double)>& f);
    static SpaceTimeField constant(const Grid2D& grid, double c);

    const Grid2D& grid() const { return grid_; }
    double operator()(int n, int i) const {
        return values_[static_cast<std::size_t>(n) * grid_.nx() + i];
    }
    // Extension by zero outside the grid, matching the compact-support
    // convention used by the shift operators.
    double extended(int n, int i) const {
        if (n < 0 || n >= grid_.nt() || i < 0 || i >= grid_.nx()) return 0.0;
        return (*this)(n, i);
    }
    double supnorm() const { return supnorm_; }
    const std::vector<double>& values() const { return values_; }

  private:
    Grid2D grid_;
    std::vector<double> values_;
    double supnorm_;
};

// ∬ w(t,x)·cell(n,i) dx dt over the whole grid, midpoint in both variables,
// deterministic pairwise reduction.
double grid_integral(const Grid2D& g, const std::function<double(int, int)>& cell);

}  // namespace besovclaw
