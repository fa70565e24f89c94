#include "besovclaw/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace besovclaw {

Grid2D::Grid2D(double t0, double t1, double x0, double x1, int nt, int nx)
    : t0_(t0), t1_(t1), x0_(x0), x1_(x1), nt_(nt), nx_(nx) {
    if (!(t1 > t0) || !(x1 > x0)) throw std::invalid_argument("Grid2D: empty domain");
    if (nt < 4 || nx < 4) throw std::invalid_argument("Grid2D: nt and nx must be >= 4");
    if (!std::isfinite(t0) || !std::isfinite(t1) || !std::isfinite(x0) || !std::isfinite(x1))
        throw std::invalid_argument("Grid2D: non-finite bounds");
    dt_ = (t1 - t0) / nt;
    dx_ = (x1 - x0) / nx;
}

bool Grid2D::contains(const Box2D& b, double slack) const {
    return b.ta >= t0_ - slack && b.tb <= t1_ + slack && b.xa >= x0_ - slack &&
           b.xb <= x1_ + slack;
}

VelocityGrid::VelocityGrid(double vmin, double vmax, int nv) : vmin_(vmin), vmax_(vmax), nv_(nv) {
    if (!(vmax > vmin)) throw std::invalid_argument("VelocityGrid: empty range");
    if (nv < 4) throw std::invalid_argument("VelocityGrid: nv must be >= 4");
    dv_ = (vmax - vmin) / nv;
}

}  // namespace besovclaw
