#pragma once

#include <cstddef>

namespace besovclaw {

// Rectangle [ta, tb] x [xa, xb] in the (t, x) plane.
struct Box2D {
    double ta = 0.0, tb = 0.0, xa = 0.0, xb = 0.0;
    bool nondegenerate() const { return tb > ta && xb > xa; }
};

// Uniform cell-centered space-time grid on [t0, t1] x [x0, x1].
class Grid2D {
  public:
    Grid2D(double t0, double t1, double x0, double x1, int nt, int nx);

    double t0() const { return t0_; }
    double t1() const { return t1_; }
    double x0() const { return x0_; }
    double x1() const { return x1_; }
    int nt() const { return nt_; }
    int nx() const { return nx_; }
    double dt() const { return dt_; }
    double dx() const { return dx_; }

    double tcenter(int n) const { return t0_ + (n + 0.5) * dt_; }
    double xcenter(int i) const { return x0_ + (i + 0.5) * dx_; }

    std::size_t size() const { return static_cast<std::size_t>(nt_) * nx_; }
    bool contains(const Box2D& b, double slack = 1e-12) const;
    Box2D box() const { return {t0_, t1_, x0_, x1_}; }

    bool operator==(const Grid2D&) const = default;

  private:
    double t0_, t1_, x0_, x1_;
    int nt_, nx_;
    double dt_, dx_;
};

// Uniform cell-centered velocity grid on [vmin, vmax].
class VelocityGrid {
  public:
    VelocityGrid(double vmin, double vmax, int nv);

    double vmin() const { return vmin_; }
    double vmax() const { return vmax_; }
    int nv() const { return nv_; }
    double dv() const { return dv_; }
    double vcenter(int k) const { return vmin_ + (k + 0.5) * dv_; }
    // Upper edge of cell k.
    double vedge(int k) const { return vmin_ + (k + 1.0) * dv_; }

    bool operator==(const VelocityGrid&) const = default;

  private:
    double vmin_, vmax_;
    int nv_;
    double dv_;
};

}  // namespace besovclaw
