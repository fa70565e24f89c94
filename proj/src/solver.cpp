#include "besovclaw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "besovclaw/summation.hpp"

namespace besovclaw {

InitialData InitialData::riemann(double ul, double ur) {
    if (!std::isfinite(ul) || !std::isfinite(ur))
        throw std::invalid_argument("riemann: states must be finite");
    InitialData d;
    d.tag_ = "riemann";
    d.is_riemann_ = true;
    d.ul_ = ul;
    d.ur_ = ur;
    d.u0_ = [ul, ur](double x) { return x < 0.0 ? ul : ur; };
    d.bound_ = std::max(std::abs(ul), std::abs(ur));
    return d;
}

InitialData InitialData::sine(double amplitude, double period) {
    if (!(period > 0.0)) throw std::invalid_argument("sine: period must be positive");
    InitialData d;
    d.tag_ = "sine";
    d.u0_ = [amplitude, period](double x) {
        return amplitude * std::sin(2.0 * std::numbers::pi * x / period);
    };
    d.bound_ = std::abs(amplitude);
    return d;
}

InitialData InitialData::custom(std::string id, std::function<double(double)> u0, double bound) {
    InitialData d;
    d.tag_ = std::move(id);
    d.u0_ = std::move(u0);
    d.bound_ = bound;
    return d;
}

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

double godunov_flux(const FluxFunction& a, double sonic, double ul, double ur) {
    if (ul <= ur) return a(std::clamp(sonic, ul, ur));
    return std::max(a(ul), a(ur));
}

// One conservative step of size dt on state u (in place via scratch).
void step(std::vector<double>& u, std::vector<double>& scratch, const FluxFunction& a,
          double sonic, double dt, double dx, Scheme scheme, Boundary bc) {
    const int nx = static_cast<int>(u.size());
    const double lam = dt / dx;
    auto state = [&](int i) -> double {
        if (bc == Boundary::periodic) return u[static_cast<std::size_t>(wrap(i, nx))];
        return u[static_cast<std::size_t>(std::clamp(i, 0, nx - 1))];
    };
    auto iface = [&](int i) {  // numerical flux at interface i-1/2
        const double l = state(i - 1), r = state(i);
        if (scheme == Scheme::godunov) return godunov_flux(a, sonic, l, r);
        return 0.5 * (a(l) + a(r)) - 0.5 / lam * (r - l);
    };
    for (int i = 0; i < nx; ++i)
        scratch[static_cast<std::size_t>(i)] =
            u[static_cast<std::size_t>(i)] - lam * (iface(i + 1) - iface(i));
    u.swap(scratch);
}

double row_mass(const std::vector<double>& u) { return pairwise_sum(u); }

// Cell average of the piecewise-constant profile ul 1_{x<s} + ur 1_{x>s}.
double cut_cell_average(double xl, double xr, double s, double ul, double ur) {
    if (s <= xl) return ur;
    if (s >= xr) return ul;
    const double frac = (s - xl) / (xr - xl);
    return frac * ul + (1.0 - frac) * ur;
}

}  // namespace

SolutionRecord solve_fv(const InitialData& init, const FluxFunction& flux, const Grid2D& grid,
                        Scheme scheme, double cfl, Boundary bc) {
    if (!(cfl > 0.0) || !(cfl < 1.0)) throw std::runtime_error("cfl exceeded");
    const int nx = grid.nx(), nt = grid.nt();
    const double dx = grid.dx(), dt_rec = grid.dt();

    std::vector<double> u(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        if (init.is_riemann()) {
            const double xl = grid.x0() + i * dx, xr = xl + dx;
            u[static_cast<std::size_t>(i)] =
                cut_cell_average(xl, xr, 0.0, init.left(), init.right());
        } else {
            u[static_cast<std::size_t>(i)] = init(grid.xcenter(i));
        }
    }
    const std::vector<double> u0 = u;
    const double mass0 = row_mass(u0);

    double amax = 0.0;
    for (double v : u) amax = std::max(amax, std::abs(flux.deriv(v)));
    const double dt_stable = amax > 0.0 ? cfl * dx / amax : dt_rec;
    const double sonic = flux.argmin(-init.bound() - 1.0, init.bound() + 1.0);

    std::vector<double> rows(grid.size());
    std::vector<double> scratch(static_cast<std::size_t>(nx));
    double max_courant = 0.0, mass_drift = 0.0;

    auto advance = [&](double span) {
        const int m = std::max(1, static_cast<int>(std::ceil(span / dt_stable - 1e-12)));
        const double dt_int = span / m;
        for (int s = 0; s < m; ++s) {
            double cur_amax = 0.0;
            for (double v : u) {
                if (!std::isfinite(v)) throw std::runtime_error("blowup");
                cur_amax = std::max(cur_amax, std::abs(flux.deriv(v)));
            }
            const double courant = cur_amax * dt_int / dx;
            if (courant >= 1.0) throw std::runtime_error("cfl exceeded");
            max_courant = std::max(max_courant, courant);
            step(u, scratch, flux, sonic, dt_int, dx, scheme, bc);
        }
    };

    // First row sits at dt_rec/2; later rows at cell-centered times.
    advance(0.5 * dt_rec);
    for (int n = 0; n < nt; ++n) {
        if (n > 0) advance(dt_rec);
        std::copy(u.begin(), u.end(), rows.begin() + static_cast<std::ptrdiff_t>(n) * nx);
        if (bc == Boundary::periodic)
            mass_drift = std::max(mass_drift, std::abs(row_mass(u) - mass0) * dx);
    }

    SolutionRecord rec{SpaceTimeField(grid, std::move(rows)),
                       flux.id(),
                       scheme == Scheme::godunov ? "godunov" : "lax_friedrichs",
                       cfl,
                       bc == Boundary::periodic ? "periodic" : "outflow",
                       init.tag(),
                       u0,
                       mass_drift,
                       max_courant};
    return rec;
}

SolutionRecord exact_riemann(double ul, double ur, const FluxFunction& flux,
                             const Grid2D& grid) {
    const double lo = std::min(ul, ur), hi = std::max(ul, ur);
    if (lo < hi) {
        // Strict convexity over the state range.
        for (int i = 0; i <= 64; ++i) {
            const double v = lo + (hi - lo) * i / 64.0;
            if (!(flux.second(v) >= 0.0))
                throw std::runtime_error("exact_riemann: flux not convex over state range");
        }
        if (!(flux.deriv(hi) > flux.deriv(lo)))
            throw std::runtime_error("exact_riemann: flux not convex over state range");
    }

    std::vector<double> rows(grid.size());
    const int nx = grid.nx();
    std::vector<double> u0(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        const double xl = grid.x0() + i * grid.dx(), xr = xl + grid.dx();
        u0[static_cast<std::size_t>(i)] = cut_cell_average(xl, xr, 0.0, ul, ur);
    }

    if (ul == ur) {
        std::fill(rows.begin(), rows.end(), ul);
    } else if (ul > ur) {
        const double sigma = (flux(ul) - flux(ur)) / (ul - ur);
        for (int n = 0; n < grid.nt(); ++n) {
            const double s = sigma * grid.tcenter(n);
            for (int i = 0; i < nx; ++i) {
                const double xl = grid.x0() + i * grid.dx(), xr = xl + grid.dx();
                rows[static_cast<std::size_t>(n) * nx + i] = cut_cell_average(xl, xr, s, ul, ur);
            }
        }
    } else {
        for (int n = 0; n < grid.nt(); ++n) {
            const double t = grid.tcenter(n);
            const double sl = flux.deriv(ul) * t, sr = flux.deriv(ur) * t;
            for (int i = 0; i < nx; ++i) {
                const double x = grid.xcenter(i);
                double v;
                if (x <= sl) v = ul;
                else if (x >= sr) v = ur;
                else v = flux.deriv_inverse(x / t, ul, ur);
                rows[static_cast<std::size_t>(n) * nx + i] = v;
            }
        }
    }

    return SolutionRecord{SpaceTimeField(grid, std::move(rows)),
                          flux.id(),
                          "exact_riemann",
                          0.0,
                          "outflow",
                          "riemann",
                          u0,
                          0.0,
                          0.0};
}

SolutionRecord nonentropic_shock(double ul, double ur, const FluxFunction& flux,
                                 const Grid2D& grid) {
    if (!(ul < ur)) throw std::runtime_error("use exact_riemann for entropic data");
    const double sigma = (flux(ur) - flux(ul)) / (ur - ul);
    const int nx = grid.nx();
    std::vector<double> rows(grid.size());
    std::vector<double> u0(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        const double xl = grid.x0() + i * grid.dx(), xr = xl + grid.dx();
        u0[static_cast<std::size_t>(i)] = cut_cell_average(xl, xr, 0.0, ul, ur);
    }
    for (int n = 0; n < grid.nt(); ++n) {
        const double s = sigma * grid.tcenter(n);
        for (int i = 0; i < nx; ++i) {
            const double xl = grid.x0() + i * grid.dx(), xr = xl + grid.dx();
            rows[static_cast<std::size_t>(n) * nx + i] = cut_cell_average(xl, xr, s, ul, ur);
        }
    }
    return SolutionRecord{SpaceTimeField(grid, std::move(rows)),
                          flux.id(),
                          "nonentropic_shock",
                          0.0,
                          "outflow",
                          "riemann",
                          u0,
                          0.0,
                          0.0};
}

double weak_residual(const SolutionRecord& rec, const FluxFunction& flux,
                     const Cutoff& testfn) {
    const Grid2D& g = rec.field.grid();
    const Box2D& sup = testfn.support();
    if (!g.contains(sup)) throw std::runtime_error("support escape");

    double total = grid_integral(g, [&](int n, int i) {
        const double t = g.tcenter(n), x = g.xcenter(i);
        const double u = rec.field(n, i);
        return u * testfn.dchi_dt(t, x) + flux(u) * testfn.dchi_dx(t, x);
    });
    if (sup.ta <= g.t0() + 1e-15) {
        total += pairwise_sum_of(static_cast<std::size_t>(g.nx()), [&](std::size_t i) {
                     return rec.initial_samples[i] * testfn.chi(g.t0(), g.xcenter(static_cast<int>(i)));
                 }) * g.dx();
    }
    return total;
}

OleinikReport oleinik_check(const SolutionRecord& rec, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("oleinik_check: alpha must be positive");
    const Grid2D& g = rec.field.grid();
    double worst = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < g.nt(); ++n) {
        const double bound = 1.0 / (alpha * g.tcenter(n));
        for (int i = 0; i + 1 < g.nx(); ++i) {
            const double slope = (rec.field(n, i + 1) - rec.field(n, i)) / g.dx();
            worst = std::max(worst, slope - bound);
        }
    }
    OleinikReport r;
    r.max_excess = worst;
    r.tolerance = 10.0 * g.dx();
    r.pass = worst <= r.tolerance;
    return r;
}

}  // namespace besovclaw
