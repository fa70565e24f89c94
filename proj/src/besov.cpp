#include "besovclaw/besov.hpp"

#include <cmath>
#include <stdexcept>

#include "besovclaw/summation.hpp"

namespace besovclaw {

int shift_cells(const Grid2D& g, Direction dir, double h) {
    const double spacing = dir == Direction::x ? g.dx() : g.dt();
    const double ratio = h / spacing;
    const long j = std::lround(ratio);
    if (j == 0 || std::abs(ratio - static_cast<double>(j)) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw std::runtime_error("non-commensurate shift");
    return static_cast<int>(j);
}

SpaceTimeField diff(const SpaceTimeField& field, Direction dir, double h) {
    const Grid2D& g = field.grid();
    const int j = shift_cells(g, dir, h);
    std::vector<double> vals(g.size());
    for (int n = 0; n < g.nt(); ++n)
        for (int i = 0; i < g.nx(); ++i) {
            const int ns = dir == Direction::t ? n + j : n;
            const int is = dir == Direction::x ? i + j : i;
            vals[static_cast<std::size_t>(n) * g.nx() + i] = field.extended(ns, is) - field(n, i);
        }
    return SpaceTimeField(g, std::move(vals));
}

IncrementFunctional increment_functional(const SpaceTimeField& field, Direction dir, double h,
                                         double p, const Cutoff& cutoff) {
    if (!(p >= 1.0)) throw std::invalid_argument("increment_functional: p must be >= 1");
    const Grid2D& g = field.grid();
    const int j = shift_cells(g, dir, h);
    const Box2D& sup = cutoff.support();
    if (!g.contains(sup)) throw std::runtime_error("support escape");
    Box2D shifted = sup;
    if (dir == Direction::x) {
        shifted.xa += std::min(0.0, h);
        shifted.xb += std::max(0.0, h);
    } else {
        shifted.ta += std::min(0.0, h);
        shifted.tb += std::max(0.0, h);
    }
    if (!g.contains(shifted)) throw std::runtime_error("support escape");

    // chi is a product profile: hoist the 1D factors.
    std::vector<double> bt(static_cast<std::size_t>(g.nt())), bx(static_cast<std::size_t>(g.nx()));
    for (int n = 0; n < g.nt(); ++n)
        bt[static_cast<std::size_t>(n)] = cutoff.tprofile()(g.tcenter(n));
    for (int i = 0; i < g.nx(); ++i)
        bx[static_cast<std::size_t>(i)] = cutoff.xprofile()(g.xcenter(i));

    const double sum = pairwise_sum_rows(
        static_cast<std::size_t>(g.nt()), static_cast<std::size_t>(g.nx()),
        [&](std::size_t n, std::size_t i) {
            const double chi = bt[n] * bx[i];
            if (chi == 0.0) return 0.0;
            const int nn = static_cast<int>(n), ii = static_cast<int>(i);
            const int ns = dir == Direction::t ? nn + j : nn;
            const int is = dir == Direction::x ? ii + j : ii;
            const double d = field.extended(ns, is) - field(nn, ii);
            return chi * chi * std::pow(std::abs(d), p);
        });

    IncrementFunctional f;
    f.direction = dir;
    f.h = h;
    f.p = p;
    f.value = sum * g.dt() * g.dx();
    return f;
}

BesovReport besov_fit(const SpaceTimeField& field, Direction dir, double p,
                      const Cutoff& cutoff, const std::vector<double>& h_set) {
    const Grid2D& g = field.grid();
    const double spacing = dir == Direction::x ? g.dx() : g.dt();
    std::vector<std::pair<double, double>> pts;
    for (double h : h_set) {
        if (std::abs(h) < 4.0 * spacing * (1.0 - 1e-12)) continue;  // noise floor
        const auto f = increment_functional(field, dir, h, p, cutoff);
        if (f.value > 0.0) pts.emplace_back(std::abs(h), f.value);
    }
    if (pts.size() < 4) throw std::runtime_error("fewer than 4 valid shifts");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [h, v] : pts) {
        const double x = std::log(h), y = std::log(v);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * sxx - sx * sx;

    BesovReport r;
    r.direction = dir;
    r.p = p;
    r.points = std::move(pts);
    r.slope = (n * sxy - sx * sy) / denom;
    r.intercept = (sy - r.slope * sx) / n;
    r.inferred_s = r.slope / p;
    r.membership_consistent = r.slope >= 1.0 - BesovReport::kFitTolerance;
    return r;
}

std::vector<double> dyadic_shifts(double spacing, int min_mult, double hmax) {
    std::vector<double> hs;
    for (double h = min_mult * spacing; h <= hmax * (1.0 + 1e-12); h *= 2.0) hs.push_back(h);
    return hs;
}

}  // namespace besovclaw
