#include "besovclaw/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "besovclaw/parallel.hpp"
#include "besovclaw/summation.hpp"

namespace besovclaw {

KineticDensity::KineticDensity(std::shared_ptr<const SpaceTimeField> u, VelocityGrid vgrid,
                               int gamma)
    : u_(std::move(u)), vgrid_(vgrid), gamma_(gamma) {
    if (gamma_ != 0 && gamma_ != 1)
        throw std::invalid_argument("KineticDensity: gamma must be 0 or 1");
}

double KineticDensity::indicator_mass_below(double u, double s) {
    if (u >= 0.0) return std::clamp(s, 0.0, u);
    return u - std::clamp(s, u, 0.0);
}

double KineticDensity::flux_weighted_mass_below(const FluxFunction& flux, double u, double s) {
    if (u >= 0.0) return flux(std::clamp(s, 0.0, u)) - flux(0.0);
    return flux(u) - flux(std::clamp(s, u, 0.0));
}

double KineticDensity::cell_average(double u, int k) const {
    const double lo = vgrid_.vmin() + k * vgrid_.dv();
    const double hi = lo + vgrid_.dv();
    return (indicator_mass_below(u, hi) - indicator_mass_below(u, lo)) / vgrid_.dv();
}

double KineticDensity::fsup() const {
    // |f| <= 1, equality as soon as some |u| covers a full cell.
    const double U = u_->supnorm();
    if (U <= 0.0) return 0.0;
    return std::min(1.0, U / vgrid_.dv());
}

KineticDensity lift(const SolutionRecord& rec, const VelocityGrid& vgrid) {
    const double U = rec.field.supnorm();
    if (vgrid.vmin() > -U - vgrid.dv() || vgrid.vmax() < U + vgrid.dv())
        throw std::runtime_error("velocity support exceeded");
    return KineticDensity(std::make_shared<SpaceTimeField>(rec.field), vgrid, 1);
}

SampledDensity::SampledDensity(Grid2D grid, VelocityGrid vgrid, std::vector<double> values)
    : grid_(grid), vgrid_(vgrid), values_(std::move(values)) {
    if (values_.size() != grid_.size() * static_cast<std::size_t>(vgrid_.nv()))
        throw std::invalid_argument("SampledDensity: value count mismatch");
}

SampledDensity SampledDensity::from_function(
    const Grid2D& g, const VelocityGrid& vg,
    const std::function<double(double, double, double)>& f) {
    std::vector<double> vals(g.size() * static_cast<std::size_t>(vg.nv()));
    std::size_t idx = 0;
    for (int n = 0; n < g.nt(); ++n)
        for (int i = 0; i < g.nx(); ++i)
            for (int k = 0; k < vg.nv(); ++k)
                vals[idx++] = f(g.tcenter(n), g.xcenter(i), vg.vcenter(k));
    return SampledDensity(g, vg, std::move(vals));
}

SampledDensity SampledDensity::monotone_profile(const SpaceTimeField& rho,
                                                const std::function<double(double)>& W,
                                                const VelocityGrid& vg) {
    const Grid2D& g = rho.grid();
    std::vector<double> vals(g.size() * static_cast<std::size_t>(vg.nv()));
    std::size_t idx = 0;
    for (int n = 0; n < g.nt(); ++n)
        for (int i = 0; i < g.nx(); ++i)
            for (int k = 0; k < vg.nv(); ++k) vals[idx++] = W(rho(n, i) - vg.vcenter(k));
    return SampledDensity(g, vg, std::move(vals));
}

SampledDensity SampledDensity::random_signs(const Grid2D& g, const VelocityGrid& vg,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> vals(g.size() * static_cast<std::size_t>(vg.nv()));
    for (auto& v : vals) v = (rng() & 1u) ? 1.0 : -1.0;
    return SampledDensity(g, vg, std::move(vals));
}

SampledDensity monotone_profile_density(const SpaceTimeField& rho,
                                        const std::function<double(double)>& W,
                                        const VelocityGrid& vg) {
    return SampledDensity::monotone_profile(rho, W, vg);
}

HypFReport check_hyp_f(const std::function<double(int, int, int)>& f, int nt, int nx, int nv,
                       const std::vector<std::pair<int, int>>& shifts) {
    HypFReport rep;
    rep.worst = std::numeric_limits<double>::infinity();
    std::vector<double> d(static_cast<std::size_t>(nv));
    for (const auto& [ds, dy] : shifts) {
        if (std::abs(ds) >= nt || std::abs(dy) >= nx)
            throw std::invalid_argument("check_hyp_f: shift outside grid");
        for (int n = std::max(0, -ds); n < std::min(nt, nt - ds); ++n) {
            for (int i = std::max(0, -dy); i < std::min(nx, nx - dy); ++i) {
                for (int k = 0; k < nv; ++k)
                    d[static_cast<std::size_t>(k)] = f(n + ds, i + dy, k) - f(n, i, k);
                // The pairwise product is nonnegative for all (v, w) iff the
                // increments do not change sign.
                double dmin = d[0], dmax = d[0];
                for (int k = 1; k < nv; ++k) {
                    dmin = std::min(dmin, d[static_cast<std::size_t>(k)]);
                    dmax = std::max(dmax, d[static_cast<std::size_t>(k)]);
                }
                const double worst_product = (dmin < 0.0 && dmax > 0.0) ? dmin * dmax
                                             : (std::min(std::abs(dmin), std::abs(dmax)) *
                                                std::min(std::abs(dmin), std::abs(dmax)));
                rep.worst = std::min(rep.worst, worst_product);
                rep.checked += static_cast<long>(nv) * nv;
            }
        }
    }
    if (!std::isfinite(rep.worst)) rep.worst = 0.0;
    rep.pass = rep.worst >= 0.0;
    return rep;
}

HypFReport check_hyp_f(const KineticDensity& kd, const std::vector<std::pair<int, int>>& shifts) {
    const auto& g = kd.u().grid();
    return check_hyp_f([&kd](int n, int i, int k) { return kd.value(n, i, k); }, g.nt(), g.nx(),
                       kd.vgrid().nv(), shifts);
}

HypFReport check_hyp_f(const SampledDensity& sd, const std::vector<std::pair<int, int>>& shifts) {
    return check_hyp_f([&sd](int n, int i, int k) { return sd.value(n, i, k); },
                       sd.grid().nt(), sd.grid().nx(), sd.vgrid().nv(), shifts);
}

namespace {

template <typename Density>
SpaceTimeField velocity_average_impl(const Density& den, const Grid2D& g,
                                     const VelocityGrid& vg, const TestWeight& psi) {
    if (-psi.radius() < vg.vmin() - 1e-12 || psi.radius() > vg.vmax() + 1e-12)
        throw std::runtime_error("velocity support exceeded");
    const int nv = vg.nv();
    std::vector<double> w(static_cast<std::size_t>(nv));
    for (int k = 0; k < nv; ++k) w[static_cast<std::size_t>(k)] = psi(vg.vcenter(k)) * vg.dv();
    std::vector<double> vals(g.size());
    parallel_for_blocked(static_cast<std::size_t>(g.nt()), 8, [&](std::size_t n0, std::size_t n1) {
        std::vector<double> buf(static_cast<std::size_t>(nv));
        for (std::size_t n = n0; n < n1; ++n) {
            for (int i = 0; i < g.nx(); ++i) {
                for (int k = 0; k < nv; ++k)
                    buf[static_cast<std::size_t>(k)] =
                        den.value(static_cast<int>(n), i, k) * w[static_cast<std::size_t>(k)];
                vals[n * static_cast<std::size_t>(g.nx()) + static_cast<std::size_t>(i)] =
                    pairwise_sum(buf);
            }
        }
    });
    return SpaceTimeField(g, std::move(vals));
}

}  // namespace

SpaceTimeField velocity_average(const KineticDensity& kd, const TestWeight& psi) {
    return velocity_average_impl(kd, kd.u().grid(), kd.vgrid(), psi);
}

SpaceTimeField velocity_average(const SampledDensity& sd, const TestWeight& psi) {
    return velocity_average_impl(sd, sd.grid(), sd.vgrid(), psi);
}

double delta(double u, double ubar, const FluxFunction& flux, const VelocityGrid& vgrid) {
    const double lo = std::min(u, ubar), hi = std::max(u, ubar);
    if (lo < vgrid.vmin() - 1e-12 || hi > vgrid.vmax() + 1e-12)
        throw std::invalid_argument("delta: states outside velocity grid span");
    if (hi - lo <= 0.0) return 0.0;

    // (M_u - M_ubar)(v)(M_u - M_ubar)(w) = 1 on (lo,hi)^2, so Delta reduces
    // to the ordered-pair integral of a'(v) - a'(w) over lo < w < v < hi.
    // Composite 5-point Gauss-Legendre in w, exact inner antiderivative
    // replaced by a nested composite rule to keep the double quadrature
    // literal.
    constexpr int kOuter = 48;
    constexpr int kInnerPanels = 8;
    const double hw = (hi - lo) / kOuter;
    std::vector<double> outer(kOuter * 5);
    // 5-point GL nodes/weights on [-1,1].
    static const double gx[5] = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                                 0.5384693101056830910, 0.9061798459386639928};
    static const double gw[5] = {0.2369268850561890875, 0.4786286704993664680,
                                 0.5688888888888888889, 0.4786286704993664680,
                                 0.2369268850561890875};
    for (int p = 0; p < kOuter; ++p) {
        const double wl = lo + p * hw;
        const double c = wl + 0.5 * hw, r = 0.5 * hw;
        for (int qy = 0; qy < 5; ++qy) {
            const double w = c + r * gx[qy];
            const double daw = flux.deriv(w);
            // inner: ∫_w^hi (a'(v) - a'(w)) dv
            const double hv = (hi - w) / kInnerPanels;
            double inner = 0.0;
            for (int pi = 0; pi < kInnerPanels; ++pi) {
                const double vl = w + pi * hv;
                const double ci = vl + 0.5 * hv, ri = 0.5 * hv;
                for (int qi = 0; qi < 5; ++qi)
                    inner += gw[qi] * (flux.deriv(ci + ri * gx[qi]) - daw) * ri;
            }
            outer[static_cast<std::size_t>(p) * 5 + qy] = gw[qy] * inner * r;
        }
    }
    return pairwise_sum(outer);
}

double closed_form_delta_burgers(double u, double ubar) {
    const double d = std::abs(u - ubar);
    return d * d * d / 6.0;
}

}  // namespace besovclaw
