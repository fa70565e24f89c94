#include "besovclaw/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "besovclaw/parallel.hpp"
#include "besovclaw/summation.hpp"

namespace besovclaw {

namespace {

constexpr std::size_t kDenseCellCap = std::size_t{1} << 22;

}  // namespace

SignedMeasure::SignedMeasure(Grid2D grid, std::optional<VelocityGrid> vgrid)
    : grid_(grid), vgrid_(vgrid) {
    bct_ = (grid_.nt() + kBlocksPerAxis - 1) / kBlocksPerAxis;
    bcx_ = (grid_.nx() + kBlocksPerAxis - 1) / kBlocksPerAxis;
    nbt_ = (grid_.nt() + bct_ - 1) / bct_;
    nbx_ = (grid_.nx() + bcx_ - 1) / bcx_;
    const std::size_t nb = static_cast<std::size_t>(nbt_) * nbx_;
    blk_pos_.assign(nb, 0.0);
    blk_neg_.assign(nb, 0.0);
    if (vgrid_) blk_tva_.assign(nb, 0.0);
    cell_net_.assign(grid_.size(), 0.0);
}

double SignedMeasure::block_tcenter(int bn) const {
    const int lo = bn * bct_;
    const int hi = std::min(grid_.nt(), lo + bct_);
    return 0.5 * (grid_.tcenter(lo) + grid_.tcenter(hi - 1));
}

double SignedMeasure::block_xcenter(int bi) const {
    const int lo = bi * bcx_;
    const int hi = std::min(grid_.nx(), lo + bcx_);
    return 0.5 * (grid_.xcenter(lo) + grid_.xcenter(hi - 1));
}

double SignedMeasure::window_block_sum(const Box2D& b, const std::vector<double>& a) const {
    std::vector<double> vals;
    vals.reserve(a.size());
    for (int bn = 0; bn < nbt_; ++bn) {
        const double tc = block_tcenter(bn);
        if (tc < b.ta || tc > b.tb) continue;
        for (int bi = 0; bi < nbx_; ++bi) {
            const double xc = block_xcenter(bi);
            if (xc < b.xa || xc > b.xb) continue;
            vals.push_back(a[bidx(bn, bi)]);
        }
    }
    return pairwise_sum(vals);
}

double SignedMeasure::window_pos(const Box2D& b) const { return window_block_sum(b, blk_pos_); }
double SignedMeasure::window_neg(const Box2D& b) const { return window_block_sum(b, blk_neg_); }

double SignedMeasure::window_tv_aprime(const Box2D& b) const {
    if (!vgrid_) throw std::logic_error("window_tv_aprime: measure has no velocity variable");
    return window_block_sum(b, blk_tva_);
}

double SignedMeasure::window_net(const Box2D& b) const {
    return pairwise_sum_rows(
        static_cast<std::size_t>(grid_.nt()), static_cast<std::size_t>(grid_.nx()),
        [&](std::size_t n, std::size_t i) {
            const int nn = static_cast<int>(n), ii = static_cast<int>(i);
            const double t = grid_.tcenter(nn), x = grid_.xcenter(ii);
            if (t < b.ta || t > b.tb || x < b.xa || x > b.xb) return 0.0;
            return cell_net_[idx(nn, ii)];
        });
}

double SignedMeasure::weighted_total(const std::function<double(double, double)>& w) const {
    return pairwise_sum_rows(static_cast<std::size_t>(grid_.nt()),
                             static_cast<std::size_t>(grid_.nx()),
                             [&](std::size_t n, std::size_t i) {
                                 const int nn = static_cast<int>(n), ii = static_cast<int>(i);
                                 return cell_net_[idx(nn, ii)] *
                                        w(grid_.tcenter(nn), grid_.xcenter(ii));
                             });
}

std::vector<MeasureTriplet> SignedMeasure::sparse_cells(double eps) const {
    double maxmass = 0.0;
    for (const auto& c : cells_) maxmass = std::max(maxmass, std::abs(c.mass));
    std::vector<MeasureTriplet> out;
    for (const auto& c : cells_)
        if (std::abs(c.mass) >= eps * maxmass && c.mass != 0.0) out.push_back(c);
    return out;
}

SignedMeasure extract_measure(const KineticDensity& kd, const FluxFunction& flux) {
    const SpaceTimeField& u = kd.u();
    const Grid2D& g = u.grid();
    const VelocityGrid& vg = kd.vgrid();
    const double U = u.supnorm();
    const int nv = vg.nv();
    const double dt = g.dt(), dx = g.dx(), dv = vg.dv();
    const double cellvol = dt * dx * dv;

    SignedMeasure m(g, vg);
    m.vclip_ = U + dv;
    m.closure_tol_ = 10.0 * (dx + dt);

    const bool keep_cells = g.size() * static_cast<std::size_t>(nv) <= kDenseCellCap;
    std::vector<std::vector<MeasureTriplet>> brow_cells(
        keep_cells ? static_cast<std::size_t>(m.nbt_) : 0);

    std::vector<double> aprime_abs(static_cast<std::size_t>(nv));
    std::vector<int> clip(static_cast<std::size_t>(nv));
    for (int k = 0; k < nv; ++k) {
        aprime_abs[static_cast<std::size_t>(k)] = std::abs(flux.deriv(vg.vcenter(k)));
        clip[static_cast<std::size_t>(k)] = std::abs(vg.vcenter(k)) <= m.vclip_ ? 1 : 0;
    }

    std::vector<double> closure_brow(static_cast<std::size_t>(m.nbt_), 0.0);
    std::vector<double> closure_sup_brow(static_cast<std::size_t>(m.nbt_), 0.0);

    // One task per block-row: every (block, k) accumulator is owned by a
    // single task, so the result is independent of the worker count.
    parallel_for_blocked(static_cast<std::size_t>(m.nbt_), 1, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t brow = b0; brow < b1; ++brow) {
            const int n_lo = static_cast<int>(brow) * m.bct_;
            const int n_hi = std::min(g.nt() - 1, n_lo + m.bct_);
            // Signed block sums per (x-block, velocity cell).
            std::vector<double> acc(static_cast<std::size_t>(m.nbx_) * nv, 0.0);
            std::vector<double> closes;
            double csup = 0.0;
            for (int n = n_lo; n < n_hi; ++n) {
                for (int i = 0; i + 1 < g.nx(); ++i) {
                    const double u00 = u(n, i), u10 = u(n + 1, i), u01 = u(n, i + 1);
                    const std::size_t acc_base =
                        static_cast<std::size_t>(m.block_of_col(i)) * nv;
                    // Cumulative v-summation of the forward-difference
                    // residual; telescopes into edge evaluations of the
                    // closed-form indicator masses.
                    double M = 0.0;
                    double net = 0.0;
                    for (int k = 0; k < nv; ++k) {
                        const double e = vg.vedge(k);
                        M = (KineticDensity::indicator_mass_below(u10, e) -
                             KineticDensity::indicator_mass_below(u00, e)) /
                                dt +
                            (KineticDensity::flux_weighted_mass_below(flux, u01, e) -
                             KineticDensity::flux_weighted_mass_below(flux, u00, e)) /
                                dx;
                        if (!clip[static_cast<std::size_t>(k)]) continue;
                        const double mass = M * cellvol;
                        acc[acc_base + static_cast<std::size_t>(k)] += mass;
                        net += mass;
                        if (keep_cells && mass != 0.0)
                            brow_cells[brow].push_back({n, i, k, mass});
                    }
                    m.cell_net_[m.idx(n, i)] = net;
                    closes.push_back(std::abs(M) * dt * dx);
                    csup = std::max(csup, std::abs(M));
                }
            }
            for (int bi = 0; bi < m.nbx_; ++bi) {
                double pos = 0.0, neg = 0.0, tva = 0.0;
                for (int k = 0; k < nv; ++k) {
                    const double s = acc[static_cast<std::size_t>(bi) * nv +
                                         static_cast<std::size_t>(k)];
                    if (s >= 0.0)
                        pos += s;
                    else
                        neg -= s;
                    tva += aprime_abs[static_cast<std::size_t>(k)] * std::abs(s);
                }
                m.blk_pos_[m.bidx(static_cast<int>(brow), bi)] = pos;
                m.blk_neg_[m.bidx(static_cast<int>(brow), bi)] = neg;
                m.blk_tva_[m.bidx(static_cast<int>(brow), bi)] = tva;
            }
            closure_brow[brow] = pairwise_sum(closes);
            closure_sup_brow[brow] = csup;
        }
    });

    m.closure_l1_ = pairwise_sum(closure_brow);
    for (double s : closure_sup_brow) m.closure_sup_ = std::max(m.closure_sup_, s);
    if (keep_cells)
        for (auto& rc : brow_cells) m.cells_.insert(m.cells_.end(), rc.begin(), rc.end());
    return m;
}

SignedMeasure entropy_production(const SolutionRecord& rec, const EntropyPair& pair,
                                 const Cutoff& testfn) {
    const Grid2D& g = rec.field.grid();
    if (!g.contains(testfn.support())) throw std::runtime_error("support escape");
    if (rec.field.supnorm() > pair.radius() * (1.0 + 1e-12))
        throw std::invalid_argument("entropy_production: solution exceeds entropy range");

    SignedMeasure mu(g, std::nullopt);
    const double dt = g.dt(), dx = g.dx();

    // eta(u) and q(u) sampled once; q evaluation dominates.
    std::vector<double> eta_u(g.size()), q_u(g.size());
    parallel_for_blocked(static_cast<std::size_t>(g.nt()), 8, [&](std::size_t n0, std::size_t n1) {
        for (std::size_t n = n0; n < n1; ++n)
            for (int i = 0; i < g.nx(); ++i) {
                const double v = rec.field(static_cast<int>(n), i);
                eta_u[n * g.nx() + static_cast<std::size_t>(i)] = pair.eta(v);
                q_u[n * g.nx() + static_cast<std::size_t>(i)] = pair.q(v);
            }
    });

    const bool keep_cells = g.size() <= kDenseCellCap;
    std::vector<double> blk(static_cast<std::size_t>(mu.nbt_) * mu.nbx_, 0.0);
    for (int n = 0; n + 1 < g.nt(); ++n) {
        for (int i = 0; i + 1 < g.nx(); ++i) {
            const std::size_t id = mu.idx(n, i);
            const double residual =
                (eta_u[id + static_cast<std::size_t>(g.nx())] - eta_u[id]) / dt +
                (q_u[id + 1] - q_u[id]) / dx;
            const double mass = residual * dt * dx;
            mu.cell_net_[id] = mass;
            blk[mu.bidx(mu.block_of_row(n), mu.block_of_col(i))] += mass;
            if (keep_cells && mass != 0.0) mu.cells_.push_back({n, i, -1, mass});
        }
    }
    for (std::size_t b = 0; b < blk.size(); ++b) {
        if (blk[b] >= 0.0)
            mu.blk_pos_[b] = blk[b];
        else
            mu.blk_neg_[b] = -blk[b];
    }
    return mu;
}

EntropyCrossCheck entropy_production_crosscheck(const SolutionRecord& rec,
                                                const EntropyPair& pair,
                                                const FluxFunction& flux, const Cutoff& chi,
                                                const VelocityGrid& vgrid) {
    const Grid2D& g = rec.field.grid();
    if (!g.contains(chi.support())) throw std::runtime_error("support escape");

    EntropyCrossCheck cc;
    cc.direct = -grid_integral(g, [&](int n, int i) {
        const double t = g.tcenter(n), x = g.xcenter(i);
        const double u = rec.field(n, i);
        return pair.eta(u) * chi.dchi_dt(t, x) + pair.q(u) * chi.dchi_dx(t, x);
    });

    // -∫ eta'' dm paired with chi, streamed through the same telescoped
    // cumulation as extract_measure. eta'' by centered differences of eta'.
    const KineticDensity kd = lift(rec, vgrid);
    const VelocityGrid& vg = kd.vgrid();
    const int nv = vg.nv();
    const double dt = g.dt(), dx = g.dx(), dv = vg.dv();
    const double delta_v = 1e-6 * std::max(1.0, vg.vmax() - vg.vmin());
    std::vector<double> eta2(static_cast<std::size_t>(nv));
    for (int k = 0; k < nv; ++k) {
        const double v = vg.vcenter(k);
        eta2[static_cast<std::size_t>(k)] =
            (pair.deta(v + delta_v) - pair.deta(v - delta_v)) / (2.0 * delta_v);
    }
    const double total = pairwise_sum_rows(
        static_cast<std::size_t>(g.nt()) - 1, static_cast<std::size_t>(g.nx()) - 1,
        [&](std::size_t n, std::size_t i) {
            const int nn = static_cast<int>(n), ii = static_cast<int>(i);
            const double w = chi.chi(g.tcenter(nn), g.xcenter(ii));
            if (w == 0.0) return 0.0;
            const double u00 = rec.field(nn, ii), u10 = rec.field(nn + 1, ii),
                         u01 = rec.field(nn, ii + 1);
            double M = 0.0, acc = 0.0;
            for (int k = 0; k < nv; ++k) {
                const double e = vg.vedge(k);
                M = (KineticDensity::indicator_mass_below(u10, e) -
                     KineticDensity::indicator_mass_below(u00, e)) /
                        dt +
                    (KineticDensity::flux_weighted_mass_below(flux, u01, e) -
                     KineticDensity::flux_weighted_mass_below(flux, u00, e)) /
                        dx;
                acc += eta2[static_cast<std::size_t>(k)] * M * dv;
            }
            return -w * acc;
        });
    cc.via_measure = total * dt * dx;
    return cc;
}

}  // namespace besovclaw
