#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "besovclaw/field.hpp"
#include "besovclaw/flux.hpp"
#include "besovclaw/solver.hpp"
#include "besovclaw/test_weight.hpp"

namespace besovclaw {

// Kinetic density of a solution field: f(t,x,v) = +1_{[0,u]}(v) for u >= 0,
// -1_{[u,0]}(v) for u < 0, stored implicitly through the generating u with
// exact per-cell averages (the cell containing u gets the fractional value,
// which keeps ∫ f dv = u exact at grid level).
class KineticDensity {
  public:
    KineticDensity(std::shared_ptr<const SpaceTimeField> u, VelocityGrid vgrid, int gamma = 1);

    double value(int n, int i, int k) const {
        return cell_average((*u_)(n, i), k);
    }
    // Cell average of the signed indicator of state u over velocity cell k.
    double cell_average(double u, int k) const;
    // ∫_{-inf}^{s} M_u(v) dv and its a'-weighted version, in closed form.
    static double indicator_mass_below(double u, double s);
    static double flux_weighted_mass_below(const FluxFunction& flux, double u, double s);

    const SpaceTimeField& u() const { return *u_; }
    std::shared_ptr<const SpaceTimeField> u_ptr() const { return u_; }
    const VelocityGrid& vgrid() const { return vgrid_; }
    int gamma() const { return gamma_; }
    double fsup() const;  // ess-sup |f|

  private:
    std::shared_ptr<const SpaceTimeField> u_;
    VelocityGrid vgrid_;
    int gamma_;
};

// Errors with "velocity support exceeded" when vgrid does not span
// [-U - dv, U + dv].
KineticDensity lift(const SolutionRecord& rec, const VelocityGrid& vgrid);

// Dense real-valued (t,x,v) field used as a (Hyp-f) fixture.
class SampledDensity {
  public:
    SampledDensity(Grid2D grid, VelocityGrid vgrid, std::vector<double> values);

    static SampledDensity from_function(const Grid2D& g, const VelocityGrid& vg,
                                        const std::function<double(double, double, double)>& f);
    // f(t,x,v) = W(rho(t,x) - v) with W monotone and bounded.
    static SampledDensity monotone_profile(const SpaceTimeField& rho,
                                           const std::function<double(double)>& W,
                                           const VelocityGrid& vg);
    static SampledDensity random_signs(const Grid2D& g, const VelocityGrid& vg,
                                       std::uint64_t seed);

    double value(int n, int i, int k) const {
        return values_[(static_cast<std::size_t>(n) * grid_.nx() + i) * vgrid_.nv() + k];
    }
    const Grid2D& grid() const { return grid_; }
    const VelocityGrid& vgrid() const { return vgrid_; }

  private:
    Grid2D grid_;
    VelocityGrid vgrid_;
    std::vector<double> values_;
};

// Spec name for SampledDensity::monotone_profile.
SampledDensity monotone_profile_density(const SpaceTimeField& rho,
                                        const std::function<double(double)>& W,
                                        const VelocityGrid& vg);

struct HypFReport {
    double worst = 0.0;  // min over samples of the paired product
    bool pass = false;
    long checked = 0;
};

// Verifies (f(t+s,x+y,v)-f(t,x,v)) (f(t+s,x+y,w)-f(t,x,w)) >= 0 over all
// interior (t,x), the given index shifts, and all velocity cell pairs.
HypFReport check_hyp_f(const std::function<double(int, int, int)>& f, int nt, int nx, int nv,
                       const std::vector<std::pair<int, int>>& shifts);
HypFReport check_hyp_f(const KineticDensity& kd, const std::vector<std::pair<int, int>>& shifts);
HypFReport check_hyp_f(const SampledDensity& sd, const std::vector<std::pair<int, int>>& shifts);

// Per-(t,x) velocity average ∫ f psi dv.
SpaceTimeField velocity_average(const KineticDensity& kd, const TestWeight& psi);
SpaceTimeField velocity_average(const SampledDensity& sd, const TestWeight& psi);

// Delta(u, ubar) of the interaction lower bound: double quadrature of
// 1_{R+}(v-w)(a'(v)-a'(w)) (M_u - M_ubar)(v)(M_u - M_ubar)(w) over the
// ordered pairs v > w.
double delta(double u, double ubar, const FluxFunction& flux, const VelocityGrid& vgrid);
// Closed form |u - ubar|^3 / 6 for the quadratic flux.
double closed_form_delta_burgers(double u, double ubar);

}  // namespace besovclaw
