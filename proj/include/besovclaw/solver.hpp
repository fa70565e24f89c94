#pragma once

#include <functional>
#include <string>
#include <vector>

#include "besovclaw/cutoff.hpp"
#include "besovclaw/field.hpp"
#include "besovclaw/flux.hpp"

namespace besovclaw {

class InitialData {
  public:
    static InitialData riemann(double ul, double ur);
    static InitialData sine(double amplitude, double period);
    static InitialData custom(std::string id, std::function<double(double)> u0, double bound);

    double operator()(double x) const { return u0_(x); }
    const std::string& tag() const { return tag_; }
    double bound() const { return bound_; }  // sup-norm bound
    bool is_riemann() const { return is_riemann_; }
    double left() const { return ul_; }
    double right() const { return ur_; }

  private:
    InitialData() = default;
    std::string tag_;
    std::function<double(double)> u0_;
    double bound_ = 0.0;
    bool is_riemann_ = false;
    double ul_ = 0.0, ur_ = 0.0;
};

enum class Scheme { lax_friedrichs, godunov };
enum class Boundary { periodic, outflow };

struct SolutionRecord {
    SpaceTimeField field;
    std::string flux_id;
    std::string scheme;  // lax_friedrichs | godunov | exact_riemann | nonentropic_shock
    double cfl = 0.0;
    std::string boundary;
    std::string init_tag;
    std::vector<double> initial_samples;  // u^in at cell centers (t = 0)
    double mass_drift = 0.0;              // max |Σu dx - Σu^in dx| over recorded rows
    double max_courant = 0.0;

    double supnorm() const { return field.supnorm(); }
};

// Conservative finite-volume solve. Rows are recorded at the grid's
// cell-centered times; internal steps subdivide each recording interval so
// the Courant number never exceeds cfl.
// Errors: "cfl exceeded" for cfl outside (0,1), "blowup" on NaN.
SolutionRecord solve_fv(const InitialData& init, const FluxFunction& flux, const Grid2D& grid,
                        Scheme scheme, double cfl, Boundary bc);

// Exact entropy solution of the Riemann problem for a convex flux
// (shock if ul > ur, rarefaction fan if ul < ur), sampled on the grid with
// volume-weighted averages in discontinuity-cut cells.
SolutionRecord exact_riemann(double ul, double ur, const FluxFunction& flux, const Grid2D& grid);

// Entropy-violating weak solution: requires ul < ur; jumps across the
// Rankine-Hugoniot line x = sigma t.
SolutionRecord nonentropic_shock(double ul, double ur, const FluxFunction& flux,
                                 const Grid2D& grid);

// ∬ (u ∂_t chi + a(u) ∂_x chi) dx dt, plus ∫ u^in chi(0,·) dx when the
// cutoff touches t = 0. Magnitude is the weak-form defect.
double weak_residual(const SolutionRecord& rec, const FluxFunction& flux, const Cutoff& testfn);

struct OleinikReport {
    double max_excess = 0.0;  // max over cells of forward slope - 1/(alpha t)
    double tolerance = 0.0;   // 10 dx band
    bool pass = false;
};
OleinikReport oleinik_check(const SolutionRecord& rec, double alpha);

}  // namespace besovclaw
