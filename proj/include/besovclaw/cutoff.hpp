#pragma once

#include "besovclaw/grid.hpp"

namespace besovclaw {

// One-dimensional C^1 plateau profile built from the standard bump
// exp(1 - 1/(1 - s^2)): identically 1 on the central plateau_fraction of
// [lo, hi], smooth exponential flanks, zero outside [lo, hi].
class PlateauBump {
  public:
    PlateauBump(double lo, double hi, double plateau_fraction);

    double operator()(double y) const;
    double deriv(double y) const;

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double plateau_fraction() const { return pf_; }

    double l1() const { return l1_; }            // ∫ b
    double l1_sq() const { return l1_sq_; }      // ∫ b^2
    double l1_deriv() const { return l1_der_; }  // ∫ |b'|  (= 2 analytically)

  private:
    double lo_, hi_, pf_;
    double center_, plateau_half_, half_;
    double l1_, l1_sq_, l1_der_;
};

// Smooth compactly supported cutoff chi(t,x) = b_t(t) * b_x(x) with exact
// partial derivatives and cached norms.
class Cutoff {
  public:
    static Cutoff make_bump(const Box2D& txbox, double plateau_fraction);

    double chi(double t, double x) const { return bt_(t) * bx_(x); }
    double dchi_dt(double t, double x) const { return bt_.deriv(t) * bx_(x); }
    double dchi_dx(double t, double x) const { return bt_(t) * bx_.deriv(x); }

    const Box2D& support() const { return box_; }
    const PlateauBump& tprofile() const { return bt_; }
    const PlateauBump& xprofile() const { return bx_; }

    double sup_norm() const { return 1.0; }
    double chi2_l1() const { return bt_.l1_sq() * bx_.l1_sq(); }      // ‖chi^2‖_{L1}
    double dchi_dt_l1() const { return bt_.l1_deriv() * bx_.l1(); }   // ‖∂_t chi‖_{L1}
    double dchi_dx_l1() const { return bt_.l1() * bx_.l1_deriv(); }   // ‖∂_x chi‖_{L1}

  private:
    Cutoff(Box2D box, PlateauBump bt, PlateauBump bx)
        : box_(box), bt_(bt), bx_(bx) {}

    Box2D box_;
    PlateauBump bt_, bx_;
};

// Spec name for Cutoff::make_bump.
inline Cutoff make_bump_cutoff(const Box2D& txbox, double plateau_fraction) {
    return Cutoff::make_bump(txbox, plateau_fraction);
}

}  // namespace besovclaw
