#include "besovclaw/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "besovclaw/quadrature.hpp"

namespace besovclaw {

namespace {

// Flank shape on s in [0, 1): 1 at s = 0, vanishing to all orders at s = 1.
double flank(double s) {
    if (s <= 0.0) return 1.0;
    if (s >= 1.0 - 1e-14) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double flank_deriv(double s) {
    if (s <= 0.0 || s >= 1.0 - 1e-14) return 0.0;
    const double d = 1.0 - s * s;
    return flank(s) * (-2.0 * s / (d * d));
}

}  // namespace

PlateauBump::PlateauBump(double lo, double hi, double plateau_fraction)
    : lo_(lo), hi_(hi), pf_(plateau_fraction) {
    if (!(hi > lo)) throw std::invalid_argument("empty support");
    if (!(plateau_fraction > 0.0) || !(plateau_fraction < 1.0))
        throw std::invalid_argument("plateau_fraction must be in (0,1)");
    center_ = 0.5 * (lo + hi);
    half_ = 0.5 * (hi - lo);
    plateau_half_ = plateau_fraction * half_;

    // Plateau contributes exactly; the flanks are integrated separately so
    // the adaptive rule never probes only zeros of the symmetric profile.
    auto self = [this](double y) { return (*this)(y); };
    auto self_sq = [this](double y) { double v = (*this)(y); return v * v; };
    auto self_abs_der = [this](double y) { return std::abs(deriv(y)); };
    const double fa = center_ + plateau_half_, fb = center_ + half_;  // right flank
    const double tol = 1e-14 * (hi - lo);
    l1_ = 2.0 * plateau_half_ + 2.0 * adaptive_simpson(self, fa, fb, tol);
    l1_sq_ = 2.0 * plateau_half_ + 2.0 * adaptive_simpson(self_sq, fa, fb, tol);
    l1_der_ = 2.0 * adaptive_simpson(self_abs_der, fa, fb, tol);
}

double PlateauBump::operator()(double y) const {
    const double r = std::abs(y - center_);
    if (r >= half_) return 0.0;
    if (r <= plateau_half_) return 1.0;
    return flank((r - plateau_half_) / (half_ - plateau_half_));
}

double PlateauBump::deriv(double y) const {
    const double r = std::abs(y - center_);
    if (r >= half_ || r <= plateau_half_) return 0.0;
    const double s = (r - plateau_half_) / (half_ - plateau_half_);
    const double sign = (y > center_) ? 1.0 : -1.0;
    return sign * flank_deriv(s) / (half_ - plateau_half_);
}

Cutoff Cutoff::make_bump(const Box2D& txbox, double plateau_fraction) {
    if (!txbox.nondegenerate()) throw std::invalid_argument("empty support");
    return Cutoff(txbox, PlateauBump(txbox.ta, txbox.tb, plateau_fraction),
                  PlateauBump(txbox.xa, txbox.xb, plateau_fraction));
}

}  // namespace besovclaw
