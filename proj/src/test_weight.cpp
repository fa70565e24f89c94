#include "besovclaw/test_weight.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "besovclaw/cutoff.hpp"
#include "besovclaw/quadrature.hpp"

namespace besovclaw {

TestWeight TestWeight::plateau(double V, double plateau_fraction, const FluxFunction* flux) {
    if (!(V > 0.0)) throw std::invalid_argument("TestWeight: V must be positive");
    auto bump = std::make_shared<PlateauBump>(-V, V, plateau_fraction);
    TestWeight w;
    w.id_ = "plateau";
    w.V_ = V;
    w.psi_ = [bump](double v) { return (*bump)(v); };
    w.dpsi_ = [bump](double v) { return bump->deriv(v); };
    w.compute_norms(flux);
    return w;
}

TestWeight TestWeight::custom(std::string id, double V, std::function<double(double)> psi,
                              std::function<double(double)> dpsi, const FluxFunction* flux) {
    if (!(V > 0.0)) throw std::invalid_argument("TestWeight: V must be positive");
    TestWeight w;
    w.id_ = std::move(id);
    w.V_ = V;
    w.psi_ = std::move(psi);
    w.dpsi_ = std::move(dpsi);
    w.compute_norms(flux);
    return w;
}

void TestWeight::compute_norms(const FluxFunction* flux) {
    const double V = V_;
    const double tol = 1e-13 * 2.0 * V;
    l1_ = adaptive_simpson([this](double v) { return std::abs(psi_(v)); }, -V, V, tol);
    v_l1_ = adaptive_simpson([this](double v) { return std::abs(v * psi_(v)); }, -V, V, tol);

    // Sup norms by dense scan; the weights are smooth so a fine uniform scan
    // resolves them far below the norm-consistency tolerance.
    const int n = 200000;
    sup_ = vpsi_sup_ = dpsi_sup_ = dvpsi_sup_ = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double v = -V + 2.0 * V * i / n;
        const double p = psi_(v), dp = dpsi_(v);
        sup_ = std::max(sup_, std::abs(p));
        vpsi_sup_ = std::max(vpsi_sup_, std::abs(v * p));
        dpsi_sup_ = std::max(dpsi_sup_, std::abs(dp));
        dvpsi_sup_ = std::max(dvpsi_sup_, std::abs(p + v * dp));
    }

    if (flux != nullptr) {
        aprime_l1_ = adaptive_simpson(
            [this, flux](double v) { return std::abs(flux->deriv(v) * psi_(v)); }, -V, V, tol);
        v_aprime_l1_ = adaptive_simpson(
            [this, flux](double v) { return std::abs(v * flux->deriv(v) * psi_(v)); }, -V, V,
            tol);
    }
}

}  // namespace besovclaw
