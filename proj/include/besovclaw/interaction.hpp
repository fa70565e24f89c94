#pragma once

#include <string>

#include "besovclaw/field.hpp"

namespace besovclaw {

// Six fields of the 2x2 balance system ∂_t A + ∂_x B = C, ∂_t D + ∂_x E = F,
// compactly supported in the interior and extended by zero.
struct BalanceFields {
    SpaceTimeField A, B, C, D, E, F;

    // L1 norms of the discrete residuals D_t A/dt + D_x B/dx - C (resp. the
    // second row); recorded so identity residuals can be read relative to
    // how well the system itself holds on the grid.
    double system_residual_1() const;
    double system_residual_2() const;

    // Throws "support escape" when any field is nonzero within `margin`
    // cells of the boundary.
    void require_interior_support(int margin = 4) const;
};

struct IdentityReport {
    std::string identity;  // "space" | "time"
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;  // |lhs - rhs|
    double dt = 0.0, dx = 0.0;
};

// Interaction identity in the space form:
//   ∬ (AE - DB) dz dt = -∬ C(t,x) (∫_x^∞ D dy) dx dt - ∬ F(t,y) (∫_{-∞}^y A dx) dy dt
IdentityReport check_identity_space(const BalanceFields& bf);

// Time form (t and x exchanged, with the sign structure of that identity):
//   ∬ (AE - DB) dz dt = ∬ C(s,z) (∫_s^∞ E dt) dz ds + ∬ F(t,z) (∫_{-∞}^t B ds) dz dt
IdentityReport check_identity_time(const BalanceFields& bf);

// Manufactured smooth fixture: two unequal bump pairs with analytic sources,
// supported in the middle of [0,1]^2.
BalanceFields manufactured_bumps(int nt, int nx);

}  // namespace besovclaw
