#pragma once

#include <string>
#include <vector>

#include "besovclaw/cutoff.hpp"
#include "besovclaw/field.hpp"

namespace besovclaw {

enum class Direction { x, t };

inline const char* direction_name(Direction d) { return d == Direction::x ? "x" : "t"; }

// Shift h as an exact grid multiple; throws "non-commensurate shift"
// otherwise. Fields are extended by zero outside the grid.
int shift_cells(const Grid2D& g, Direction dir, double h);

// D^h u: pointwise shifted difference u(.+h) - u(.), zero extension.
SpaceTimeField diff(const SpaceTimeField& field, Direction dir, double h);

struct IncrementFunctional {
    Direction direction = Direction::x;
    double h = 0.0;
    double p = 2.0;
    double value = 0.0;  // ∬ chi^2 |D^h u|^p dx dt
};

// Throws "support escape" when the cutoff support shifted by h leaves the
// grid.
IncrementFunctional increment_functional(const SpaceTimeField& field, Direction dir, double h,
                                         double p, const Cutoff& cutoff);

struct BesovReport {
    Direction direction = Direction::x;
    double p = 0.0;
    std::vector<std::pair<double, double>> points;  // (h, value)
    double slope = 0.0;
    double intercept = 0.0;
    double inferred_s = 0.0;  // slope / p
    bool membership_consistent = false;  // slope >= 1 - fit tolerance
    static constexpr double kFitTolerance = 0.1;
};

// Least-squares fit of log value against log h over the given shifts.
// Preconditions: >= 4 dyadic shifts, all >= 4 spacings (noise floor).
BesovReport besov_fit(const SpaceTimeField& field, Direction dir, double p,
                      const Cutoff& cutoff, const std::vector<double>& h_set);

// Dyadic shifts {min_mult, 2 min_mult, ...} * spacing capped at hmax.
std::vector<double> dyadic_shifts(double spacing, int min_mult, double hmax);

}  // namespace besovclaw
