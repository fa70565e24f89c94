#pragma once

#include <functional>

namespace besovclaw {

// Adaptive Simpson on [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 48);

// Composite 5-point Gauss-Legendre with `panels` uniform panels. Exact for
// polynomials of degree <= 9 per panel.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels);

// Composite midpoint rules with deterministic pairwise reduction.
// Throws std::domain_error("non-finite sample") on NaN/Inf samples.
double integrate1d_midpoint(const std::function<double(double)>& f, double a, double b, int cells);
double integrate2d_midpoint(const std::function<double(double, double)>& f,
                            double ta, double tb, double xa, double xb,
                            int tcells, int xcells);

}  // namespace besovclaw
