#include "besovclaw/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "besovclaw/summation.hpp"

namespace besovclaw {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double m, double fm) {
    (void)m;
    (void)f;
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, fa, m, fm, lm, flm);
    const double right = simpson(f, m, fm, b, fb, rm, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

// 5-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 5> kGlx = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0,
    0.5384693101056830910, 0.9061798459386639928};
constexpr std::array<double, 5> kGlw = {
    0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
    0.4786286704993664680, 0.2369268850561890875};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(f, a, fa, b, fb, m, fm);
    return adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels < 1) throw std::invalid_argument("gauss_legendre: panels < 1");
    const double hp = (b - a) / panels;
    std::vector<double> vals(static_cast<std::size_t>(panels) * 5);
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * hp;
        const double c = lo + 0.5 * hp, r = 0.5 * hp;
        for (int q = 0; q < 5; ++q)
            vals[static_cast<std::size_t>(p) * 5 + q] = kGlw[q] * f(c + r * kGlx[q]) * r;
    }
    return pairwise_sum(vals);
}

double integrate1d_midpoint(const std::function<double(double)>& f, double a, double b,
                            int cells) {
    if (cells < 1) throw std::invalid_argument("integrate1d_midpoint: cells < 1");
    const double h = (b - a) / cells;
    std::vector<double> vals(static_cast<std::size_t>(cells));
    for (int i = 0; i < cells; ++i) {
        const double v = f(a + (i + 0.5) * h);
        if (!std::isfinite(v)) throw std::domain_error("non-finite sample");
        vals[static_cast<std::size_t>(i)] = v * h;
    }
    return pairwise_sum(vals);
}

double integrate2d_midpoint(const std::function<double(double, double)>& f,
                            double ta, double tb, double xa, double xb,
                            int tcells, int xcells) {
    if (tcells < 1 || xcells < 1)
        throw std::invalid_argument("integrate2d_midpoint: cells < 1");
    const double ht = (tb - ta) / tcells;
    const double hx = (xb - xa) / xcells;
    const double sum = pairwise_sum_rows(
        static_cast<std::size_t>(tcells), static_cast<std::size_t>(xcells),
        [&](std::size_t n, std::size_t i) {
            const double v = f(ta + (static_cast<double>(n) + 0.5) * ht,
                               xa + (static_cast<double>(i) + 0.5) * hx);
            if (!std::isfinite(v)) throw std::domain_error("non-finite sample");
            return v;
        });
    return sum * ht * hx;
}

}  // namespace besovclaw
