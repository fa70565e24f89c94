#include "besovclaw/flux.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace besovclaw {

namespace {

double u01(std::mt19937_64& rng) {
    // Platform-independent uniform in [0, 1).
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FluxFunction FluxFunction::burgers() {
    FluxFunction f;
    f.id_ = "burgers";
    f.tag_ = Tag::burgers;
    f.a_ = [](double v) { return 0.5 * v * v; };
    f.da_ = [](double v) { return v; };
    f.d2a_ = [](double) { return 1.0; };
    return f;
}

FluxFunction FluxFunction::even_power(int n) {
    if (n < 1) throw std::invalid_argument("even_power: n must be >= 1");
    FluxFunction f;
    f.id_ = "even_power:" + std::to_string(n);
    f.tag_ = Tag::even_power;
    f.n_ = n;
    const double p = 2.0 * n;
    f.a_ = [p](double v) { return std::pow(v, p) / p; };
    f.da_ = [p](double v) { return std::pow(v, p - 1.0); };
    f.d2a_ = [p](double v) { return (p - 1.0) * std::pow(v, p - 2.0); };
    return f;
}

FluxFunction FluxFunction::custom(std::string id, std::function<double(double)> a,
                                  std::function<double(double)> da,
                                  std::function<double(double)> d2a) {
    FluxFunction f;
    f.id_ = std::move(id);
    f.tag_ = Tag::custom;
    f.a_ = std::move(a);
    f.da_ = std::move(da);
    f.d2a_ = std::move(d2a);
    return f;
}

double FluxFunction::argmin(double lo, double hi) const {
    if (da_(lo) >= 0.0) return lo;
    if (da_(hi) <= 0.0) return hi;
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-15 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
        const double m = 0.5 * (a + b);
        (da_(m) < 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

double FluxFunction::deriv_inverse(double slope, double lo, double hi) const {
    double a = lo, b = hi;
    if (slope <= da_(a)) return a;
    if (slope >= da_(b)) return b;
    for (int it = 0; it < 200 && b - a > 1e-15 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
        const double m = 0.5 * (a + b);
        (da_(m) < slope ? a : b) = m;
    }
    return 0.5 * (a + b);
}

ConvexityCertificate certify_monotone_increment(const std::function<double(double)>& phi,
                                                double M, int n_samples,
                                                std::uint64_t revalidate_seed,
                                                const char* not_convex_message) {
    if (n_samples < 100) throw std::invalid_argument("certify: n_samples must be >= 100");
    const int n = n_samples;
    std::vector<double> pv(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) pv[static_cast<std::size_t>(i)] = -M + 2.0 * M * i / n;

    // Exponent from the lower envelope over pair separations: a certificate
    // must dominate the worst pair at every separation, so the binding
    // exponent is the log-log slope of min_{|v-w|=d} (phi(v)-phi(w)).
    std::vector<double> envelope(static_cast<std::size_t>(n) + 1,
                                 std::numeric_limits<double>::infinity());
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const double inc =
                phi(pv[static_cast<std::size_t>(j)]) - phi(pv[static_cast<std::size_t>(i)]);
            if (inc < 0.0) throw std::runtime_error(not_convex_message);
            envelope[static_cast<std::size_t>(j - i)] =
                std::min(envelope[static_cast<std::size_t>(j - i)], inc);
        }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long cnt = 0;
    for (int sep = 1; sep <= n / 4; ++sep) {
        const double d = 2.0 * M * sep / n;
        const double e = envelope[static_cast<std::size_t>(sep)];
        if (!(e > 0.0) || !std::isfinite(e)) continue;
        const double x = std::log(d), y = std::log(e);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++cnt;
    }
    double beta = 1.0;
    if (cnt >= 2) {
        const double denom = cnt * sxx - sx * sx;
        if (denom > 0.0) beta = std::max(1.0, (cnt * sxy - sx * sy) / denom);
    }

    // Floor alpha to the observed infimum over the full scan.
    double alpha = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const double w = pv[static_cast<std::size_t>(i)], v = pv[static_cast<std::size_t>(j)];
            const double inc = phi(v) - phi(w);
            if (inc < 0.0) throw std::runtime_error(not_convex_message);
            alpha = std::min(alpha, inc / std::pow(v - w, beta));
        }
    }

    // Re-validate on fresh random pairs; keep the certificate a literal
    // inequality by lowering alpha to anything observed below it.
    std::mt19937_64 rng(revalidate_seed);
    for (int it = 0; it < 10000; ++it) {
        double w = -M + 2.0 * M * u01(rng);
        double v = -M + 2.0 * M * u01(rng);
        if (w > v) std::swap(w, v);
        if (v - w < 1e-12) continue;
        const double inc = phi(v) - phi(w);
        if (inc < 0.0) throw std::runtime_error(not_convex_message);
        alpha = std::min(alpha, inc / std::pow(v - w, beta));
    }

    if (!(alpha > 0.0)) throw std::runtime_error(not_convex_message);
    return {M, alpha, beta};
}

ConvexityCertificate certify_hyp_a(const FluxFunction& flux, double M, int n_samples,
                                   std::uint64_t revalidate_seed) {
    if (!(M > 0.0)) throw std::invalid_argument("certify_hyp_a: M must be positive");
    switch (flux.tag()) {
        case FluxFunction::Tag::burgers:
            // a'(v) - a'(w) = v - w exactly.
            return {M, 1.0, 1.0};
        case FluxFunction::Tag::even_power: {
            // beta = 2n-1, alpha = lambda / (2^{2n-1}(2n-1)!) (rho/M)^{2n-1}
            // with lambda = min a^{(2n)} = (2n-1)! and rho = M/2, which
            // collapses to 4^{-(2n-1)}.
            const int n = flux.power_n();
            const double beta = 2.0 * n - 1.0;
            const double alpha = std::pow(4.0, -beta);
            return {M, alpha, beta};
        }
        case FluxFunction::Tag::custom:
            return certify_monotone_increment([&flux](double v) { return flux.deriv(v); }, M,
                                              n_samples, revalidate_seed,
                                              "flux not uniformly convex at exponent beta");
    }
    throw std::logic_error("certify_hyp_a: unknown tag");
}

ConvexityCertificate empirical_certificate(const FluxFunction& flux, double M, double beta,
                                           int n_scan) {
    if (!(M > 0.0) || !(beta >= 1.0))
        throw std::invalid_argument("empirical_certificate: bad parameters");
    const int n = n_scan;
    double alpha = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double w = -M + 2.0 * M * i / n;
        for (int j = i + 1; j <= n; ++j) {
            const double v = -M + 2.0 * M * j / n;
            const double inc = flux.deriv(v) - flux.deriv(w);
            alpha = std::min(alpha, inc / std::pow(v - w, beta));
        }
    }
    if (!(alpha > 0.0))
        throw std::runtime_error("flux not uniformly convex at exponent beta");
    return {M, alpha, beta};
}

}  // namespace besovclaw
