#include "besovclaw/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "besovclaw/quadrature.hpp"

namespace besovclaw {

EntropySpec EntropySpec::quadratic() {
    EntropySpec s;
    s.tag = Tag::quadratic;
    s.id = "quadratic";
    s.eta = [](double v) { return 0.5 * v * v; };
    s.deta = [](double v) { return v; };
    return s;
}

EntropySpec EntropySpec::linear() {
    EntropySpec s;
    s.tag = Tag::linear;
    s.id = "linear";
    s.eta = [](double v) { return v; };
    s.deta = [](double) { return 1.0; };
    return s;
}

EntropySpec EntropySpec::even_power(int n) {
    if (n < 1) throw std::invalid_argument("EntropySpec::even_power: n must be >= 1");
    EntropySpec s;
    s.tag = Tag::even_power;
    s.power_n = n;
    s.id = "even_power:" + std::to_string(n);
    const double p = 2.0 * n;
    s.eta = [p](double v) { return std::pow(v, p) / p; };
    s.deta = [p](double v) { return std::pow(v, p - 1.0); };
    return s;
}

EntropySpec EntropySpec::custom(std::string id, std::function<double(double)> eta,
                                std::function<double(double)> deta) {
    EntropySpec s;
    s.tag = Tag::custom;
    s.id = std::move(id);
    s.eta = std::move(eta);
    s.deta = std::move(deta);
    return s;
}

EntropyPair::EntropyPair(EntropySpec spec, const FluxFunction& flux, double V, int panels)
    : id_(spec.id), eta_(spec.eta), deta_(spec.deta), V_(V), panels_(panels) {
    if (!(V > 0.0)) throw std::invalid_argument("EntropyPair: V must be positive");

    // Convexity probe of eta on the range.
    double prev = deta_(-V);
    for (int i = 1; i <= 256; ++i) {
        const double v = -V + 2.0 * V * i / 256.0;
        const double cur = deta_(v);
        if (cur < prev - 1e-12 * (1.0 + std::abs(prev)))
            throw std::runtime_error("entropy not convex");
        prev = cur;
    }

    auto da = [&flux](double v) { return flux.deriv(v); };
    integrand_ = [eta1 = deta_, da](double v) { return eta1(v) * da(v); };

    panel_width_ = V / panels;
    prefix_pos_.assign(static_cast<std::size_t>(panels) + 1, 0.0);
    prefix_neg_.assign(static_cast<std::size_t>(panels) + 1, 0.0);
    for (int k = 0; k < panels; ++k) {
        const double lo = k * panel_width_, hi = (k + 1) * panel_width_;
        prefix_pos_[static_cast<std::size_t>(k) + 1] =
            prefix_pos_[static_cast<std::size_t>(k)] + gauss_legendre(integrand_, lo, hi, 1);
        prefix_neg_[static_cast<std::size_t>(k) + 1] =
            prefix_neg_[static_cast<std::size_t>(k)] + gauss_legendre(integrand_, -lo, -hi, 1);
    }

    // Certificate on eta' (analytic for tagged entropies).
    switch (spec.tag) {
        case EntropySpec::Tag::quadratic:
            cert_ = EntropyCertificate{V, 1.0, 1.0};
            break;
        case EntropySpec::Tag::linear:
            cert_ = std::nullopt;  // eta' constant: no strict certificate
            break;
        case EntropySpec::Tag::even_power: {
            const double bp = 2.0 * spec.power_n - 1.0;
            cert_ = EntropyCertificate{V, std::pow(4.0, -bp), bp};
            break;
        }
        case EntropySpec::Tag::custom: {
            const auto c = certify_monotone_increment(deta_, V, 512, 0x5eedULL,
                                                      "entropy not convex");
            cert_ = EntropyCertificate{V, c.alpha, c.beta};
            break;
        }
    }
}

double EntropyPair::q(double v) const {
    if (std::abs(v) > V_ * (1.0 + 1e-12))
        throw std::invalid_argument("EntropyPair::q: argument outside certified range");
    const double av = std::min(std::abs(v), V_);
    const int k = std::min(panels_ - 1, static_cast<int>(av / panel_width_));
    if (v >= 0.0) {
        const double lo = k * panel_width_;
        return prefix_pos_[static_cast<std::size_t>(k)] +
               gauss_legendre(integrand_, lo, v, 1);
    }
    const double lo = k * panel_width_;
    return prefix_neg_[static_cast<std::size_t>(k)] + gauss_legendre(integrand_, -lo, v, 1);
}

EntropyPair make_entropy_pair(const EntropySpec& spec, const FluxFunction& flux, double V) {
    return EntropyPair(spec, flux, V);
}

double tartar_gap(const EntropyPair& pair, const FluxFunction& flux, double v, double w) {
    return (w - v) * (pair.q(w) - pair.q(v)) -
           (flux(w) - flux(v)) * (pair.eta(w) - pair.eta(v));
}

double tartar_paper_constant(const ConvexityCertificate& a, const EntropyCertificate& e) {
    const double p = a.beta + e.beta_prime;
    return a.alpha * e.eta0 * p / ((p + 1.0) * (p + 2.0));
}

double tartar_corrected_constant(const ConvexityCertificate& a, const EntropyCertificate& e) {
    const double p = a.beta + e.beta_prime;
    return a.alpha * e.eta0 / ((p + 1.0) * (p + 2.0));
}

}  // namespace besovclaw
