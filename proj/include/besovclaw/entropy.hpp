#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "besovclaw/flux.hpp"

namespace besovclaw {

// Certificate for eta': eta'(v) - eta'(w) >= eta0 (v-w)^{beta'} on [-V, V].
struct EntropyCertificate {
    double radius = 0.0;
    double eta0 = 0.0;
    double beta_prime = 1.0;
};

struct EntropySpec {
    enum class Tag { quadratic, linear, even_power, custom };
    Tag tag = Tag::quadratic;
    int power_n = 1;  // eta(v) = v^{2n}/(2n) for even_power
    std::string id = "quadratic";
    std::function<double(double)> eta, deta;

    static EntropySpec quadratic();  // eta(v) = v^2/2
    static EntropySpec linear();     // eta(v) = v
    static EntropySpec even_power(int n);
    static EntropySpec custom(std::string id, std::function<double(double)> eta,
                              std::function<double(double)> deta);
};

// Entropy / entropy-flux pair with q(v) = ∫_0^v eta'(w) a'(w) dw built by
// composite Gauss-Legendre prefix sums anchored at q(0) = 0.
class EntropyPair {
  public:
    EntropyPair(EntropySpec spec, const FluxFunction& flux, double V, int panels = 4096);

    double eta(double v) const { return eta_(v); }
    double deta(double v) const { return deta_(v); }
    double q(double v) const;

    double radius() const { return V_; }
    const std::string& id() const { return id_; }
    const std::optional<EntropyCertificate>& certificate() const { return cert_; }

  private:
    std::string id_;
    std::function<double(double)> eta_, deta_;
    std::function<double(double)> integrand_;  // eta'(v) a'(v)
    double V_;
    int panels_;
    double panel_width_;
    std::vector<double> prefix_pos_, prefix_neg_;  // ∫_0^{k·w} on each side
    std::optional<EntropyCertificate> cert_;
};

// Spec operation name. Throws std::runtime_error("entropy not convex") when
// eta' decreases on the probed range.
EntropyPair make_entropy_pair(const EntropySpec& spec, const FluxFunction& flux, double V);

// Tartar quantity (w-v)(q(w)-q(v)) - (a(w)-a(v))(eta(w)-eta(v)), exactly as
// written.
double tartar_gap(const EntropyPair& pair, const FluxFunction& flux, double v, double w);

// Lower-bound constants for the Tartar gap on [-V, V]:
//   stated:    alpha eta0 (beta+beta') / ((beta+beta'+1)(beta+beta'+2))
//   corrected: alpha eta0 / ((beta+beta'+1)(beta+beta'+2))
double tartar_paper_constant(const ConvexityCertificate& a, const EntropyCertificate& e);
double tartar_corrected_constant(const ConvexityCertificate& a, const EntropyCertificate& e);

}  // namespace besovclaw
