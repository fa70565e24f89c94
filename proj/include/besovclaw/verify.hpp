#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "besovclaw/besov.hpp"
#include "besovclaw/cutoff.hpp"
#include "besovclaw/entropy.hpp"
#include "besovclaw/kinetic.hpp"
#include "besovclaw/measure.hpp"
#include "besovclaw/solver.hpp"
#include "besovclaw/test_weight.hpp"

namespace besovclaw {

// Named constants backing the theorem right-hand sides; insertion order is
// preserved for serialization.
class ConstantLedger {
  public:
    void set(const std::string& name, double value);
    double get(const std::string& name) const;
    bool has(const std::string& name) const;
    const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

  private:
    std::vector<std::pair<std::string, double>> entries_;
};

struct TheoremVerdict {
    std::string tag;
    Direction direction = Direction::x;
    double h = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    bool pass = false;
    bool erratum_adjusted = false;  // corrected lemma constant used on the lhs
};

struct VerifyResult {
    ConstantLedger ledger;
    std::vector<TheoremVerdict> verdicts;
    double slope_x = 0.0, slope_t = 0.0;  // log-log slope of the lhs functional
    bool hard_pass = false;  // all erratum-adjusted (or unflagged) verdicts pass
};

struct VerifyOptions {
    double slack = 0.05;            // rhs quadrature slack for pass/fail
    double shift_cap_fraction = 0.1;  // eps = fraction of the cutoff width
};

// Quadrature helpers shared with the ledger-recomputation tests.
// ‖X‖_{L1} = ∫_{-U}^{U} ∬ |∂_t chi + a'(v) ∂_x chi| dx dt dv.
double transport_derivative_l1(const Cutoff& chi, const FluxFunction& flux, double U);
// ∭ |X| psi(v) (|v|) dv dx dt over the weight's support.
double transport_derivative_psi_l1(const Cutoff& chi, const FluxFunction& flux,
                                   const TestWeight& psi, bool v_weight);
// ∫_{-U}^{U} |a'(v)| dv.
double aprime_l1(const FluxFunction& flux, double U);
// sup over [-U, U] of |f|, dense scan.
double range_sup(const std::function<double(double)>& f, double U);

// Main regularizing-effect inequality, space and time forms, one verdict per
// shift per direction under the stated and the corrected lemma constants.
VerifyResult verify_main_theorem(const SolutionRecord& rec, const FluxFunction& flux,
                                 const ConvexityCertificate& cert, const Cutoff& cutoff,
                                 const VelocityGrid& vgrid,
                                 const std::vector<double>& shifts_x,
                                 const std::vector<double>& shifts_t,
                                 const VerifyOptions& opts = {});

// Single-entropy regularity inequality with constants M1..M3 / N1..N3.
VerifyResult verify_one_entropy(const SolutionRecord& rec, const FluxFunction& flux,
                                const ConvexityCertificate& cert, const EntropyPair& pair,
                                const Cutoff& cutoff, const std::vector<double>& shifts_x,
                                const std::vector<double>& shifts_t,
                                const VerifyOptions& opts = {});

// Velocity-averaging estimates with constants C0..C4. Errors with
// "monotonicity hypothesis fails - theorem inapplicable" when the input
// density violates the monotonicity hypothesis.
VerifyResult verify_velocity_averaging(const KineticDensity& kd, const SignedMeasure& m,
                                       const FluxFunction& flux,
                                       const ConvexityCertificate& cert, const Cutoff& cutoff,
                                       const TestWeight& psi,
                                       const std::vector<double>& shifts_x,
                                       const std::vector<double>& shifts_t,
                                       const VerifyOptions& opts = {});

struct LemmaReport {
    std::string tag;
    int pairs = 0;
    int violations = 0;               // corrected-bound violations (hard failures)
    double worst_ratio_paper = 0.0;   // min over pairs of value / paper bound
    double worst_ratio_corrected = 0.0;
    double max_closed_form_err = 0.0;  // burgers only
    bool paper_constant_violated = false;  // worst_ratio_paper < 1 somewhere
    bool pass = false;                     // corrected bound held everywhere
};

// Interaction lower bound Delta(u, ubar) against both constants on random
// pairs in [-V, V], V the certificate radius.
LemmaReport verify_lemma_delta(const FluxFunction& flux, const ConvexityCertificate& cert,
                               int npairs, std::uint64_t seed);

// Tartar gap nonnegativity plus both lower-bound constants.
LemmaReport verify_lemma_tartar(const EntropyPair& pair, const FluxFunction& flux,
                                const ConvexityCertificate& cert, int npairs,
                                std::uint64_t seed);

}  // namespace besovclaw
