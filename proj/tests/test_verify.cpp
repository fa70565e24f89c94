#include <doctest.h>

#include <cmath>

#include "besovclaw/solution_io.hpp"
#include "besovclaw/verify.hpp"

using namespace besovclaw;

namespace {

const FluxFunction kBurgers = FluxFunction::burgers();

struct SineSetup {
    SolutionRecord rec;
    Cutoff chi;
    VelocityGrid vg;
    ConvexityCertificate cert;
    std::vector<double> hx, ht;
};

SineSetup sine_setup(int nx, double tmax = 1.2) {
    const Grid2D g(0.0, tmax, 0.0, 1.0, nx, nx);
    SolutionRecord rec = solve_fv(InitialData::sine(1.0, 1.0), kBurgers, g, Scheme::godunov,
                                  0.45, Boundary::periodic);
    Cutoff chi = make_bump_cutoff({0.2 * tmax, 0.92 * tmax, 0.15, 0.85}, 0.5);
    const double eps_x = 0.1 * (0.85 - 0.15);
    const double eps_t = 0.1 * (0.92 - 0.2) * tmax;
    return SineSetup{std::move(rec),
                     chi,
                     VelocityGrid(-1.5, 1.5, 32),
                     certify_hyp_a(kBurgers, 1.0),
                     dyadic_shifts(g.dx(), 8, eps_x),
                     dyadic_shifts(g.dt(), 8, eps_t)};
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("lemma delta report: burgers equality case") {
    const auto rep = verify_lemma_delta(kBurgers, certify_hyp_a(kBurgers, 1.0), 1000, 7);
    CHECK(rep.pass);
    CHECK(rep.violations == 0);
    CHECK(rep.max_closed_form_err <= 1e-6);
    // Delta = |u-ub|^3/6 exactly: both ratios sit at 1.
    CHECK(rep.worst_ratio_corrected == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.worst_ratio_paper == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(rep.paper_constant_violated);
}

TEST_CASE("lemma delta erratum probe for the quartic flux") {
    const FluxFunction quartic = FluxFunction::even_power(2);
    const auto cert = empirical_certificate(quartic, 1.0, 3.0);
    const auto rep = verify_lemma_delta(quartic, cert, 10000, 11);
    CHECK(rep.pass);           // corrected constant alpha/((beta+1)(beta+2)) holds
    CHECK(rep.violations == 0);
    CHECK(rep.paper_constant_violated);  // beta^2-bearing constant fails somewhere
    CHECK(rep.worst_ratio_paper < 1.0);
    // Scan oracle: min Delta/|du|^5 = 1/40 at symmetric pairs, so the worst
    // paper ratio approaches (1/40)/(9/80) = 2/9.
    CHECK(rep.worst_ratio_paper >= 2.0 / 9.0 - 1e-6);
    CHECK(rep.worst_ratio_corrected >= 2.0);  // corrected bound is 1/80 vs true 1/40
}

TEST_CASE("lemma tartar report") {
    const EntropyPair pair = make_entropy_pair(EntropySpec::quadratic(), kBurgers, 1.0);
    const auto rep =
        verify_lemma_tartar(pair, kBurgers, certify_hyp_a(kBurgers, 1.0), 10000, 3);
    CHECK(rep.pass);
    CHECK(rep.violations == 0);
    // gap = |w-v|^4/12 exactly; corrected constant 1/12 gives ratio 1,
    // paper constant 1/6 is violated by a factor 2.
    CHECK(rep.worst_ratio_corrected == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.worst_ratio_paper == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rep.paper_constant_violated);
}

TEST_CASE("main theorem passes on the sine solution") {
    const auto s = sine_setup(256);
    const auto res = verify_main_theorem(s.rec, kBurgers, s.cert, s.chi, s.vg, s.hx, s.ht);
    CHECK(res.hard_pass);
    for (const auto& v : res.verdicts) {
        CHECK(v.pass);
        CHECK(v.margin > 0.0);
    }
    // beta = 1: the paper and corrected lemma constants coincide.
    CHECK(res.ledger.get("lhs_factor_paper") ==
          doctest::Approx(res.ledger.get("lhs_factor_corrected")));
    CHECK(res.ledger.get("lhs_factor_corrected") == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("main theorem on a constant solution is trivial") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 64, 64);
    const auto rec = exact_riemann(0.5, 0.5, kBurgers, g);
    const Cutoff chi = make_bump_cutoff({0.2, 0.9, 0.2, 0.8}, 0.5);
    const VelocityGrid vg(-1.0, 1.0, 16);
    const auto res = verify_main_theorem(rec, kBurgers, certify_hyp_a(kBurgers, 1.0), chi, vg,
                                         dyadic_shifts(g.dx(), 4, 0.05),
                                         dyadic_shifts(g.dt(), 4, 0.06));
    CHECK(res.hard_pass);
    for (const auto& v : res.verdicts) {
        CHECK(v.lhs == 0.0);
        CHECK(v.rhs > 0.0);  // 2|h|(...)(2U ||X||_L1) with m = 0
    }
    CHECK(res.ledger.get("m_tv_space_window") == 0.0);
}

TEST_CASE("main theorem covers the signed-measure shock") {
    const Grid2D g(0.0, 1.0, -1.0, 1.5, 512, 512);
    const auto rec = nonentropic_shock(0.0, 1.0, kBurgers, g);
    const Cutoff chi = make_bump_cutoff({0.15, 0.9, -0.5, 1.1}, 0.5);
    const VelocityGrid vg(-1.5, 1.5, 32);
    const auto res = verify_main_theorem(rec, kBurgers, certify_hyp_a(kBurgers, 1.5), chi, vg,
                                         dyadic_shifts(g.dx(), 8, 0.1),
                                         dyadic_shifts(g.dt(), 8, 0.07));
    CHECK(res.hard_pass);
    CHECK(res.ledger.get("m_tv_space_window") > 0.0);  // the measure is genuinely nonzero
}

TEST_CASE("main theorem rhs is linear in h") {
    const auto s = sine_setup(128);
    const auto res = verify_main_theorem(s.rec, kBurgers, s.cert, s.chi, s.vg, s.hx, s.ht);
    // Collect space verdicts with the erratum flag, compare rhs/h.
    double ratio = -1.0;
    for (const auto& v : res.verdicts) {
        if (v.direction != Direction::x || !v.erratum_adjusted) continue;
        const double r = v.rhs / v.h;
        if (ratio < 0.0)
            ratio = r;
        else
            CHECK(r == doctest::Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("ledger entries reproduce the verdict rhs") {
    const auto s = sine_setup(128);
    const auto res = verify_main_theorem(s.rec, kBurgers, s.cert, s.chi, s.vg, s.hx, s.ht);
    const auto& L = res.ledger;
    // Recompute every ledger entry that enters the rhs from scratch.
    const double X_l1 = transport_derivative_l1(s.chi, kBurgers, L.get("U"));
    CHECK(X_l1 == doctest::Approx(L.get("X_l1")).epsilon(1e-10));
    const double aprime = aprime_l1(kBurgers, L.get("U"));
    CHECK(aprime == doctest::Approx(L.get("aprime_l1_U")).epsilon(1e-10));
    const auto m = extract_measure(lift(s.rec, s.vg), kBurgers);
    const double tv = m.window_tv(
        {0.0, L.get("T"), -L.get("R") - L.get("eps_x"), L.get("R") + L.get("eps_x")});
    CHECK(tv == doctest::Approx(L.get("m_tv_space_window")).epsilon(1e-10));
    for (const auto& v : res.verdicts) {
        if (v.direction != Direction::x) continue;
        const double rhs = 2.0 * v.h * (L.get("chi_sup") + L.get("dchi_dx_l1")) *
                           (2.0 * L.get("U") * X_l1 + L.get("chi_sup") * tv);
        CHECK(rhs == doctest::Approx(v.rhs).epsilon(1e-10));
    }
}

TEST_CASE("one-entropy theorem with the quadratic entropy") {
    const auto s = sine_setup(256);
    const EntropyPair pair = make_entropy_pair(EntropySpec::quadratic(), kBurgers, 1.5);
    const auto res = verify_one_entropy(s.rec, kBurgers, s.cert, pair, s.chi, s.hx, s.ht);
    CHECK(res.hard_pass);
    // Paper factor 1/6 vs corrected 1/12 on [-1,1] states: both recorded.
    CHECK(res.ledger.get("lhs_factor_paper") == doctest::Approx(1.0 / 6.0));
    CHECK(res.ledger.get("lhs_factor_corrected") == doctest::Approx(1.0 / 12.0));
    CHECK(res.ledger.get("M3") >= 0.0);
    CHECK(res.ledger.get("N3") >= 0.0);
}

TEST_CASE("one-entropy theorem on the zero solution") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 64, 64);
    const auto rec = exact_riemann(0.0, 0.0, kBurgers, g);
    const Cutoff chi = make_bump_cutoff({0.2, 0.9, 0.2, 0.8}, 0.5);
    const EntropyPair pair = make_entropy_pair(EntropySpec::quadratic(), kBurgers, 1.0);
    const auto res = verify_one_entropy(rec, kBurgers, certify_hyp_a(kBurgers, 1.0), pair, chi,
                                        dyadic_shifts(g.dx(), 4, 0.05),
                                        dyadic_shifts(g.dt(), 4, 0.06));
    CHECK(res.hard_pass);
    for (const auto& v : res.verdicts) CHECK(v.lhs == 0.0);
}

TEST_CASE("one-entropy requires a strict entropy certificate") {
    const auto s = sine_setup(64);
    const EntropyPair linear = make_entropy_pair(EntropySpec::linear(), kBurgers, 1.5);
    CHECK_THROWS_WITH(
        (void)verify_one_entropy(s.rec, kBurgers, s.cert, linear, s.chi, s.hx, s.ht),
        "missing certificate");
}

TEST_CASE("velocity averaging estimate on the lifted sine solution") {
    const auto s = sine_setup(256);
    const auto kd = lift(s.rec, s.vg);
    const auto m = extract_measure(kd, kBurgers);
    const TestWeight psi = TestWeight::plateau(1.4, 0.85, &kBurgers);
    const auto cert = certify_hyp_a(kBurgers, 1.4);
    const auto res =
        verify_velocity_averaging(kd, m, kBurgers, cert, s.chi, psi, s.hx, s.ht);
    CHECK(res.hard_pass);
    // Exponent sanity: the fitted lhs slope clears 1/(2+beta) - 0.1.
    CHECK(res.slope_x >= 1.0 / 3.0 - 0.1);
    CHECK(res.ledger.get("C0") > 0.0);
    CHECK(res.ledger.get("C2") >= 0.0);
}

TEST_CASE("velocity averaging on the zero density is trivial") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 64, 64);
    const auto rec = exact_riemann(0.0, 0.0, kBurgers, g);
    const VelocityGrid vg(-1.0, 1.0, 16);
    const auto kd = lift(rec, vg);
    const auto m = extract_measure(kd, kBurgers);
    const TestWeight psi = TestWeight::plateau(0.9, 0.7, &kBurgers);
    const Cutoff chi = make_bump_cutoff({0.2, 0.9, 0.2, 0.8}, 0.5);
    const auto res = verify_velocity_averaging(kd, m, kBurgers, certify_hyp_a(kBurgers, 1.0),
                                               chi, psi, dyadic_shifts(g.dx(), 4, 0.05),
                                               dyadic_shifts(g.dt(), 4, 0.06));
    CHECK(res.hard_pass);
    for (const auto& v : res.verdicts) CHECK(v.lhs == 0.0);
}

TEST_CASE("velocity averaging rejects densities violating hyp-f") {
    // A sampled random-sign density cannot enter the theorem; the check_hyp_f
    // precondition is enforced on lifted densities, which always satisfy it,
    // so the rejection path is exercised through the report directly.
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 8, 8);
    const VelocityGrid vg(-1.0, 1.0, 16);
    const auto noise = SampledDensity::random_signs(g, vg, 5);
    CHECK_FALSE(check_hyp_f(noise, {{1, 0}, {0, 1}}).pass);
}

}  // TEST_SUITE
