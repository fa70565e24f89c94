#include <doctest.h>

#include <cmath>
#include <random>

#include "besovclaw/kinetic.hpp"
#include "besovclaw/measure.hpp"
#include "besovclaw/solver.hpp"
#include "besovclaw/summation.hpp"

using namespace besovclaw;

namespace {

const FluxFunction kBurgers = FluxFunction::burgers();

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SolutionRecord constant_record(double c, const Grid2D& g) {
    return exact_riemann(c, c, kBurgers, g);
}

// Nested Riemann-sum oracle for Delta(u, ubar), independent of the library
// quadrature: velocity cells with exact indicator averages.
double delta_oracle(double u, double ubar, const FluxFunction& flux, int nv) {
    const double vmin = -2.5, vmax = 2.5;
    const double dv = (vmax - vmin) / nv;
    auto msign = [](double state, double v) {
        if (state >= 0.0) return (v >= 0.0 && v <= state) ? 1.0 : 0.0;
        return (v >= state && v < 0.0) ? -1.0 : 0.0;
    };
    double total = 0.0;
    for (int k = 0; k < nv; ++k) {
        const double v = vmin + (k + 0.5) * dv;
        const double gv = msign(u, v) - msign(ubar, v);
        if (gv == 0.0) continue;
        for (int l = 0; l < nv; ++l) {
            const double w = vmin + (l + 0.5) * dv;
            if (!(v - w > 0.0)) continue;
            const double gw = msign(u, w) - msign(ubar, w);
            if (gw == 0.0) continue;
            total += (flux.deriv(v) - flux.deriv(w)) * gv * gw * dv * dv;
        }
    }
    return total;
}

}  // namespace

TEST_SUITE("kinetic") {

TEST_CASE("lift cell values follow the signed indicator") {
    const Grid2D g(0.0, 1.0, -1.0, 1.0, 4, 4);
    const VelocityGrid vg(-3.2, 3.2, 32);  // dv = 0.2, cells at +-(0.1, 0.3, ...)
    const auto rec = constant_record(2.0, g);
    const auto kd = lift(rec, vg);
    // u = 2: the cell centered at 1.0 sits inside [0, 2].
    const int k_at = static_cast<int>((1.0 - vg.vmin()) / vg.dv());
    CHECK(kd.value(0, 0, k_at) == doctest::Approx(1.0));
    CHECK(kd.value(0, 0, 0) == 0.0);  // v ~ -3.1, far below 0

    const auto neg = lift(constant_record(-1.0, g), vg);
    const int k_neg = static_cast<int>((-0.5 - vg.vmin()) / vg.dv());
    CHECK(neg.value(1, 2, k_neg) == doctest::Approx(-1.0));

    const auto zero = lift(constant_record(0.0, g), vg);
    for (int k = 0; k < vg.nv(); ++k) CHECK(zero.value(0, 0, k) == 0.0);
}

TEST_CASE("lift requires the velocity grid to span the solution range") {
    const Grid2D g(0.0, 1.0, -1.0, 1.0, 4, 4);
    const VelocityGrid small(-1.0, 1.0, 8);
    CHECK_THROWS_WITH((void)lift(constant_record(1.0, g), small),
                      "velocity support exceeded");
}

TEST_CASE("zeroth moment of the lift is exact") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 8, 64);
    const auto rec = solve_fv(InitialData::sine(0.9, 1.0), kBurgers, g, Scheme::godunov, 0.45,
                              Boundary::periodic);
    const VelocityGrid vg(-1.5, 1.5, 48);
    const auto kd = lift(rec, vg);
    for (int n : {0, 3, 7})
        for (int i : {0, 17, 40, 63}) {
            double sum = 0.0;
            for (int k = 0; k < vg.nv(); ++k) sum += kd.value(n, i, k) * vg.dv();
            CHECK(sum == doctest::Approx(rec.field(n, i)).epsilon(1e-13));
        }
}

TEST_CASE("velocity average with a plateau weight reproduces u") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 8, 64);
    const auto rec = solve_fv(InitialData::sine(0.9, 1.0), kBurgers, g, Scheme::godunov, 0.45,
                              Boundary::periodic);
    const VelocityGrid vg(-2.0, 2.0, 64);
    const auto kd = lift(rec, vg);
    // Plateau covers [-1.2, 1.2] so psi = 1 wherever f is nonzero.
    const TestWeight psi = TestWeight::plateau(2.0, 0.6);
    const auto ua = velocity_average(kd, psi);
    double worst = 0.0;
    for (int n = 0; n < g.nt(); ++n)
        for (int i = 0; i < g.nx(); ++i)
            worst = std::max(worst, std::abs(ua(n, i) - rec.field(n, i)));
    CHECK(worst <= 1e-13);
}

TEST_CASE("velocity average vanishes where the weight misses the support") {
    const Grid2D g(0.0, 1.0, -1.0, 1.0, 4, 4);
    const VelocityGrid vg(-3.0, 3.0, 48);
    const auto kd = lift(constant_record(0.4, g), vg);
    // Weight supported in [-3, -2]: f vanishes there.
    const TestWeight psi = TestWeight::custom(
        "farleft", 3.0, [](double v) { return v < -2.0 ? (-2.0 - v) * (v + 3.0) * 4.0 : 0.0; },
        [](double v) { return v < -2.0 ? (-2.0 - (v + 3.0) + (-2.0 - v)) * 4.0 : 0.0; });
    const auto ua = velocity_average(kd, psi);
    CHECK(ua.supnorm() == 0.0);
}

TEST_CASE("velocity average spot value against a direct Riemann sum") {
    const Grid2D g(0.0, 1.0, -1.0, 1.0, 4, 8);
    const VelocityGrid vg(-2.0, 2.0, 64);
    const auto rec = constant_record(0.8, g);
    const auto kd = lift(rec, vg);
    // psi(v) = max(0, 1 - v^2)^2, normalized to unit mass.
    const double norm = 15.0 / 16.0;  // ∫(1-v^2)^2 = 16/15 on [-1,1]
    auto raw = [](double v) { const double s = std::max(0.0, 1.0 - v * v); return s * s; };
    const TestWeight psi = TestWeight::custom(
        "parabolic", 2.0, [raw, norm](double v) { return norm * raw(v); },
        [norm](double v) {
            return std::abs(v) < 1.0 ? norm * 2.0 * (1.0 - v * v) * (-2.0 * v) : 0.0;
        });
    const auto ua = velocity_average(kd, psi);
    double oracle = 0.0;
    for (int k = 0; k < vg.nv(); ++k)
        oracle += kd.value(2, 3, k) * norm * raw(vg.vcenter(k)) * vg.dv();
    CHECK(ua(2, 3) == doctest::Approx(oracle).epsilon(1e-13));
    // And against the analytic ∫_0^{0.8} psi: antiderivative of (1-v^2)^2.
    auto anti = [norm](double v) {
        return norm * (v - 2.0 * v * v * v / 3.0 + v * v * v * v * v / 5.0);
    };
    CHECK(ua(2, 3) == doctest::Approx(anti(0.8) - anti(0.0)).epsilon(1e-3));
}

TEST_CASE("delta quadrature against closed form and oracle") {
    const VelocityGrid vg(-2.5, 2.5, 16);
    // burgers, Delta(1,0) = ∫_0^1 ∫_w^1 (v-w) dv dw = 1/6.
    CHECK(delta(1.0, 0.0, kBurgers, vg) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(closed_form_delta_burgers(1.0, 0.0) == doctest::Approx(1.0 / 6.0));
    CHECK(delta(0.3, 0.3, kBurgers, vg) == 0.0);

    // Independent nested Riemann-sum oracle at a mixed-sign pair.
    const double d_lib = delta(0.9, -0.7, kBurgers, vg);
    const double d_orc = delta_oracle(0.9, -0.7, kBurgers, 4000);
    CHECK(d_lib == doctest::Approx(d_orc).epsilon(1e-3));
    CHECK(d_lib == doctest::Approx(closed_form_delta_burgers(0.9, -0.7)).epsilon(1e-12));
}

TEST_CASE("delta symmetry on random pairs") {
    const VelocityGrid vg(-2.5, 2.5, 16);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        const double u = -1.0 + 2.0 * u01(rng), ub = -1.0 + 2.0 * u01(rng);
        CHECK(delta(u, ub, kBurgers, vg) ==
              doctest::Approx(delta(ub, u, kBurgers, vg)).epsilon(1e-12));
    }
}

TEST_CASE("corrected interaction lower bound on random pairs") {
    const VelocityGrid vg(-2.5, 2.5, 16);
    const auto cert_b = certify_hyp_a(kBurgers, 1.0);
    const FluxFunction quartic = FluxFunction::even_power(2);
    const auto cert_q = empirical_certificate(quartic, 1.0, 3.0);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
        const double u = -1.0 + 2.0 * u01(rng), ub = -1.0 + 2.0 * u01(rng);
        const double du = std::abs(u - ub);
        CHECK(delta(u, ub, kBurgers, vg) >=
              cert_b.corrected_lemma_constant() * std::pow(du, 3.0) * (1.0 - 1e-9) - 1e-15);
        CHECK(delta(u, ub, quartic, vg) >=
              cert_q.corrected_lemma_constant() * std::pow(du, 5.0) * (1.0 - 1e-9) - 1e-15);
    }
    // For burgers the corrected bound is an identity: Delta = |u-ub|^3 / 6.
    CHECK(cert_b.corrected_lemma_constant() == doctest::Approx(1.0 / 6.0));
    CHECK(cert_b.paper_lemma_constant() == doctest::Approx(1.0 / 6.0));  // beta = 1 coincide
}

TEST_CASE("hyp-f holds for every lift output") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 48, 48);
    const std::vector<std::pair<int, int>> shifts{{1, 0}, {0, 1}, {1, 1}, {2, 3}};
    for (double tmax : {0.1, 1.2}) {
        const Grid2D gg(0.0, tmax, 0.0, 1.0, 48, 48);
        const auto rec = solve_fv(InitialData::sine(1.0, 1.0), kBurgers, gg, Scheme::godunov,
                                  0.45, Boundary::periodic);
        const auto kd = lift(rec, VelocityGrid(-1.5, 1.5, 24));
        const auto rep = check_hyp_f(kd, shifts);
        CHECK(rep.pass);
        CHECK(rep.worst >= 0.0);
    }
    const Grid2D gr(0.0, 1.0, -1.0, 1.5, 48, 48);
    const auto bad = nonentropic_shock(0.0, 1.0, kBurgers, gr);
    CHECK(check_hyp_f(lift(bad, VelocityGrid(-1.5, 1.5, 24)), shifts).pass);
}

TEST_CASE("monotone profile densities satisfy hyp-f") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 32, 32);
    const auto rec = solve_fv(InitialData::sine(1.0, 1.0), kBurgers, g, Scheme::godunov, 0.45,
                              Boundary::periodic);
    const VelocityGrid vg(-2.0, 2.0, 24);
    const std::vector<std::pair<int, int>> shifts{{1, 0}, {0, 1}, {1, 2}};

    const auto tanh_density = monotone_profile_density(
        rec.field, [](double s) { return std::tanh(3.0 * s); }, vg);
    CHECK(check_hyp_f(tanh_density, shifts).pass);

    const auto const_density =
        monotone_profile_density(rec.field, [](double) { return 0.7; }, vg);
    CHECK(check_hyp_f(const_density, shifts).pass);

    // Heaviside profile with rho = u >= 0 reproduces the indicator 1_{v<=u}.
    const Grid2D gp(0.0, 1.0, -1.0, 1.0, 8, 8);
    const auto pos = constant_record(0.55, gp);
    const auto heavi = monotone_profile_density(
        pos.field, [](double s) { return s >= 0.0 ? 1.0 : 0.0; }, vg);
    for (int k = 0; k < vg.nv(); ++k) {
        const double v = vg.vcenter(k);
        CHECK(heavi.value(2, 2, k) == ((v <= 0.55) ? 1.0 : 0.0));
    }
}

TEST_CASE("adversarial random-sign density violates hyp-f") {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, 8, 8);
    const VelocityGrid vg(-1.0, 1.0, 16);
    const auto noise = SampledDensity::random_signs(g, vg, 42);
    const auto rep = check_hyp_f(noise, {{1, 0}, {0, 1}});
    CHECK_FALSE(rep.pass);
    CHECK(rep.worst < 0.0);
}

TEST_CASE("measure of a constant state is identically zero") {
    const Grid2D g(0.0, 1.0, -1.0, 1.0, 16, 16);
    const auto m = extract_measure(lift(constant_record(0.6, g), VelocityGrid(-1.5, 1.5, 24)),
                                   kBurgers);
    CHECK(m.total_variation() == 0.0);
    CHECK(m.closure_l1() == 0.0);
    CHECK_FALSE(m.closure_warning());
}

TEST_CASE("measure sign discrimination flips with shock orientation") {
    // Entropic shock (1,0): negative part -> 0 under refinement, positive
    // mass concentrates on the shock. Nonentropic (0,1): mirrored.
    double prev_neg = -1.0, prev_pos_bad = -1.0;
    double last_ratio_good = 0.0, last_ratio_bad = 0.0;
    for (int n : {128, 256, 512}) {
        const Grid2D g(0.0, 1.0, -1.0, 2.0, n, n);
        const VelocityGrid vg(-1.5, 1.5, 32);

        const auto good = extract_measure(lift(exact_riemann(1.0, 0.0, kBurgers, g), vg),
                                          kBurgers);
        const Box2D win{0.1, 0.9, -0.5, 1.5};
        const double pos = good.window_pos(win), negm = good.window_neg(win);
        CHECK(pos > 2.0 * negm);
        if (prev_neg >= 0.0) CHECK(negm <= 0.7 * prev_neg + 1e-14);
        prev_neg = negm;
        last_ratio_good = pos / std::max(negm, 1e-300);

        const auto bad = extract_measure(lift(nonentropic_shock(0.0, 1.0, kBurgers, g), vg),
                                         kBurgers);
        const double posb = bad.window_pos(win), negb = bad.window_neg(win);
        CHECK(negb > 2.0 * posb);
        if (prev_pos_bad >= 0.0) CHECK(posb <= 0.7 * prev_pos_bad + 1e-14);
        prev_pos_bad = posb;
        last_ratio_bad = negb / std::max(posb, 1e-300);
    }
    CHECK(last_ratio_good > 5.0);
    CHECK(last_ratio_bad > 5.0);
}

TEST_CASE("kinetic measure mass matches the shock dissipation rate") {
    // For the stationary burgers shock (1,0) at x = t/2 the kinetic measure
    // density integrates, per unit time, to ∫ (v - 1/2)(1_{[0,1]} - ...) =
    // the parabola mass 1/12 ... frozen via the entropy identity instead:
    // total m mass over a window equals the quadratic-entropy dissipation
    // with eta'' = 1.
    const Grid2D g(0.0, 1.0, -1.0, 2.0, 512, 512);
    const VelocityGrid vg(-1.5, 1.5, 64);
    const auto m = extract_measure(lift(exact_riemann(1.0, 0.0, kBurgers, g), vg), kBurgers);
    const Box2D win{0.2, 0.8, -0.5, 1.5};
    // sigma [eta] - [q] = (1/2)(-1/2) - (-1/3) = 1/12 per unit time.
    const double expected = 0.6 / 12.0;
    CHECK(m.window_net(win) == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("entropy production crosscheck converges to the measure route") {
    const EntropyPair pair = make_entropy_pair(EntropySpec::quadratic(), kBurgers, 1.5);
    double prev = -1.0;
    double magnitude = 0.0;
    for (int n : {128, 256, 512}) {
        const Grid2D g(0.0, 1.2, 0.0, 1.0, n, n);
        const auto rec = solve_fv(InitialData::sine(1.0, 1.0), kBurgers, g, Scheme::godunov,
                                  0.45, Boundary::periodic);
        const Cutoff chi = make_bump_cutoff({0.2, 1.1, 0.15, 0.85}, 0.5);
        const auto cc = entropy_production_crosscheck(rec, pair, kBurgers, chi,
                                                      VelocityGrid(-1.5, 1.5, 64));
        const double diff = std::abs(cc.difference());
        if (prev > 0.0) CHECK(diff <= 0.75 * prev);
        prev = diff;
        magnitude = std::abs(cc.direct);
    }
    CHECK(magnitude > 1e-3);  // the dissipation itself is not degenerate
    CHECK(prev <= 0.02 * magnitude);
}

TEST_CASE("closure defect shrinks under joint refinement") {
    double prev = -1.0;
    for (int n : {128, 256}) {
        const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
        const auto rec = solve_fv(InitialData::sine(1.0, 1.0), kBurgers, g, Scheme::godunov,
                                  0.45, Boundary::periodic);
        const auto m = extract_measure(lift(rec, VelocityGrid(-1.5, 1.5, 32)), kBurgers);
        if (prev > 0.0) CHECK(m.closure_l1() <= 0.7 * prev);
        prev = m.closure_l1();
    }
}

}  // TEST_SUITE
