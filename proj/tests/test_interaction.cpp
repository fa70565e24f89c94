#include <doctest.h>

#include <cmath>

#include "besovclaw/besov.hpp"
#include "besovclaw/interaction.hpp"
#include "besovclaw/kinetic.hpp"
#include "besovclaw/solver.hpp"

using namespace besovclaw;

namespace {

BalanceFields zero_fields(int n) {
    const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
    auto z = SpaceTimeField::constant(g, 0.0);
    return BalanceFields{z, z, z, z, z, z};
}

BalanceFields scaled(const BalanceFields& bf, double lambda) {
    auto scale = [&](const SpaceTimeField& f) {
        std::vector<double> v(f.values());
        for (auto& x : v) x *= lambda;
        return SpaceTimeField(f.grid(), std::move(v));
    };
    return BalanceFields{scale(bf.A), scale(bf.B), scale(bf.C), bf.D, bf.E, bf.F};
}

}  // namespace

TEST_SUITE("interaction") {

TEST_CASE("zero fields give zero on both sides") {
    const auto bf = zero_fields(32);
    const auto rs = check_identity_space(bf);
    CHECK(rs.lhs == 0.0);
    CHECK(rs.rhs == 0.0);
    const auto rt = check_identity_time(bf);
    CHECK(rt.lhs == 0.0);
    CHECK(rt.rhs == 0.0);
}

TEST_CASE("manufactured bumps satisfy both identities under refinement") {
    double prev_s = -1.0, prev_t = -1.0;
    for (int n : {128, 256, 512}) {
        const auto bf = manufactured_bumps(n, n);
        const auto rs = check_identity_space(bf);
        const auto rt = check_identity_time(bf);
        CHECK(std::abs(rs.lhs) > 1e-4);  // the fixture is not degenerate
        if (prev_s > 0.0) CHECK(rs.residual <= prev_s / 1.6);
        if (prev_t > 0.0) CHECK(rt.residual <= prev_t / 1.6);
        prev_s = rs.residual;
        prev_t = rt.residual;
    }
    CHECK(prev_s <= 1.5e-3);
    CHECK(prev_t <= 1.5e-3);
}

TEST_CASE("antisymmetry fixture: coinciding pairs have vanishing lhs") {
    const Cutoff c1 = Cutoff::make_bump({0.2, 0.8, 0.2, 0.8}, 0.4);
    const Cutoff c2 = Cutoff::make_bump({0.25, 0.75, 0.25, 0.75}, 0.5);
    auto build = [&](int n) {
        const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
        auto A =
            SpaceTimeField::from_function(g, [&](double t, double x) { return c1.chi(t, x); });
        auto B =
            SpaceTimeField::from_function(g, [&](double t, double x) { return c2.chi(t, x); });
        auto C = SpaceTimeField::from_function(
            g, [&](double t, double x) { return c1.dchi_dt(t, x) + c2.dchi_dx(t, x); });
        return BalanceFields{A, B, C, A, B, C};
    };
    const BalanceFields bf = build(128);
    auto refined = [&] { return build(256); };
    const auto rs = check_identity_space(bf);
    CHECK(rs.lhs == 0.0);  // AE - DB == 0 exactly when the pairs coincide
    const auto rt = check_identity_time(bf);
    CHECK(rt.lhs == 0.0);
    // rhs carries only the one-cell shift of the discrete convention.
    const auto rs2 = check_identity_space(refined());
    const auto rt2 = check_identity_time(refined());
    CHECK(std::abs(rs2.rhs) <= 0.55 * std::abs(rs.rhs));
    CHECK(std::abs(rt2.rhs) <= 0.55 * std::abs(rt.rhs));
}

TEST_CASE("bilinearity in the first row of the system") {
    const auto bf = manufactured_bumps(128, 128);
    const double lambda = 3.5;
    const auto bs = scaled(bf, lambda);
    const auto r1 = check_identity_space(bf);
    const auto r2 = check_identity_space(bs);
    CHECK(r2.lhs == doctest::Approx(lambda * r1.lhs).epsilon(1e-12));
    CHECK(r2.rhs == doctest::Approx(lambda * r1.rhs).epsilon(1e-12));
}

TEST_CASE("support padding changes nothing beyond rounding") {
    // Same bumps embedded in a wider zero-padded domain: both sides of the
    // identity only move at quadrature resolution.
    const int n = 256;
    const auto base = manufactured_bumps(n, n);
    const Grid2D wide(0.0, 1.25, -0.25, 1.25, n + n / 4, n + n / 2);
    const Cutoff c1 = Cutoff::make_bump({0.15, 0.70, 0.20, 0.75}, 0.35);
    const Cutoff c2 = Cutoff::make_bump({0.25, 0.80, 0.15, 0.70}, 0.45);
    const Cutoff c3 = Cutoff::make_bump({0.20, 0.85, 0.30, 0.85}, 0.30);
    const Cutoff c4 = Cutoff::make_bump({0.30, 0.75, 0.25, 0.80}, 0.50);
    auto fld = [&](const std::function<double(double, double)>& f) {
        return SpaceTimeField::from_function(wide, f);
    };
    const BalanceFields padded{
        fld([&](double t, double x) { return c1.chi(t, x); }),
        fld([&](double t, double x) { return c2.chi(t, x); }),
        fld([&](double t, double x) { return c1.dchi_dt(t, x) + c2.dchi_dx(t, x); }),
        fld([&](double t, double x) { return c3.chi(t, x); }),
        fld([&](double t, double x) { return c4.chi(t, x); }),
        fld([&](double t, double x) { return c3.dchi_dt(t, x) + c4.dchi_dx(t, x); })};
    const auto r0 = check_identity_space(base);
    const auto r1 = check_identity_space(padded);
    // Same cell size, same fields, wider zero margin.
    CHECK(r1.lhs == doctest::Approx(r0.lhs).epsilon(1e-10));
    CHECK(r1.rhs == doctest::Approx(r0.rhs).epsilon(2e-4));
}

TEST_CASE("system residuals of the manufactured fixture shrink with the grid") {
    const auto coarse = manufactured_bumps(128, 128);
    const auto fine = manufactured_bumps(256, 256);
    CHECK(fine.system_residual_1() <= 0.6 * coarse.system_residual_1());
    CHECK(fine.system_residual_2() <= 0.6 * coarse.system_residual_2());
}

TEST_CASE("support escape is rejected") {
    const int n = 64;
    const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
    auto edge = SpaceTimeField::from_function(
        g, [](double t, double) { return t < 0.05 ? 1.0 : 0.0; });
    auto z = SpaceTimeField::constant(g, 0.0);
    const BalanceFields bf{edge, z, z, z, z, z};
    CHECK_THROWS_WITH((void)check_identity_space(bf), "support escape");
}

TEST_CASE("kinetic slice of a burgers solution closes the identity") {
    // A = chi D_x^h f(.,.,v*), B = a'(v*) A, C and F the literal discrete
    // residuals: the identity then holds up to the cumulative-sum
    // convention, which shrinks with the grid.
    double prev = -1.0;
    for (int n : {128, 256}) {
        const Grid2D g(0.0, 1.0, 0.0, 1.0, n, n);
        const auto rec = solve_fv(InitialData::sine(1.0, 1.0), FluxFunction::burgers(), g,
                                  Scheme::godunov, 0.45, Boundary::periodic);
        const VelocityGrid vg(-1.5, 1.5, 16);
        const auto kd = lift(rec, vg);
        const int kstar = 9;  // v* ~ -0.56
        const double aprime = FluxFunction::burgers().deriv(vg.vcenter(kstar));
        const Cutoff chi = make_bump_cutoff({0.2, 0.8, 0.2, 0.8}, 0.4);
        const int jshift = n / 32;  // fixed physical shift h = 1/32

        std::vector<double> av(g.size(), 0.0);
        for (int nn = 0; nn < g.nt(); ++nn)
            for (int ii = 0; ii + jshift < g.nx(); ++ii)
                av[static_cast<std::size_t>(nn) * g.nx() + ii] =
                    chi.chi(g.tcenter(nn), g.xcenter(ii)) *
                    (kd.value(nn, ii + jshift, kstar) - kd.value(nn, ii, kstar));
        const SpaceTimeField A(g, av);
        std::vector<double> bv(g.size());
        for (std::size_t q = 0; q < bv.size(); ++q) bv[q] = aprime * av[q];
        const SpaceTimeField B(g, bv);
        std::vector<double> cv(g.size(), 0.0);
        for (int nn = 0; nn + 1 < g.nt(); ++nn)
            for (int ii = 0; ii + 1 < g.nx(); ++ii)
                cv[static_cast<std::size_t>(nn) * g.nx() + ii] =
                    (A(nn + 1, ii) - A(nn, ii)) / g.dt() + (B(nn, ii + 1) - B(nn, ii)) / g.dx();
        const SpaceTimeField C(g, cv);
        const BalanceFields bf{A, B, C, A, B, C};
        const auto r = check_identity_space(bf);
        // lhs vanishes for coinciding pairs; the rhs residual tracks dx.
        CHECK(r.lhs == 0.0);
        if (prev >= 0.0) CHECK(r.residual <= 0.75 * prev + 1e-12);
        prev = r.residual;
    }
}

}  // TEST_SUITE
