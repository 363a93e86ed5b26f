#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sqm/jet.hpp"

using sqm::Jet2;

namespace {

Jet2 random_jet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

void check_close(const Jet2& a, const Jet2& b, double tol) {
    CHECK(a.v == doctest::Approx(b.v).epsilon(tol));
    CHECK(a.d1 == doctest::Approx(b.d1).epsilon(tol));
    CHECK(a.d2 == doctest::Approx(b.d2).epsilon(tol));
    CHECK(a.d11 == doctest::Approx(b.d11).epsilon(tol));
    CHECK(a.d12 == doctest::Approx(b.d12).epsilon(tol));
    CHECK(a.d22 == doctest::Approx(b.d22).epsilon(tol));
}

} // namespace

TEST_CASE("polynomial jets: s1*s1 at s1=3") {
    const Jet2 s1 = Jet2::var1(3.0);
    const Jet2 r = s1 * s1;
    CHECK(r.v == 9.0);
    CHECK(r.d1 == 6.0);
    CHECK(r.d11 == 2.0);
    CHECK(r.d2 == 0.0);
    CHECK(r.d12 == 0.0);
    CHECK(r.d22 == 0.0);
}

TEST_CASE("sin jet at the origin") {
    const Jet2 r = sin(Jet2::var1(0.0));
    CHECK(r.v == 0.0);
    CHECK(r.d1 == 1.0);
    CHECK(r.d11 == 0.0);
}

TEST_CASE("product rule is an exact slot identity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Jet2 f = random_jet(rng);
        const Jet2 g = random_jet(rng);
        const Jet2 p = f * g;
        CHECK(p.v == f.v * g.v);
        CHECK(p.d1 == f.d1 * g.v + f.v * g.d1);
        CHECK(p.d2 == f.d2 * g.v + f.v * g.d2);
        CHECK(p.d11 == f.d11 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d11);
        CHECK(p.d12 == f.d12 * g.v + f.d1 * g.d2 + f.d2 * g.d1 + f.v * g.d12);
        CHECK(p.d22 == f.d22 * g.v + 2.0 * f.d2 * g.d2 + f.v * g.d22);
    }
}

TEST_CASE("chain rule for exp matches the compose identity on random jets") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Jet2 g = random_jet(rng);
        const Jet2 r = exp(g);
        const double e = std::exp(g.v);
        CHECK(r.d1 == doctest::Approx(e * g.d1).epsilon(1e-14));
        CHECK(r.d11 == doctest::Approx(e * g.d1 * g.d1 + e * g.d11).epsilon(1e-14));
        CHECK(r.d12 == doctest::Approx(e * g.d1 * g.d2 + e * g.d12).epsilon(1e-14));
    }
}

TEST_CASE("division is multiplication by the reciprocal") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Jet2 f = random_jet(rng);
        Jet2 g = random_jet(rng);
        if (std::abs(g.v) < 0.2) g.v += 1.0;
        check_close((f / g) * g, f, 1e-12);
    }
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Jet2::constant(1.0) / Jet2::constant(0.0), sqm::EvalError);
}

TEST_CASE("log and sqrt police their domains") {
    CHECK_THROWS_AS(log(Jet2::constant(-1.0)), sqm::EvalError);
    CHECK_THROWS_AS(log(Jet2::constant(0.0)), sqm::EvalError);
    CHECK_THROWS_AS(sqrt(Jet2::constant(-1e-9)), sqm::EvalError);
}

TEST_CASE("integer powers allow negative bases, fractional ones do not") {
    const Jet2 x{-2.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    const Jet2 cube = pow(x, Jet2::constant(3.0));
    CHECK(cube.v == -8.0);
    CHECK(cube.d1 == 12.0);   // 3 x^2
    CHECK(cube.d11 == -12.0); // 6 x
    CHECK_THROWS_AS(pow(x, Jet2::constant(0.5)), sqm::EvalError);

    const Jet2 zero_pow = pow(x, Jet2::constant(0.0));
    CHECK(zero_pow.v == 1.0);
    CHECK(zero_pow.d1 == 0.0);
}

TEST_CASE("negative integer power = reciprocal power") {
    const Jet2 x{1.7, 1.0, 0.0, 0.0, 0.0, 0.0};
    check_close(pow(x, Jet2::constant(-2.0)), 1.0 / (x * x), 1e-14);
}

TEST_CASE("atan2 jets against the quotient identity") {
    // d/ds atan2(y, x) must match d/ds atan(y/x) where x > 0
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.3, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        Jet2 y = random_jet(rng);
        Jet2 x = random_jet(rng);
        x.v = u(rng);
        const Jet2 a = atan2(y, x);
        // atan(t), t = y/x: value and derivatives via existing verified ops
        const Jet2 t = y / x;
        const Jet2 expected =
            sqm::compose(t, std::atan(t.v), 1.0 / (1.0 + t.v * t.v),
                         -2.0 * t.v / ((1.0 + t.v * t.v) * (1.0 + t.v * t.v)));
        check_close(a, expected, 1e-11);
    }
}
