#include "oracles.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace weylbill;

TEST_CASE("J0 vanishes at its first zero") {
    const double z = static_cast<double>(oracle::first_j0_zero());
    CHECK(std::abs(z - 2.404825557695773) < 1e-14);
    CHECK(std::abs(bessel_j0y0(z).j0) < 1e-12);
    CHECK(std::abs(hankel1_0(z).real()) < 1e-12);
}

TEST_CASE("J0 tends to one near the origin") {
    CHECK(bessel_j0y0(1e-8).j0 == doctest::Approx(1.0).epsilon(1e-15));
    const auto h = hankel1_0(1e-8);
    CHECK(h.real() == doctest::Approx(1.0));
    CHECK(h.imag() < -10.0);
    CHECK(hankel1_0(1e-12).imag() < h.imag());
}

TEST_CASE("J0 and Y0 against a long-double series and libstdc++") {
    for (double x : {1e-6, 0.1, 0.5, 1.0, 2.0, 5.0, 7.9, 8.1, 10.0, 12.5, 15.0}) {
        CAPTURE(x);
        const auto ref = oracle::bessel_series(x);
        const auto v = bessel_j0y0(x);
        CHECK(std::abs(v.j0 - static_cast<double>(ref.j0)) < 1e-13);
        CHECK(std::abs(v.y0 - static_cast<double>(ref.y0)) < 1e-13 * std::max(1.0, std::abs(v.y0)));
    }
    for (double x : {20.0, 24.9, 25.1, 40.0, 100.0, 1e3, 1e5}) {
        CAPTURE(x);
        const auto v = bessel_j0y0(x);
        const double scale = std::sqrt(2.0 / (kPi * x));
        CHECK(std::abs(v.j0 - std::cyl_bessel_j(0.0, x)) < 1e-12 * scale);
        CHECK(std::abs(v.y0 - std::cyl_neumann(0.0, x)) < 1e-12 * scale);
    }
}

TEST_CASE("regimes agree at their crossover points") {
    for (double x : {8.0, 9.0}) {
        const auto s = detail::j0y0_series(x);
        const auto m = detail::j0y0_miller(x);
        CHECK(std::abs(s.j0 - m.j0) < 1e-13);
        CHECK(std::abs(s.y0 - m.y0) < 5e-13);
    }
    for (double x : {25.0, 30.0}) {
        const auto m = detail::j0y0_miller(x);
        const auto a = detail::j0y0_asymptotic(x);
        CHECK(std::abs(m.j0 - a.j0) < 1e-14);
        CHECK(std::abs(m.y0 - a.y0) < 1e-14);
    }
}

TEST_CASE("Wronskian J0 Y0' - J0' Y0 = 2 / (pi x)") {
    for (double x : {0.5, 1.0, 5.0, 20.0}) {
        const double h = 1e-4 * x;
        auto d = [&](auto pick) {
            return (-pick(x + 2 * h) + 8 * pick(x + h) - 8 * pick(x - h) + pick(x - 2 * h)) / (12 * h);
        };
        const auto v = bessel_j0y0(x);
        const double dj = d([](double t) { return bessel_j0y0(t).j0; });
        const double dy = d([](double t) { return bessel_j0y0(t).y0; });
        CHECK(v.j0 * dy - dj * v.y0 == doctest::Approx(2.0 / (kPi * x)).epsilon(1e-10));
    }
}

TEST_CASE("Hankel function against its leading asymptotic form") {
    const auto h10 = hankel1_0(10.0);
    CHECK(std::abs(h10) > 0.24);
    CHECK(std::abs(h10) < 0.26);
    CHECK(std::abs(h10) == doctest::Approx(std::sqrt(2.0 / (10.0 * kPi))).epsilon(0.01));
    for (double x : {10.5, 20.0, 50.0, 300.0}) {
        const Complex lead = std::sqrt(2.0 / (kPi * x)) * std::exp(kI * (x - kPi / 4.0));
        CHECK(std::abs(hankel1_0(x) - lead) / std::abs(lead) < 1.0 / x);
    }
}

TEST_CASE("integer-order J_n") {
    for (int n : {0, 1, 2, 5, 10, 30}) {
        for (double x : {0.3, 1.0, 7.0, 25.0, 60.0}) {
            CAPTURE(n);
            CAPTURE(x);
            CHECK(std::abs(bessel_jn(n, x) - std::cyl_bessel_j(static_cast<double>(n), x)) < 1e-13);
        }
    }
    const auto all = bessel_jn_all(12, 9.0);
    REQUIRE(all.size() == 13);
    for (int n = 0; n <= 12; ++n) CHECK(all[n] == doctest::Approx(std::cyl_bessel_j(double(n), 9.0)).epsilon(1e-12));
    CHECK(bessel_jn(3, 0.0) == 0.0);
}

TEST_CASE("gamma function anchors and recurrence") {
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_real(2.5) == doctest::Approx(1.5 * 0.5 * std::sqrt(kPi)).epsilon(1e-14));
    for (double x = 0.1; x < 30.0; x += 0.37) {
        CAPTURE(x);
        CHECK(gamma_real(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    }
}

TEST_CASE("domain errors at and below zero") {
    CHECK_THROWS_AS(bessel_j0y0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_j0y0(-1.0), DomainError);
    CHECK_THROWS_AS(hankel1_0(0.0), DomainError);
    CHECK_THROWS_AS(gamma_real(0.0), DomainError);
    CHECK_THROWS_AS(gamma_real(-2.5), DomainError);
}
