#include "oracles.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"
#include "weylbill/spectra.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace weylbill;

namespace {

SpectralExpansion rectangle_expansion(double a, double b, BoundaryCondition bc = BoundaryCondition::dirichlet) {
    GeometricMeasures m;
    m.area = a * b;
    m.perimeter = 2 * (a + b);
    for (int i = 0; i < 4; ++i) m.corners.push_back({{}, kPi / 2, 0.0, 0, 0});
    return weyl_expansion(m, bc);
}

SpectralExpansion disk_expansion(double R) {
    GeometricMeasures m;
    m.area = kPi * R * R;
    m.perimeter = 2 * kPi * R;
    m.curvature_integral = 2 * kPi;
    return weyl_expansion(m, BoundaryCondition::dirichlet);
}

} // namespace

TEST_CASE("rectangle spectra") {
    const auto sq = rectangle_spectrum(1.0, 1.0, 100.0);
    REQUIRE_FALSE(sq.eigenvalues.empty());
    CHECK(sq.eigenvalues.front() == doctest::Approx(2 * kPi * kPi).epsilon(1e-15));
    CHECK(std::is_sorted(sq.eigenvalues.begin(), sq.eigenvalues.end()));

    const auto r = rectangle_spectrum(1.0, 2.0, 30.0);
    const auto ref = oracle::rectangle_modes(1.0, 2.0, 30.0);
    REQUIRE(r.eigenvalues.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(r.eigenvalues[i] == doctest::Approx(ref[i]).epsilon(1e-15));
    CHECK(r.eigenvalues[0] == doctest::Approx(kPi * kPi * 1.25));
    CHECK(r.eigenvalues[1] == doctest::Approx(kPi * kPi * 2.0));

    const auto big = rectangle_spectrum(1.0, 2.0, 5000.0);
    const auto brute = oracle::rectangle_modes(1.0, 2.0, 5000.0);
    REQUIRE(big.eigenvalues.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(big.eigenvalues[i] == doctest::Approx(brute[i]).epsilon(1e-14));
    const auto e = rectangle_expansion(1.0, 2.0);
    const double weyl = smooth_counting(e, 5000.0);
    CHECK(std::abs(static_cast<double>(big.eigenvalues.size()) - weyl) < 0.05 * weyl);

    CHECK_THROWS_AS(rectangle_spectrum(1.0, 1.0, 10.0), EmptySpectrum);
    CHECK_THROWS_AS(rectangle_spectrum(-1.0, 1.0, 100.0), DomainError);
}

TEST_CASE("rectangle spectrum is symmetric in its sides") {
    const double b = std::cbrt(2.0);
    CHECK(rectangle_spectrum(1.0, b, 3000.0).eigenvalues == rectangle_spectrum(b, 1.0, 3000.0).eigenvalues);
}

TEST_CASE("counting function is a right-continuous staircase") {
    const auto sq = rectangle_spectrum(1.0, 1.0, 400.0);
    const double e0 = sq.eigenvalues.front();
    CHECK(sq.count_below(std::nextafter(e0, 0.0)) == 0);
    CHECK(sq.count_below(e0) == 1);
    // 5 pi^2 is doubly degenerate.
    const double e5 = sq.eigenvalues[1];
    CHECK(e5 == doctest::Approx(5 * kPi * kPi));
    CHECK(sq.count_below(e5) - sq.count_below(std::nextafter(e5, 0.0)) == 2);
    CHECK(sq.count_below(sq.emax) == sq.eigenvalues.size());
}

TEST_CASE("Bessel zeros") {
    const auto z0 = bessel_zeros(0, 20.0);
    REQUIRE(z0.size() >= 6);
    CHECK(z0[0] == doctest::Approx(static_cast<double>(oracle::first_j0_zero())).epsilon(1e-15));
    for (int m : {0, 1, 3, 10}) {
        const auto z = bessel_zeros(m, 60.0);
        CHECK(std::is_sorted(z.begin(), z.end()));
        for (double x : z) CHECK(std::abs(std::cyl_bessel_j(static_cast<double>(m), x)) < 1e-12);
        if (!z.empty()) CHECK(z.front() > m);
        // McMahon spacing: consecutive zeros are roughly pi apart.
        for (std::size_t i = 1; i < z.size(); ++i)
            if (z[i - 1] > 2.0 * m + 5.0) CHECK(std::abs(z[i] - z[i - 1] - kPi) < 0.6);
    }
    CHECK(bessel_zeros(30, 20.0).empty());
}

TEST_CASE("disk spectrum") {
    const auto d = disk_spectrum(1.0, 200.0);
    CHECK(d.eigenvalues.front() == doctest::Approx(5.783185962946784).epsilon(1e-14));
    // j_{1,1}^2 = 14.6819706..., twice.
    CHECK(d.eigenvalues[1] == doctest::Approx(14.681970642123893).epsilon(1e-13));
    CHECK(d.eigenvalues[2] == d.eigenvalues[1]);
    CHECK(d.eigenvalues[3] > d.eigenvalues[2]);
    const auto big = disk_spectrum(1.0, 4000.0);
    const double weyl = smooth_counting(disk_expansion(1.0), 4000.0);
    CHECK(std::abs(static_cast<double>(big.eigenvalues.size()) - weyl) < 0.02 * weyl);
    const auto half = disk_spectrum(0.5, 800.0);
    CHECK(half.eigenvalues.front() == doctest::Approx(4 * 5.783185962946784).epsilon(1e-14));
    CHECK_THROWS_AS(disk_spectrum(0.0, 10.0), DomainError);
}

TEST_CASE("staircase residual recovers the constant term") {
    SUBCASE("unit square") {
        const auto sp = rectangle_spectrum(1.0, 1.0, 5000.0);
        const auto r = staircase_residual(sp, rectangle_expansion(1.0, 1.0), 500.0, 5000.0);
        CHECK(std::abs(r.mean - 0.25) < 3 * r.stderr_ + 0.02);
        CHECK(r.eigenvalues_in_window > 100);
    }
    SUBCASE("incommensurate rectangle") {
        const double b = std::cbrt(2.0);
        const auto sp = rectangle_spectrum(1.0, b, 5000.0);
        const auto r = staircase_residual(sp, rectangle_expansion(1.0, b), 500.0, 5000.0);
        CHECK(std::abs(r.mean - 0.25) < 3 * r.stderr_);
        CHECK(std::abs(r.mean - 0.25) < 0.05);
    }
    SUBCASE("unit disk") {
        const auto sp = disk_spectrum(1.0, 4000.0);
        const auto r = staircase_residual(sp, disk_expansion(1.0), 500.0, 4000.0);
        CHECK(std::abs(r.mean - 1.0 / 6) < 3 * r.stderr_);
        CHECK(std::abs(r.mean - 1.0 / 6) < 0.05);
    }
}

TEST_CASE("residual with an empty expansion averages N itself") {
    const auto sp = rectangle_spectrum(1.0, 1.0, 3000.0);
    const auto r = staircase_residual(sp, SpectralExpansion{}, 1000.0, 3000.0, 2001, 2);
    double sum = 0.0;
    for (int i = 0; i < 2001; ++i) sum += static_cast<double>(sp.count_below(1000.0 + i * 1.0));
    CHECK(r.mean == doctest::Approx(sum / 2001).epsilon(1e-12));
}

TEST_CASE("residual mean is stable when the window doubles") {
    const double b = std::cbrt(2.0);
    const auto sp = rectangle_spectrum(1.0, b, 10000.0);
    const auto e = rectangle_expansion(1.0, b);
    const auto small = staircase_residual(sp, e, 1000.0, 5000.0);
    const auto large = staircase_residual(sp, e, 1000.0, 9000.0);
    CHECK(std::abs(small.mean - large.mean) < 3 * std::max(small.stderr_, large.stderr_));
}

TEST_CASE("staircase residual errors") {
    const auto sp = rectangle_spectrum(1.0, 1.0, 1000.0);
    const auto e = rectangle_expansion(1.0, 1.0);
    CHECK_THROWS_AS(staircase_residual(sp, e, 100.0, 200.0), InsufficientData);
    CHECK_THROWS_AS(staircase_residual(sp, e, 100.0, 2000.0), DomainError);
    CHECK_THROWS_AS(staircase_residual(sp, e, 500.0, 100.0), DomainError);
}
