#include "weylbill/curvilinear.hpp"
#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"
#include "weylbill/weyl.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace weylbill;

namespace {

// Shoelace area of the image of [u0, u1] x [v0, v1] with n samples per edge.
double image_area(const FlattenMap& m, double u0, double u1, double v0, double v1, int n) {
    std::vector<Vec2> pts;
    auto edge = [&](double ua, double va, double ub, double vb) {
        for (int i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / n;
            pts.push_back(flatten(m, ua + t * (ub - ua), va + t * (vb - va)));
        }
    };
    edge(u0, v0, u1, v0);
    edge(u1, v0, u1, v1);
    edge(u1, v1, u0, v1);
    edge(u0, v1, u0, v0);
    double area = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) area += cross(pts[i], pts[(i + 1) % pts.size()]);
    return 0.5 * area;
}

} // namespace

TEST_CASE("flattening map basics") {
    const auto m = FlattenMap::from_alpha(2 * kPi / 3);
    CHECK(m.gamma * m.gamma_bar == doctest::Approx(1.0).epsilon(1e-15));
    const Vec2 p = flatten(m, 0.7, 0.0);
    CHECK(p.x == doctest::Approx(0.7));
    CHECK(std::abs(p.y) < 1e-16);

    const auto id = FlattenMap::from_alpha(kPi);
    for (auto [u, v] : {std::pair{0.3, 0.4}, std::pair{-1.0, 0.5}, std::pair{2.0, 1e-3}}) {
        const Vec2 q = flatten(id, u, v);
        CHECK(q.x == doctest::Approx(u).epsilon(1e-14));
        CHECK(q.y == doctest::Approx(v).epsilon(1e-14));
    }
    // The half-plane edge u < 0 lands on the far side of the wedge.
    const Vec2 far = flatten(m, -1.0, 0.0);
    CHECK(std::atan2(far.y, far.x) == doctest::Approx(m.alpha));
    CHECK_THROWS_AS(flatten(m, 0.0, 0.0), Singular);
    CHECK_THROWS_AS(FlattenMap::from_alpha(0.0), DomainError);
    CHECK_THROWS_AS(FlattenMap::from_gamma(0.4), DomainError);
    CHECK(FlattenMap::from_gamma(2.0).alpha == doctest::Approx(kPi / 2));
}

TEST_CASE("flattening map has unit Jacobian") {
    std::mt19937_64 rng(50);
    std::uniform_real_distribution<double> ua(-2.0, 2.0), va(0.05, 2.0), aa(0.3, 1.9 * kPi);
    for (int i = 0; i < 50; ++i) {
        const auto m = FlattenMap::from_alpha(aa(rng));
        const double u = ua(rng), v = va(rng);
        CHECK(std::abs(flatten_jacobian(m, u, v) - 1.0) < 1e-8);
    }
}

TEST_CASE("flattening map preserves area") {
    for (double alpha : {kPi / 3, 2 * kPi / 3, 1.4 * kPi}) {
        const auto m = FlattenMap::from_alpha(alpha);
        const double a = image_area(m, 0.5, 1.5, 0.2, 0.9, 20000);
        CHECK(std::abs(a - 0.7) < 1e-6);
    }
}

TEST_CASE("corner coefficient forms agree") {
    const auto half = corner_coeff_identity(kPi / 2);
    CHECK(half.lhs == doctest::Approx(1.0 / 16).epsilon(1e-14));
    CHECK(half.rhs1 == doctest::Approx(1.0 / 16).epsilon(1e-14));
    CHECK(half.rhs2 == doctest::Approx(1.0 / 16).epsilon(1e-14));
    const auto flat = corner_coeff_identity(kPi);
    CHECK(flat.lhs == 0.0);
    CHECK(std::abs(flat.rhs1) < 1e-16);
    CHECK(std::abs(flat.rhs2) < 1e-16);
    const auto third = corner_coeff_identity(kPi / 3);
    CHECK(third.lhs == doctest::Approx(1.0 / 9).epsilon(1e-14));
    std::mt19937_64 rng(60);
    std::uniform_real_distribution<double> aa(1e-3, kPi);
    for (int i = 0; i < 200; ++i) {
        const auto f = corner_coeff_identity(aa(rng));
        const double scale = std::max(1.0, std::abs(f.lhs));
        CHECK(std::abs(f.lhs - f.rhs1) < 1e-14 * scale);
        CHECK(std::abs(f.lhs - f.rhs2) < 1e-14 * scale);
    }
    CHECK_THROWS_AS(corner_coeff_identity(4.0), DomainError);
}

TEST_CASE("corner coefficient is odd under gamma -> 1/gamma") {
    for (double g : {0.6, 0.9, 1.3, 1.9}) {
        const auto a = FlattenMap::from_gamma(g);
        const auto b = FlattenMap::from_gamma(1.0 / g);
        CHECK((a.gamma - a.gamma_bar) / 24 == doctest::Approx(-(b.gamma - b.gamma_bar) / 24).epsilon(1e-14));
        CHECK(weyl_corner_term(a.alpha) == doctest::Approx(-weyl_corner_term(b.alpha)).epsilon(1e-14));
    }
}

TEST_CASE("Laplacian defect vanishes linearly in gamma^2 - 1") {
    const std::vector<double> gammas = {1.002, 1.004, 1.008, 1.016, 1.032};
    const auto s = laplacian_defect_scaling(1.0, 0.3, gammas);
    REQUIRE(s.defects.size() == gammas.size());
    CHECK(s.exponent == doctest::Approx(1.0).epsilon(0.05));
    CHECK(std::isfinite(s.proportionality));
    CHECK(std::abs(s.proportionality) > 1e-3);
    // Below one as well.
    const auto below = laplacian_defect_scaling(1.0, 0.3, {0.998, 0.996, 0.992, 0.984});
    CHECK(below.exponent == doctest::Approx(1.0).epsilon(0.05));
    CHECK_THROWS_AS(laplacian_defect_scaling(1.0, 0.3, {1.0, 1.1}), DomainError);
    CHECK_THROWS_AS(laplacian_defect_scaling(1.0, 0.3, {1.1}), DomainError);
}
