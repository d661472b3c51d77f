#include "weylbill/curvilinear.hpp"

#include "weylbill/errors.hpp"
#include "weylbill/specfun.hpp"

#include <cmath>

namespace weylbill {

FlattenMap FlattenMap::from_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0 * kPi)) throw DomainError("FlattenMap: alpha must lie in (0, 2 pi)");
    return {alpha, kPi / alpha, alpha / kPi};
}

FlattenMap FlattenMap::from_gamma(double gamma) {
    if (!(gamma > 0.5)) throw DomainError("FlattenMap: gamma must be > 1/2");
    return from_alpha(kPi / gamma);
}

Vec2 flatten(const FlattenMap& map, double u, double v) {
    if (u == 0.0 && v == 0.0) throw Singular("flatten: the corner apex has no image direction");
    const double gv = map.gamma * v;
    const double r = std::hypot(u, gv);
    const double phi = map.gamma_bar * std::atan2(gv, u);
    return {r * std::cos(phi), r * std::sin(phi)};
}

double flatten_jacobian(const FlattenMap& map, double u, double v, double h) {
    const Vec2 du = (1.0 / (2.0 * h)) * (flatten(map, u + h, v) - flatten(map, u - h, v));
    const Vec2 dv = (1.0 / (2.0 * h)) * (flatten(map, u, v + h) - flatten(map, u, v - h));
    return cross(du, dv);
}

CornerCoeffForms corner_coeff_identity(double alpha) {
    if (!(alpha > 0.0 && alpha <= kPi)) throw DomainError("corner_coeff_identity: alpha must lie in (0, pi]");
    const auto m = FlattenMap::from_alpha(alpha);
    return {(kPi * kPi - alpha * alpha) / (24.0 * kPi * alpha), (m.gamma - m.gamma_bar) / 24.0,
            (m.gamma * m.gamma - 1.0) / (24.0 * m.gamma)};
}

namespace {

// Gaussian bump with a closed-form Laplacian.
constexpr Vec2 kBumpCentre{0.6, 0.5};

double bump(Vec2 p) {
    const Vec2 d = p - kBumpCentre;
    return std::exp(-dot(d, d));
}

double bump_laplacian(Vec2 p) {
    const Vec2 d = p - kBumpCentre;
    return (4.0 * dot(d, d) - 4.0) * bump(p);
}

// Fourth-order five-point second difference.
template <class F>
double second_difference(const F& f, double h) {
    return (-f(2.0 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2.0 * h)) / (12.0 * h * h);
}

} // namespace

LaplacianDefectScaling laplacian_defect_scaling(double u, double v, const std::vector<double>& gammas) {
    if (gammas.size() < 2) throw DomainError("laplacian_defect_scaling: need at least two gamma values");
    if (!(v > 0.0)) throw DomainError("laplacian_defect_scaling: v must be > 0");
    constexpr double h = 5e-3;
    LaplacianDefectScaling out;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double closest = INFINITY;
    for (double g : gammas) {
        if (g == 1.0) throw DomainError("laplacian_defect_scaling: gamma = 1 has no defect");
        const auto map = FlattenMap::from_gamma(g);
        auto pulled = [&](double du, double dv) { return bump(flatten(map, u + du, v + dv)); };
        const double flat = second_difference([&](double s) { return pulled(s, 0.0); }, h) +
                            second_difference([&](double s) { return pulled(0.0, s); }, h);
        const double defect = bump_laplacian(flatten(map, u, v)) - flat;
        out.gammas.push_back(g);
        out.defects.push_back(defect);
        const double x = std::log(std::abs(g * g - 1.0));
        const double y = std::log(std::abs(defect));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        if (std::abs(g - 1.0) < closest) {
            closest = std::abs(g - 1.0);
            out.proportionality = defect / (g * g - 1.0);
        }
    }
    const double n = static_cast<double>(gammas.size());
    out.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return out;
}

} // namespace weylbill
