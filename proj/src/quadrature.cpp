#include "weylbill/quadrature.hpp"

namespace weylbill {

QuadratureResult integrate_damped_ray(const std::function<Complex(double, double)>& f, double a,
                                      const std::function<double(double)>& cutoff, const DampingLadder& ladder,
                                      const QuadOptions& opt) {
    std::vector<double> eps;
    std::vector<Complex> values;
    QuadratureResult out;
    double worst = 0.0;
    double e = ladder.eps0;
    for (int j = 0; j < ladder.levels; ++j, e *= ladder.ratio) {
        const double eps_j = e;
        const auto r = integrate([&](double z) { return f(z, eps_j); }, a, a + cutoff(eps_j), opt);
        eps.push_back(eps_j);
        values.push_back(r.value);
        worst = std::max(worst, r.error_estimate);
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    }
    const auto [value, spread] = extrapolate_to_zero<Complex>(eps, values);
    out.value = value;
    out.error_estimate = spread + worst;
    return out;
}

} // namespace weylbill
