#include "weylbill/folding.hpp"

#include "weylbill/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace weylbill {

// ---------------------------------------------------------------------------
// Exact arithmetic

namespace {

Rational make_reduced(__int128 num, __int128 den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr __int128 limit = INT64_MAX;
    if (num > limit || -num > limit || den > limit) throw NumericalError("Rational: overflow");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational operator+(Rational a, Rational b) {
    return make_reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                        static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(Rational a, Rational b) {
    return make_reduced(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double PiSeries::value() const {
    return c0.value() + c1.value() / kPi + c2.value() / (kPi * kPi);
}

std::string PiSeries::str() const {
    std::string out;
    auto term = [&out](Rational c, const char* suffix) {
        if (c.num() == 0) return;
        const Rational mag = c.num() < 0 ? -c : c;
        if (out.empty()) out = c.num() < 0 ? "-" : "";
        else out += c.num() < 0 ? " - " : " + ";
        out += *suffix && mag.den() != 1 ? "(" + mag.str() + ")" : mag.str();
        out += suffix;
    };
    term(c0, "");
    term(c1, "/pi");
    term(c2, "/pi^2");
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Signatures and the rectangular-corner ledger

std::string SignSignature::str() const {
    std::string s(4, '-');
    if (sx1) s[0] = '+';
    if (sy1) s[1] = '+';
    if (sx2) s[2] = '+';
    if (sy2) s[3] = '+';
    return s;
}

SignSignature SignSignature::parse(const std::string& text) {
    if (text.size() != 4) throw DomainError("signature must have four signs: '" + text + "'");
    std::array<bool, 4> b{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (text[i] != '+' && text[i] != '-') throw DomainError("signature sign must be '+' or '-': '" + text + "'");
        b[i] = text[i] == '+';
    }
    return {b[0], b[1], b[2], b[3]};
}

std::array<SignSignature, 16> SignSignature::all() {
    std::array<SignSignature, 16> out{};
    for (int i = 0; i < 16; ++i) {
        out[static_cast<std::size_t>(i)] = {(i & 8) != 0, (i & 4) != 0, (i & 2) != 0, (i & 1) != 0};
    }
    return out;
}

SignatureLedger signature_ledger(BoundaryCondition bc) {
    SignatureLedger ledger;
    ledger.bc = bc;
    ledger.derived_only = bc == BoundaryCondition::neumann;
    for (const auto& sig : SignSignature::all()) {
        PathContribution c;
        c.signature = sig;
        const int n = sig.bounce_count();
        // Both legs bounce on the same single side, once each.
        const bool same_side_pair = n == 2 && sig.sx1 == sig.sx2 && sig.sy1 == sig.sy2;
        switch (n) {
        case 0:
            c.area_units.c0 = 1;
            break;
        case 1:
            c.length_units.c0 = Rational(-1, 2);
            c.delta_units.c1 = Rational(1, 32);
            break;
        case 2:
            if (same_side_pair) {
                c.length_units.c0 = Rational(1, 2);
                c.delta_units.c2 = Rational(-1, 16);
            } else {
                c.delta_units.c0 = Rational(1, 64);
            }
            break;
        case 3:
            c.delta_units.c1 = Rational(-1, 32);
            break;
        default:
            c.delta_units.c2 = Rational(1, 16);
            break;
        }
        if (bc == BoundaryCondition::neumann && n % 2 == 1) {
            c.area_units = -c.area_units;
            c.length_units = -c.length_units;
            c.delta_units = -c.delta_units;
        }
        ledger.area_total = ledger.area_total + c.area_units;
        ledger.length_total = ledger.length_total + c.length_units;
        ledger.delta_total = ledger.delta_total + c.delta_units;
        ledger.entries.push_back(c);
    }
    return ledger;
}

// ---------------------------------------------------------------------------
// Folding

double free_heat_kernel(Vec2 a, Vec2 b, double tau) {
    if (!(tau > 0.0)) throw DomainError("free_heat_kernel: tau must be > 0");
    const Vec2 d = a - b;
    return std::exp(-dot(d, d) / (4.0 * tau)) / (4.0 * kPi * tau);
}

Kernel free_kernel(double tau) {
    if (!(tau > 0.0)) throw DomainError("free_kernel: tau must be > 0");
    return [tau](Vec2 a, Vec2 b) { return free_heat_kernel(a, b, tau); };
}

QuadResult<double> fold(const Kernel& k1, const Kernel& k2, Vec2 a, Vec2 b, const FoldRegion& region,
                        const QuadOptions& opt) {
    if (!(region.extent > 0.0) || !(region.theta_hi > region.theta_lo)) {
        throw DomainError("fold: empty intermediate region");
    }
    auto integrand = [&](double theta, double r) {
        const Vec2 p{r * std::cos(theta), r * std::sin(theta)};
        return r * k1(a, p) * k2(p, b);
    };
    auto r = integrate_2d(
        integrand, region.theta_lo, region.theta_hi, [](double) { return 0.0; },
        [&](double) { return region.extent; }, opt, opt);
    if (!r.converged) throw NonConvergence("fold: quadrature did not converge", r.value, r.error_estimate);
    return r;
}

namespace {

// 1 - z sqrt(pi) exp(z^2) erfc(z) for z >= 0.
double erfc_tail_defect(double z) {
    if (z < 5.0) return 1.0 - z * std::sqrt(kPi) * std::exp(z * z) * std::erfc(z);
    // Asymptotic series sum_{k>=1} (-1)^(k+1) (2k-1)!! / (2 z^2)^k.
    const double w = 1.0 / (2.0 * z * z);
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 12; ++k) {
        term *= (2.0 * k - 1.0) * w;
        sum += (k % 2 == 1 ? term : -term);
    }
    return sum;
}

} // namespace

double gaussian_radial_moment(double A, double B, double C) {
    if (!(A > 0.0)) throw DomainError("gaussian_radial_moment: A must be > 0");
    const double m = B / A;
    const double sa = std::sqrt(A);
    if (m >= 0.0) {
        // e^{-C} / (2A) + m sqrt(pi) / (2 sqrt A) e^{A m^2 - C} erfc(-m sqrt A)
        const double peak = A * m * m - C;
        return std::exp(-C) / (2.0 * A) + m * std::sqrt(kPi) / (2.0 * sa) * std::exp(peak) * std::erfc(-m * sa);
    }
    // Centre behind the origin: the two terms cancel to leading order.
    const double z = -m * sa;
    return std::exp(-C) / (2.0 * A) * erfc_tail_defect(z);
}

QuadResult<double> broken_path_propagator(double r, double theta1, double alpha, double tau, const QuadOptions& opt) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("broken_path_propagator: alpha must lie in (0, pi)");
    if (!(theta1 >= 0.0 && theta1 <= alpha)) throw DomainError("broken_path_propagator: theta1 must lie in [0, alpha]");
    if (!(r > 0.0)) throw DomainError("broken_path_propagator: r must be > 0");
    if (!(tau > 0.0)) throw DomainError("broken_path_propagator: tau must be > 0");
    const double theta2 = 2.0 * alpha + theta1;
    const double lo = std::max({0.0, theta1 - kPi, theta2 - kPi});
    const double hi = std::min({3.0 * alpha, theta1 + kPi, theta2 + kPi});
    QuadResult<double> out;
    if (!(hi > lo)) return out;
    const double A = 1.0 / (2.0 * tau);
    const double C = r * r / (2.0 * tau);
    auto integrand = [&](double theta0) {
        const double B = r * (std::cos(theta0 - theta1) + std::cos(theta0 - theta2)) / (4.0 * tau);
        return gaussian_radial_moment(A, B, C);
    };
    out = integrate(integrand, lo, hi, opt);
    const double pref = 1.0 / (16.0 * kPi * kPi * tau * tau);
    out.value *= pref;
    out.error_estimate *= pref;
    if (!out.converged) throw NonConvergence("broken_path_propagator: quadrature did not converge", out.value,
                                             out.error_estimate);
    return out;
}

double corner_orbit_heat_kernel(double r, double alpha, double T) {
    if (!(T > 0.0)) throw DomainError("corner_orbit_heat_kernel: T must be > 0");
    const double h = r * std::sin(alpha);
    return std::exp(-h * h / T) / (4.0 * kPi * T);
}

double broken_path_stationary(double r, double alpha, double tau) {
    if (!(tau > 0.0)) throw DomainError("broken_path_stationary: tau must be > 0");
    // Complete the square around the midpoint M of Q Q2:
    // |Q - Q'|^2 + |Q' - Q2|^2 = 2 |Q' - M|^2 + |Q - Q2|^2 / 2.
    const Vec2 q{r, 0.0};
    const Vec2 q2{r * std::cos(2.0 * alpha), r * std::sin(2.0 * alpha)};
    const Vec2 d = q - q2;
    const double gauss = 2.0 * kPi * tau; // int exp(-|Q' - M|^2 / (2 tau)) d^2Q'
    return gauss * std::exp(-dot(d, d) / (8.0 * tau)) / (16.0 * kPi * kPi * tau * tau);
}

// ---------------------------------------------------------------------------
// Corner constant from two-piece paths

std::vector<double> default_tau_ladder(double alpha) {
    const double s = std::sin(alpha);
    const double t0 = s * s / 40.0;
    return {t0, 0.5 * t0, 0.25 * t0};
}

namespace {

struct Image {
    double angle; // unwrapped polar angle
    double sign;  // Dirichlet: (-1)^bounces
};

// Two-piece heat trace over the wedge minus the pure-area part, for one tau.
class TwoPieceTrace {
public:
    TwoPieceTrace(double alpha, double tau, double radius, int grid)
        : alpha_(alpha), tau_(tau), radius_(radius),
          outer_{1e-300, std::pow(10.0, -(3.0 + grid)), 2000},
          inner_{1e-300, std::pow(10.0, -(4.0 + grid)), 2000} {}

    QuadResult<double> evaluate() const {
        auto f = [this](double theta, double r) { return r * point_density(r, theta); };
        auto rho = [this](double theta) {
            // Cuts perpendicular to each side at distance `radius`.
            const double phi = theta <= 0.5 * alpha_ ? theta : alpha_ - theta;
            return radius_ / std::cos(phi);
        };
        auto r = integrate_2d(f, 0.0, alpha_, [](double) { return 0.0; }, rho, outer_, outer_);
        const double pref = 1.0 / (4.0 * kPi * kPi * tau_ * tau_);
        r.value *= pref;
        r.error_estimate *= pref;
        return r;
    }

private:
    // Sum over all ordered image pairs except (direct, direct) of the
    // mediate-point integral over the wedge.
    double point_density(double r, double theta) const {
        const std::array<Image, 5> images = {{{theta, 1.0},
                                              {2.0 * alpha_ - theta, -1.0},
                                              {-theta, -1.0},
                                              {2.0 * alpha_ + theta, 1.0},
                                              {theta - 2.0 * alpha_, 1.0}}};
        struct Term {
            double lo, hi, weight, mx, my, c;
        };
        std::array<Term, 14> terms{};
        std::size_t n = 0;
        std::vector<double> cuts = {0.0, alpha_};
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::size_t j = i; j < images.size(); ++j) {
                if (i == 0 && j == 0) continue;
                const auto& a = images[i];
                const auto& b = images[j];
                const Vec2 pa{r * std::cos(a.angle), r * std::sin(a.angle)};
                const Vec2 pb{r * std::cos(b.angle), r * std::sin(b.angle)};
                const Vec2 mid = 0.5 * (pa + pb);
                const Vec2 d = pa - pb;
                Term t;
                // A straight leg from Q' to an image is a real path only if
                // it turns by less than pi around the corner.
                t.lo = std::max({0.0, a.angle - kPi, b.angle - kPi});
                t.hi = std::min({alpha_, a.angle + kPi, b.angle + kPi});
                t.weight = a.sign * b.sign * (i == j ? 1.0 : 2.0);
                t.mx = mid.x;
                t.my = mid.y;
                t.c = (dot(mid, mid) + 0.25 * dot(d, d)) / tau_;
                if (t.hi <= t.lo) continue;
                if (t.lo > 0.0) cuts.push_back(t.lo);
                if (t.hi < alpha_) cuts.push_back(t.hi);
                terms[n++] = t;
            }
        }
        std::sort(cuts.begin(), cuts.end());
        const double A = 1.0 / tau_;
        double total = 0.0;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const double lo = cuts[k];
            const double hi = cuts[k + 1];
            if (!(hi > lo)) continue;
            const double centre = 0.5 * (lo + hi);
            auto g = [&](double theta0) {
                const double ux = std::cos(theta0);
                const double uy = std::sin(theta0);
                double s = 0.0;
                for (std::size_t m = 0; m < n; ++m) {
                    const Term& t = terms[m];
                    if (centre < t.lo || centre > t.hi) continue;
                    s += t.weight * gaussian_radial_moment(A, (t.mx * ux + t.my * uy) / tau_, t.c);
                }
                return s;
            };
            total += integrate(g, lo, hi, inner_).value;
        }
        return total;
    }

    double alpha_;
    double tau_;
    double radius_;
    QuadOptions outer_;
    QuadOptions inner_;
};

// Per unit side length: single reflections plus the same-side double
// reflection, as produced by the same two-piece construction on a flat wall.
double side_density(double tau) {
    return (-1.0 + 1.0 / kPi) / (8.0 * std::sqrt(kPi * tau));
}

} // namespace

CornerConstantResult obtuse_corner_constant(double alpha, int grid, const std::vector<double>& tau_ladder, double tol) {
    if (!(alpha >= 0.5 * kPi - 1e-12 && alpha < kPi)) {
        throw DomainError("obtuse_corner_constant: alpha must lie in [pi/2, pi)");
    }
    if (grid < 0 || grid > 8) throw DomainError("obtuse_corner_constant: grid must lie in [0, 8]");
    const std::vector<double> ladder = tau_ladder.empty() ? default_tau_ladder(alpha) : tau_ladder;
    if (ladder.size() < 2) throw DomainError("obtuse_corner_constant: need at least two tau values");
    for (double t : ladder) {
        if (!(t > 0.0)) throw DomainError("obtuse_corner_constant: tau values must be > 0");
    }

    constexpr double radius = 1.0;
    CornerConstantResult out;
    out.alpha = alpha;
    out.grid = grid;
    out.weyl_reference = weyl_corner_term(alpha);
    std::vector<double> h;
    std::vector<double> values;
    for (double tau : ladder) {
        const auto z = TwoPieceTrace(alpha, tau, radius, grid).evaluate();
        CornerConstantSample s;
        s.tau = tau;
        s.constant = z.value - 2.0 * radius * side_density(tau);
        s.quadrature_error = z.error_estimate;
        out.samples.push_back(s);
        h.push_back(std::sqrt(tau));
        values.push_back(s.constant);
    }
    const auto [value, spread] = extrapolate_to_zero<double>(h, values);
    // Propagate quadrature errors through the extrapolation weights.
    double propagated = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        std::vector<double> unit(values.size(), 0.0);
        unit[j] = 1.0;
        propagated += std::abs(detail::neville_at_zero<double>(h, unit)) * out.samples[j].quadrature_error;
    }
    out.value = value;
    out.error_estimate = std::max(spread, propagated);
    if (out.error_estimate > tol) {
        throw NonConvergence("obtuse_corner_constant: error estimate above tolerance", out.value, out.error_estimate);
    }
    return out;
}

} // namespace weylbill
