#include "weylbill/cli.hpp"

#include "weylbill/birkhoff.hpp"
#include "weylbill/errors.hpp"
#include "weylbill/folding.hpp"
#include "weylbill/geometry.hpp"
#include "weylbill/orbit_terms.hpp"
#include "weylbill/spectra.hpp"
#include "weylbill/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace weylbill::cli {

namespace {

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Field {
    std::string name;
    Cell value;
    std::string units;
    std::string meaning;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Field> results;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> notes;

    void input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
    void result(std::string name, Cell v, std::string units, std::string meaning) {
        results.push_back({std::move(name), std::move(v), std::move(units), std::move(meaning)});
    }
};

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Cell optional_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

nlohmann::ordered_json to_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) return number(v);
                return v;
            } else return v;
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string to_csv(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, double>) return number(v);
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return csv_escape(v);
        },
        c);
}

void write_json(const Report& r, std::ostream& out) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
    j["results"] = nlohmann::ordered_json::object();
    for (const auto& f : r.results) {
        j["results"][f.name] = {{"value", to_json(f.value)}, {"units", f.units}, {"meaning", f.meaning}};
    }
    if (!r.columns.empty()) {
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : r.rows) {
            nlohmann::ordered_json o;
            for (std::size_t i = 0; i < r.columns.size(); ++i) o[r.columns[i]] = to_json(row[i]);
            j["rows"].push_back(o);
        }
    }
    j["notes"] = r.notes;
    out << j.dump(2) << '\n';
}

void write_csv(const Report& r, std::ostream& out) {
    if (!r.results.empty()) {
        out << "field,value,units,meaning\n";
        for (const auto& f : r.results) {
            out << csv_escape(f.name) << ',' << to_csv(f.value) << ',' << csv_escape(f.units) << ','
                << csv_escape(f.meaning) << '\n';
        }
    }
    if (!r.columns.empty()) {
        if (!r.results.empty()) out << '\n';
        for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_escape(r.columns[i]);
        out << '\n';
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << to_csv(row[i]);
            out << '\n';
        }
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("cannot read " + what + " from '" + s + "'");
    }
}

std::vector<double> parse_list(const std::string& s, char sep, const std::string& what) {
    std::vector<double> out;
    for (const auto& p : split(s, sep)) out.push_back(parse_double(p, what));
    return out;
}

Boundary load_geometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open geometry file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_geometry(ss.str());
}

// ---------------------------------------------------------------------------

struct Common {
    std::string format = "json";
    double tol = 1e-3;
    std::uint64_t seed = 0;
};

void echo_common(Report& r, const Common& c) {
    r.input("format", c.format);
    r.input("tol", number(c.tol));
    r.input("seed", std::to_string(c.seed));
}

Report cmd_weyl(const std::string& geometry, const std::string& bc_text, const Common& common) {
    const auto bc = parse_boundary_condition(bc_text);
    const Boundary b = load_geometry(geometry);
    const auto m = measures(b);
    const auto e = weyl_expansion(m, bc);
    Report r;
    r.command = "weyl";
    r.input("geometry", geometry);
    r.input("bc", to_string(bc));
    echo_common(r, common);
    r.result("area", m.area, "length^2", "enclosed area");
    r.result("perimeter", m.perimeter, "length", "boundary length");
    r.result("curvature_integral", m.curvature_integral, "1", "integral of wall curvature over smooth arcs");
    r.result("corner_count", static_cast<std::int64_t>(m.corners.size()), "1", "number of corners");
    r.result("const_coef", e.const_coef, "1/energy", "area term A/(4 pi) of the smooth density");
    r.result("inv_sqrt_coef", e.inv_sqrt_coef, "1/energy^(1/2)", "length term -+L/(8 pi) multiplying 1/sqrt(E)");
    r.result("delta_coef", e.delta_coef, "1", "coefficient of delta(E): curvature plus corner terms");
    r.result("curvature_part", e.breakdown.curvature_part, "1", "integral of c ds / (12 pi)");
    r.result("corner_part", e.breakdown.corner_part, "1", "sum of (pi/alpha - alpha/pi)/24 over corners");
    r.result("corner_part_unverified", e.corner_part_unverified, "flag",
             "corner part reuses the Dirichlet formula for Neumann walls");
    r.columns = {"corner", "x", "y", "alpha", "weyl_term"};
    for (std::size_t i = 0; i < m.corners.size(); ++i) {
        const auto& c = m.corners[i];
        r.rows.push_back({static_cast<std::int64_t>(i), c.position.x, c.position.y, c.alpha,
                          e.breakdown.per_corner[i]});
    }
    if (e.corner_part_unverified) r.notes.push_back("Neumann corner terms carry no independent check");
    return r;
}

Report cmd_staircase(const std::string& shape, double a, double b, double radius, std::optional<double> emax,
                     const std::optional<std::string>& window, std::size_t grid_points, std::size_t blocks,
                     const Common& common) {
    std::vector<Segment> segs;
    double e1 = 500.0, e2 = shape == "disk" ? 4000.0 : 5000.0;
    if (window) {
        const auto w = parse_list(*window, ':', "window");
        if (w.size() != 2) throw DomainError("window must be E1:E2");
        e1 = w[0];
        e2 = w[1];
    }
    const double top = emax.value_or(e2);
    Spectrum sp;
    if (shape == "rectangle") {
        sp = rectangle_spectrum(a, b, top);
        segs = {Segment::line({0, 0}, {a, 0}), Segment::line({a, 0}, {a, b}), Segment::line({a, b}, {0, b}),
                Segment::line({0, b}, {0, 0})};
    } else {
        sp = disk_spectrum(radius, top);
        segs = {Segment::arc({0, 0}, radius, 0.0, 2.0 * kPi, true)};
    }
    const auto e = weyl_expansion(measures(Boundary(segs)), BoundaryCondition::dirichlet);
    const auto s = staircase_residual(sp, e, e1, e2, grid_points, blocks);

    Report r;
    r.command = "staircase";
    r.input("shape", shape);
    if (shape == "rectangle") {
        r.input("a", number(a));
        r.input("b", number(b));
    } else {
        r.input("radius", number(radius));
    }
    r.input("emax", number(top));
    r.input("window", number(e1) + ":" + number(e2));
    r.input("grid_points", std::to_string(grid_points));
    r.input("blocks", std::to_string(blocks));
    echo_common(r, common);
    r.result("eigenvalue_count", static_cast<std::int64_t>(sp.eigenvalues.size()), "1", "eigenvalues up to emax");
    r.result("window_count", static_cast<std::int64_t>(s.eigenvalues_in_window), "1", "eigenvalues in the window");
    r.result("first_eigenvalue", sp.eigenvalues.front(), "energy", "ground state");
    r.result("mean", s.mean, "1", "window mean of N(E) minus area and length terms");
    r.result("stderr", s.stderr_, "1", "standard error from contiguous batch means");
    r.result("expected", e.delta_coef, "1", "smooth-expansion constant (curvature plus corners)");
    r.result("deviation", s.mean - e.delta_coef, "1", "mean minus expected");
    return r;
}

Report cmd_corner(const std::string& grid, const Common& common) {
    const auto g = parse_list(grid, ':', "alpha grid");
    if (g.size() != 3) throw DomainError("alpha grid must be MIN:MAX:STEPS");
    const double steps_d = g[2];
    if (!(steps_d >= 1.0) || steps_d != std::floor(steps_d)) throw DomainError("STEPS must be a positive integer");
    const auto steps = static_cast<std::int64_t>(steps_d);
    Report r;
    r.command = "corner";
    r.input("alpha_grid", grid);
    echo_common(r, common);
    r.columns = {"alpha", "weyl", "orbit", "edge_correction", "total_semiclassical", "ratio",
                 "total_two_orderings", "absent_reason"};
    for (std::int64_t i = 0; i < steps; ++i) {
        const double alpha = steps == 1 ? g[0] : g[0] + (g[1] - g[0]) * static_cast<double>(i) / (steps - 1.0);
        const auto c = corner_coeffs(alpha);
        Cell ratio, doubled;
        if (c.total_semiclassical) ratio = *c.total_semiclassical / c.weyl;
        if (c.orbit) doubled = 2.0 * *c.orbit + *c.edge_correction;
        r.rows.push_back({alpha, c.weyl, optional_cell(c.orbit), optional_cell(c.edge_correction),
                          optional_cell(c.total_semiclassical), ratio, doubled,
                          c.absent_reason.empty() ? Cell{} : Cell{c.absent_reason}});
    }
    r.notes.push_back("weyl = (pi/alpha - alpha/pi)/24; total_semiclassical = orbit + edge_correction");
    r.notes.push_back("total_two_orderings counts both choices of the first side hit; it is never applied implicitly");
    return r;
}

Report cmd_ledger(const std::string& bc_text, const Common& common) {
    const auto bc = parse_boundary_condition(bc_text);
    const auto l = signature_ledger(bc);
    Report r;
    r.command = "ledger";
    r.input("bc", to_string(bc));
    echo_common(r, common);
    r.result("area_total", l.area_total.value(), "A/(4 pi)", "area term summed over signatures, exact " + l.area_total.str());
    r.result("length_total", l.length_total.value(), "L/(8 pi sqrt(E))",
             "length term summed over signatures, exact " + l.length_total.str());
    r.result("delta_total", l.delta_total.value(), "delta(E)",
             "corner coefficient summed over signatures, exact " + l.delta_total.str());
    r.result("derived_only", l.derived_only, "flag", "entries follow from reflection parity only");
    r.columns = {"signature", "bounces", "area_units", "length_units", "delta_units", "area_value", "length_value",
                 "delta_value"};
    for (const auto& e : l.entries) {
        r.rows.push_back({e.signature.str(), static_cast<std::int64_t>(e.signature.bounce_count()),
                          e.area_units.str(), e.length_units.str(), e.delta_units.str(), e.area_units.value(),
                          e.length_units.value(), e.delta_units.value()});
    }
    r.rows.push_back({std::string("total"), Cell{}, l.area_total.str(), l.length_total.str(), l.delta_total.str(),
                      l.area_total.value(), l.length_total.value(), l.delta_total.value()});
    return r;
}

Report cmd_fold(double alpha, const std::optional<std::string>& tau_list, int grid, double radius,
                std::optional<double> theta1, const Common& common) {
    if (!(alpha > 0.0 && alpha < kPi)) throw DomainError("alpha must lie in (0, pi)");
    const std::vector<double> taus = tau_list ? parse_list(*tau_list, ',', "tau list") : default_tau_ladder(alpha);
    const double th = theta1.value_or(0.5 * alpha);
    Report r;
    r.command = "fold";
    r.input("alpha", number(alpha));
    std::string tl;
    for (double t : taus) tl += (tl.empty() ? "" : ",") + number(t);
    r.input("tau_list", tl);
    r.input("grid", std::to_string(grid));
    r.input("r", number(radius));
    r.input("theta1", number(th));
    echo_common(r, common);

    std::optional<CornerConstantResult> constant;
    if (alpha >= 0.5 * kPi) {
        constant = obtuse_corner_constant(alpha, grid, taus, common.tol);
        r.result("corner_constant", constant->value, "1", "delta(E) coefficient from two-piece paths");
        r.result("error_estimate", constant->error_estimate, "1", "extrapolation spread or propagated quadrature error");
        r.result("weyl_reference", constant->weyl_reference, "1", "(pi/alpha - alpha/pi)/24");
    } else {
        r.notes.push_back("alpha < pi/2: closed double-reflection orbits exist; see the corner command");
    }
    r.columns = {"tau", "broken_path", "half_corner_kernel", "stationary", "ratio_to_stationary", "two_orderings",
                 "constant_sample", "quadrature_error"};
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const double tau = taus[i];
        const auto bp = broken_path_propagator(radius, th, alpha, tau);
        const double stat = broken_path_stationary(radius, alpha, tau);
        std::vector<Cell> row = {tau, bp.value, 0.5 * corner_orbit_heat_kernel(radius, alpha, 2.0 * tau), stat,
                                 bp.value / stat, 2.0 * bp.value};
        if (constant) {
            row.push_back(constant->samples[i].constant);
            row.push_back(constant->samples[i].quadrature_error);
        } else {
            row.push_back(Cell{});
            row.push_back(Cell{});
        }
        r.rows.push_back(std::move(row));
    }
    r.notes.push_back("imaginary time: every kernel is a heat kernel at the listed tau per leg");
    r.notes.push_back("two_orderings doubles the broken path for both choices of the first side hit");
    return r;
}

Report cmd_monodromy(const std::string& geometry, const std::string& start, int bounces, double step,
                     const Common& common) {
    const Boundary b = load_geometry(geometry);
    const auto sv = parse_list(start, ',', "start point");
    if (sv.size() != 2) throw DomainError("start must be S,V");
    if (bounces < 1) throw DomainError("bounces must be >= 1");
    Report r;
    r.command = "monodromy";
    r.input("geometry", geometry);
    r.input("start", start);
    r.input("bounces", std::to_string(bounces));
    r.input("fd_step", number(step));
    echo_common(r, common);

    BirkhoffCoord p{b.wrap(sv[0]), sv[1]};
    const BirkhoffCoord p0 = p;
    Mat2 product;
    OrbitSpec orbit;
    orbit.bounces.push_back({p.s, p.v_perp(), frame_at(b, p.s).curvature});
    r.columns = {"bounce", "s", "v", "chord", "v_perp_from", "v_perp_to"};
    for (int i = 0; i < bounces; ++i) {
        const auto st = trace_bounce(b, p);
        product = linearized_bounce_map(st.v_perp_from, st.v_perp_to, st.chord, st.curvature_from, st.curvature_to) *
                  product;
        orbit.chords.push_back(st.chord);
        orbit.bounces.push_back({st.next.s, st.v_perp_to, st.curvature_to});
        r.rows.push_back({static_cast<std::int64_t>(i + 1), st.next.s, st.next.v, st.chord, st.v_perp_from,
                          st.v_perp_to});
        p = st.next;
    }
    // The departing normal component at each bounce equals the arriving one.
    const Mat2 transverse = monodromy(orbit);
    const Mat2 lin = bounce_map_jacobian(b, p0);
    const Mat2 fd = bounce_map_jacobian_fd(b, p0, step);
    const double scale = std::max({std::abs(lin.m11), std::abs(lin.m12), std::abs(lin.m21), std::abs(lin.m22)});

    auto put = [&r](const std::string& prefix, const Mat2& m, const std::string& meaning) {
        r.result(prefix + "_11", m.m11, "1", meaning);
        r.result(prefix + "_12", m.m12, "1", meaning);
        r.result(prefix + "_21", m.m21, "1", meaning);
        r.result(prefix + "_22", m.m22, "1", meaning);
    };
    put("birkhoff", product, "product of linearized bounce maps in (s, v)");
    r.result("birkhoff_det", product.det(), "1", "determinant (area preservation)");
    r.result("birkhoff_trace", product.trace(), "1", "trace");
    put("transverse", transverse, "transverse monodromy between the first and last bounce");
    r.result("transverse_det", transverse.det(), "1", "determinant");
    r.result("first_map_fd_rel_diff", max_abs_diff(lin, fd) / scale, "1",
             "finite-difference Jacobian of the first bounce versus its linearization");
    return r;
}

Report cmd_green(double y, double k, const Common& common) {
    const auto t = green_time_integral(y, k);
    const Complex h = single_reflection_green(y, k);
    const Complex s = green_stationary(y, k);
    Report r;
    r.command = "green";
    r.input("y", number(y));
    r.input("k", number(k));
    echo_common(r, common);
    r.result("time_integral_re", t.value.real(), "1", "regulated time integral of the single-reflection propagator, real part");
    r.result("time_integral_im", t.value.imag(), "1", "regulated time integral, imaginary part");
    r.result("time_integral_error", t.error_estimate, "1", "extrapolation error estimate");
    r.result("hankel_re", h.real(), "1", "-(1/4i) H0(2ky), real part");
    r.result("hankel_im", h.imag(), "1", "-(1/4i) H0(2ky), imaginary part");
    r.result("stationary_re", s.real(), "1", "stationary-phase Green's function, real part");
    r.result("stationary_im", s.imag(), "1", "stationary-phase Green's function, imaginary part");
    r.result("time_vs_hankel_abs_diff", std::abs(t.value - h), "1", "|time integral - Hankel form|");
    r.result("stationary_magnitude_defect", std::abs(s) / std::abs(h) - 1.0, "1", "|stationary| / |hankel| - 1");
    r.result("ky", k * y, "1", "dimensionless distance from the wall");
    r.result("stationary_density_ratio", stationary_length_density(1.0, k * k) / length_term_density(1.0, k * k), "1",
             "length density from the stationary-phase form over -L/(8 pi sqrt(E))");
    if (t.error_estimate > common.tol) {
        throw NonConvergence("green: time integral error estimate above --tol", std::abs(t.value), t.error_estimate);
    }
    return r;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smooth spectral density of planar billiards: Weyl terms, orbit sums, folding"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol", common.tol, "Tolerance for convergence checks")->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "Seed for randomized checks");
    };

    std::string geometry, bc = "dirichlet";
    auto* weyl = app.add_subcommand("weyl", "Smooth-expansion coefficients of a geometry file");
    weyl->add_option("--geometry", geometry, "billiard v1 file")->required();
    weyl->add_option("--bc", bc, "Boundary condition")->check(CLI::IsMember({"dirichlet", "neumann"}));
    add_common(weyl);

    std::string shape;
    double a = 1.0, b = std::cbrt(2.0), radius = 1.0;
    std::optional<double> emax;
    std::optional<std::string> window;
    std::size_t grid_points = 200000, blocks = 20;
    auto* stair = app.add_subcommand("staircase", "Residual of the exact counting function");
    stair->add_option("--shape", shape, "rectangle or disk")->required()->check(CLI::IsMember({"rectangle", "disk"}));
    stair->add_option("--a", a, "Rectangle side a");
    stair->add_option("--b", b, "Rectangle side b");
    stair->add_option("--radius", radius, "Disk radius");
    stair->add_option("--emax", emax, "Spectrum cutoff (default: window top)");
    stair->add_option("--window", window, "E1:E2");
    stair->add_option("--grid-points", grid_points, "Energy grid size");
    stair->add_option("--blocks", blocks, "Batches for the standard error");
    add_common(stair);

    std::string alpha_grid;
    auto* corner = app.add_subcommand("corner", "Corner coefficient table");
    corner->add_option("--alpha-grid", alpha_grid, "MIN:MAX:STEPS")->required();
    add_common(corner);

    auto* ledger = app.add_subcommand("ledger", "Rectangular-corner signature table");
    ledger->add_option("--bc", bc, "Boundary condition")->check(CLI::IsMember({"dirichlet", "neumann"}));
    add_common(ledger);

    double alpha = 0.0;
    std::optional<std::string> tau_list;
    int grid = 3;
    double fold_r = 1.0;
    std::optional<double> theta1;
    auto* fold_cmd = app.add_subcommand("fold", "Broken-path propagator and two-piece corner constant");
    fold_cmd->add_option("--alpha", alpha, "Wedge angle")->required();
    fold_cmd->add_option("--tau-list", tau_list, "Comma-separated imaginary times");
    fold_cmd->add_option("--grid", grid, "Quadrature refinement level")->check(CLI::Range(0, 8));
    fold_cmd->add_option("--r", fold_r, "Radius of Q for the broken path");
    fold_cmd->add_option("--theta1", theta1, "Polar angle of Q (default alpha/2)");
    add_common(fold_cmd);

    std::string start;
    int bounces = 1;
    double fd_step = 1e-6;
    auto* mono = app.add_subcommand("monodromy", "Linearized maps along a traced trajectory");
    mono->add_option("--geometry", geometry, "billiard v1 file")->required();
    mono->add_option("--start", start, "S,V")->required();
    mono->add_option("--bounces", bounces, "Number of bounces")->check(CLI::PositiveNumber);
    mono->add_option("--fd-step", fd_step, "Finite-difference step")->check(CLI::PositiveNumber);
    add_common(mono);

    double y = 0.0, k = 0.0;
    auto* green = app.add_subcommand("green", "Single-reflection Green's function three ways");
    green->add_option("--y", y, "Distance from the wall")->required()->check(CLI::PositiveNumber);
    green->add_option("--k", k, "Wavenumber")->required()->check(CLI::PositiveNumber);
    add_common(green);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        Report r;
        if (*weyl) r = cmd_weyl(geometry, bc, common);
        else if (*stair) r = cmd_staircase(shape, a, b, radius, emax, window, grid_points, blocks, common);
        else if (*corner) r = cmd_corner(alpha_grid, common);
        else if (*ledger) r = cmd_ledger(bc, common);
        else if (*fold_cmd) r = cmd_fold(alpha, tau_list, grid, fold_r, theta1, common);
        else if (*mono) r = cmd_monodromy(geometry, start, bounces, fd_step, common);
        else r = cmd_green(y, k, common);
        if (common.format == "csv") write_csv(r, out);
        else write_json(r, out);
        return ok;
    } catch (const NonConvergence& e) {
        err << "non-convergence: " << e.what() << " (best " << number(e.best()) << ", error estimate "
            << number(e.error_estimate()) << ")\n";
        return non_convergence;
    } catch (const GeometryError& e) {
        err << "geometry error: " << e.what() << '\n';
        return ExitCode::geometry;
    } catch (const CornerHit& e) {
        err << "geometry error: " << e.what() << '\n';
        return ExitCode::geometry;
    } catch (const RayEscape& e) {
        err << "geometry error: " << e.what() << '\n';
        return ExitCode::geometry;
    } catch (const GrazingIncidence& e) {
        err << "geometry error: " << e.what() << '\n';
        return ExitCode::geometry;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const InsufficientData& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const EmptySpectrum& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& s : args) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace weylbill::cli
