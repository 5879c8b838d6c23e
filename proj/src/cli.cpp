#include "latkit/cli.hpp"

#include "latkit/bounds.hpp"
#include "latkit/errors.hpp"
#include "latkit/hyperbolic.hpp"
#include "latkit/io.hpp"
#include "latkit/lattice.hpp"
#include "latkit/minima.hpp"
#include "latkit/number_field.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace latkit {
namespace {

struct CommonOpts {
    std::string input_path;
    std::string output_path;   // empty: stdout
    double tol = 1e-9;
    std::uint64_t budget = 0;  // 0: fall back to LATKIT_BUDGET, then default
    std::uint64_t seed = 1;
    std::string format = "json";
    int max_word_len = 0;      // 0: take the value from the input file
    std::string svg_path;
};

std::optional<std::uint64_t> env_budget() {
    const char* env = std::getenv("LATKIT_BUDGET");
    if (env == nullptr || *env == '\0')
        return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw InputError("LATKIT_BUDGET: expected a positive integer");
    return static_cast<std::uint64_t>(v);
}

EnumerationBudget point_budget(const CommonOpts& o) {
    EnumerationBudget b;
    if (o.budget > 0)
        b.max_points = o.budget;
    else if (auto env = env_budget())
        b.max_points = *env;
    return b;
}

// Cap on distinct group elements for the dirichlet subcommand; the point
// budget is reused since both measure enumeration effort.
std::size_t group_budget(const CommonOpts& o) {
    if (o.budget > 0)
        return static_cast<std::size_t>(o.budget);
    if (auto env = env_budget())
        return static_cast<std::size_t>(*env);
    return 200'000;
}

void emit(const CommonOpts& o, const JsonValue& report) {
    const std::string body = o.format == "text" ? report.to_text() : report.dump();
    if (o.output_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.output_path, std::ios::binary);
    if (!out)
        throw InputError("cannot open output file: " + o.output_path);
    out << body;
}

JsonValue point_json(std::complex<double> z) {
    return JsonValue::real_array({z.real(), z.imag()});
}

JsonValue coords_json(const std::vector<long long>& v) {
    return JsonValue::integer_array(v);
}

int run_theta(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const HermitianModule m =
        parse_module(require_field(root, "input", "lattice"), root, "lattice");
    const ThetaResult r = theta_h0(m, o.tol, point_budget(o));

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("theta"));
    j.set("h0", JsonValue::real(r.value));
    j.set("tail_bound", JsonValue::real(r.tail_bound));
    j.set("enumeration_radius", JsonValue::real(r.enumeration_radius));
    j.set("points_counted", JsonValue::integer(static_cast<long long>(r.points_counted)));
    j.set("tolerance", JsonValue::real(o.tol));
    emit(o, j);
    return 0;
}

int run_chi(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const HermitianModule m =
        parse_module(require_field(root, "input", "lattice"), root, "lattice");

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("chi"));
    j.set("chi", JsonValue::real(euler_chi(m)));
    j.set("covolume", JsonValue::real(covolume(m)));
    j.set("torsion_order", JsonValue::integer(m.torsion_order));
    j.set("chi_ring", JsonValue::real(chi_ring(m.profile)));

    int code = 0;
    if (root.contains("arakelov_volumes")) {
        const auto& arr = root.at("arakelov_volumes");
        if (!arr.is_array())
            throw InputError("arakelov_volumes: expected an array of numbers");
        std::vector<double> volumes;
        for (std::size_t i = 0; i < arr.size(); ++i)
            volumes.push_back(
                as_number(arr[i], "arakelov_volumes[" + std::to_string(i) + "]"));
        const double constant = get_number_or(root, "input", "constant", 0.0);
        const BoundReport b = volume_chi_bound(m.profile, volumes, constant, o.tol);
        j.set("volume_bound", bound_report_json(b));
        if (b.verdict == "violated")
            code = 1;
    }
    emit(o, j);
    return code;
}

int run_rr_check(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const HermitianModule m =
        parse_module(require_field(root, "input", "lattice"), root, "lattice");
    const RrCheckReport r = rr_check(m, o.tol, point_budget(o));

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("rr-check"));
    j.set("h0", JsonValue::real(r.h0));
    j.set("h1", JsonValue::real(r.h1));
    j.set("chi", JsonValue::real(r.chi));
    j.set("residual", JsonValue::real(r.residual));
    j.set("certified_error", JsonValue::real(r.certified_error));
    j.set("holds", JsonValue::boolean(r.holds));
    j.set("tolerance", JsonValue::real(o.tol));
    emit(o, j);
    return r.holds ? 0 : 1;
}

int run_minima(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const HermitianModule m =
        parse_module(require_field(root, "input", "lattice"), root, "lattice");
    const MinimaReport r = successive_minima(m, point_budget(o));

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("minima"));
    j.set("lambdas", JsonValue::real_array(r.lambdas));
    JsonValue wits = JsonValue::array();
    for (const auto& w : r.witnesses)
        wits.push(coords_json(w));
    j.set("witnesses", std::move(wits));
    j.set("rank_o", JsonValue::integer(r.rank_o));
    j.set("independence_mode", JsonValue::text(r.independence_mode));
    emit(o, j);
    return 0;
}

JsonValue minkowski_json(const MinkowskiReport& r) {
    JsonValue j = JsonValue::object();
    j.set("lhs", JsonValue::real(r.lhs));
    j.set("rhs", JsonValue::real(r.rhs));
    j.set("constant", JsonValue::real(r.constant));
    j.set("lambdas", JsonValue::real_array(r.lambdas));
    j.set("violated", JsonValue::boolean(r.violated));
    return j;
}

// Deterministic integer basis draw: entries uniform in [-3, 3], redrawn
// until nonsingular.  Uses raw mt19937_64 words so the stream is identical
// on every platform.
Eigen::MatrixXd random_integer_basis(std::mt19937_64& rng, int rank) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Eigen::MatrixXd basis(rank, rank);
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < rank; ++k)
                basis(i, k) = static_cast<double>(
                    static_cast<long long>(rng() % 7) - 3);
        if (std::abs(basis.determinant()) > 0.5)
            return basis;
    }
    throw InputError("random_suite: failed to draw a nonsingular basis");
}

int run_minkowski(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("minkowski"));

    if (root.contains("lattice")) {
        const HermitianModule m = parse_module(root.at("lattice"), root, "lattice");
        const MinkowskiReport r = minkowski_check(m, point_budget(o));
        j.set("mode", JsonValue::text("single"));
        j.set("report", minkowski_json(r));
        emit(o, j);
        return r.violated ? 1 : 0;
    }
    if (!root.contains("random_suite"))
        throw InputError("input: expected a lattice or a random_suite block");

    const auto& suite = root.at("random_suite");
    if (!suite.is_object())
        throw InputError("random_suite: expected an object");
    const long long count = get_integer_or(suite, "random_suite", "count", 50);
    const long long max_rank = get_integer_or(suite, "random_suite", "max_rank", 5);
    if (count < 1 || count > 10'000)
        throw InputError("random_suite.count: expected an integer in [1, 10000]");
    if (max_rank < 1 || max_rank > 6)
        throw InputError("random_suite.max_rank: expected an integer in [1, 6]");

    std::mt19937_64 rng(o.seed);
    long long violations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    JsonValue draws = JsonValue::array();
    for (long long i = 0; i < count; ++i) {
        const int rank =
            1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
        HermitianModule m;
        m.rank_z = rank;
        m.basis = random_integer_basis(rng, rank);
        const MinkowskiReport r = minkowski_check(m, point_budget(o));
        if (r.violated)
            ++violations;
        min_slack = std::min(min_slack, r.rhs - r.lhs);
        JsonValue row = JsonValue::object();
        row.set("rank", JsonValue::integer(rank));
        row.set("lhs", JsonValue::real(r.lhs));
        row.set("rhs", JsonValue::real(r.rhs));
        row.set("slack", JsonValue::real(r.rhs - r.lhs));
        row.set("violated", JsonValue::boolean(r.violated));
        draws.push(std::move(row));
    }
    j.set("mode", JsonValue::text("random_suite"));
    j.set("seed", JsonValue::integer(static_cast<long long>(o.seed)));
    j.set("count", JsonValue::integer(count));
    j.set("max_rank", JsonValue::integer(max_rank));
    j.set("violations", JsonValue::integer(violations));
    j.set("min_slack", JsonValue::real(min_slack));
    j.set("draws", std::move(draws));
    emit(o, j);
    return violations > 0 ? 1 : 0;
}

int run_h0_bounds(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const HermitianModule m =
        parse_module(require_field(root, "input", "lattice"), root, "lattice");
    const ThetaResult theta = theta_h0(m, o.tol, point_budget(o));
    const H0BoundsReport r = h0_upper_bounds(m, theta.value, o.tol, point_budget(o));

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("h0-bounds"));
    j.set("h0", JsonValue::real(r.h0));
    j.set("tail_bound", JsonValue::real(theta.tail_bound));
    j.set("arithmetic_degree", JsonValue::real(r.arithmetic_degree));
    j.set("lambda_1", JsonValue::real(r.lambda_1));
    JsonValue bounds = JsonValue::array();
    bool any_failed = false;
    for (const auto& b : r.bounds) {
        JsonValue row = JsonValue::object();
        row.set("name", JsonValue::text(b.name));
        row.set("applicable", JsonValue::boolean(b.applicable));
        if (b.applicable) {
            row.set("bound", JsonValue::real(b.bound));
            row.set("holds", JsonValue::boolean(b.holds));
            if (!b.holds)
                any_failed = true;
        }
        bounds.push(std::move(row));
    }
    j.set("bounds", std::move(bounds));
    emit(o, j);
    return any_failed ? 1 : 0;
}

int run_hyp_dist(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const Point z = as_point(require_field(root, "input", "z"), "z");
    const Point w = as_point(require_field(root, "input", "w"), "w");

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("hyp-dist"));
    j.set("z", point_json(z));
    j.set("w", point_json(w));
    j.set("distance", JsonValue::real(hyp_distance(z, w)));
    emit(o, j);
    return 0;
}

JsonValue geodesic_json(const Geodesic& g) {
    JsonValue j = JsonValue::object();
    if (g.is_vertical) {
        j.set("type", JsonValue::text("vertical"));
        j.set("x0", JsonValue::real(g.x0));
    } else {
        j.set("type", JsonValue::text("semicircle"));
        j.set("center", JsonValue::real(g.center));
        j.set("radius", JsonValue::real(g.radius));
    }
    return j;
}

JsonValue mobius_json(const Mobius& m) {
    JsonValue rows = JsonValue::array();
    rows.push(JsonValue::real_array({m.a, m.b}));
    rows.push(JsonValue::real_array({m.c, m.d}));
    return rows;
}

int run_dirichlet(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const Point z = as_point(require_field(root, "input", "base_point"), "base_point");

    const auto& gens = require_field(root, "input", "generators");
    if (!gens.is_array() || gens.empty())
        throw InputError("generators: expected a nonempty array of 2x2 matrices");
    FuchsianGroup group;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        const Eigen::MatrixXd g = as_matrix(gens[i], where, 2, 2);
        group.generators.push_back(
            Mobius::normalized(g(0, 0), g(0, 1), g(1, 0), g(1, 1)));
    }

    int max_len = o.max_word_len;
    if (max_len == 0)
        max_len = static_cast<int>(
            get_integer_or(root, "input", "max_word_length", 3));
    if (max_len < 1)
        throw InputError("max_word_length: expected an integer >= 1");

    const std::size_t cap = group_budget(o);
    const DirichletData data = dirichlet_radius(group, z, max_len, cap);

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("dirichlet"));
    j.set("base_point", point_json(data.base_point));
    j.set("word_length", JsonValue::integer(data.word_length));
    j.set("group_elements",
          JsonValue::integer(static_cast<long long>(data.bisectors.size())));
    j.set("r_z", JsonValue::real(data.r_z));
    j.set("r_z_hyperbolic", JsonValue::real(data.r_z_hyperbolic));
    if (max_len >= 2) {
        const DirichletData prev = dirichlet_radius(group, z, max_len - 1, cap);
        j.set("previous_r_z", JsonValue::real(prev.r_z));
        j.set("stabilized",
              JsonValue::boolean(std::abs(data.r_z - prev.r_z) <=
                                 1e-12 * std::max(1.0, std::abs(prev.r_z))));
    }
    JsonValue bisectors = JsonValue::array();
    for (const auto& entry : data.bisectors) {
        JsonValue row = JsonValue::object();
        row.set("element", mobius_json(entry.element));
        row.set("mirror", point_json(entry.mirror));
        row.set("geodesic", geodesic_json(entry.geodesic));
        row.set("distance", JsonValue::real(entry.distance));
        bisectors.push(std::move(row));
    }
    j.set("bisectors", std::move(bisectors));
    if (!o.svg_path.empty()) {
        std::ofstream svg(o.svg_path, std::ios::binary);
        if (!svg)
            throw InputError("cannot open output file: " + o.svg_path);
        svg << dirichlet_svg(data);
        j.set("svg_path", JsonValue::text(o.svg_path));
    }
    emit(o, j);
    return 0;
}

int run_cp(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const SectionData s =
        parse_section(require_field(root, "input", "section"), "section");

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("cp"));
    j.set("genus", JsonValue::integer(s.genus));
    j.set("m_p", JsonValue::real(s.m_p));
    j.set("c_p", JsonValue::real(c_p(s)));
    if (root.contains("lambda_1")) {
        const double lambda_1 = as_number(root.at("lambda_1"), "lambda_1");
        const NumberFieldProfile profile = resolve_profile(root, root, "input");
        j.set("lambda_1", JsonValue::real(lambda_1));
        j.set("c_p_total", JsonValue::real(c_p_total(s, profile, lambda_1)));
    }
    emit(o, j);
    return 0;
}

int run_lower_bound(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const SectionData s =
        parse_section(require_field(root, "input", "section"), "section");
    const LowerBoundScan scan = scan_lower_bounds(s);
    const double cp_value = c_p(s);

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("lower-bound"));
    j.set("genus", JsonValue::integer(s.genus));
    j.set("c_p", JsonValue::real(cp_value));
    JsonValue orders = JsonValue::array();
    for (std::size_t k = 0; k < scan.bound.size(); ++k) {
        JsonValue row = JsonValue::object();
        row.set("order", JsonValue::integer(static_cast<long long>(k)));
        row.set("bound", JsonValue::real(scan.bound[k]));
        row.set("bound_disc", JsonValue::real(scan.bound_disc[k]));
        orders.push(std::move(row));
    }
    j.set("orders", std::move(orders));
    j.set("argmin", JsonValue::integer(scan.argmin));
    j.set("min_bound", JsonValue::real(scan.min_bound));
    j.set("matches_neg_c_p", JsonValue::boolean(scan.min_bound == -cp_value));

    // Per-place constants in both closed forms; generally unequal, which is
    // the documented discrepancy between the two disc normalizations.
    JsonValue constants = JsonValue::array();
    for (std::size_t v = 0; v < s.places.size(); ++v) {
        for (int k = 0; k <= 2 * s.genus - 2; ++k) {
            const OrderConstant c = order_constant(s.places[v].radius, k);
            JsonValue row = JsonValue::object();
            row.set("place", JsonValue::integer(static_cast<long long>(v)));
            row.set("order", JsonValue::integer(k));
            row.set("bound_form", JsonValue::real(c.bound_form));
            row.set("disc_form", JsonValue::real(c.disc_form));
            constants.push(std::move(row));
        }
    }
    j.set("constants", std::move(constants));
    emit(o, j);
    return 0;
}

int run_main2(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const auto& arr = require_field(root, "input", "lambdas");
    if (!arr.is_array() || arr.empty())
        throw InputError("lambdas: expected a nonempty array of numbers");
    std::vector<double> lambdas;
    for (std::size_t i = 0; i < arr.size(); ++i)
        lambdas.push_back(as_number(arr[i], "lambdas[" + std::to_string(i) + "]"));
    const int genus = static_cast<int>(get_integer(root, "input", "genus"));
    const double constant = get_number_or(root, "input", "constant", 0.0);
    std::optional<double> omega_omega;
    if (root.contains("omega_omega"))
        omega_omega = as_number(root.at("omega_omega"), "omega_omega");
    const NumberFieldProfile profile = resolve_profile(root, root, "input");

    const BoundReport b =
        self_intersection_bound(lambdas, profile, genus, constant, omega_omega, o.tol);

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("main2"));
    j.set("genus", JsonValue::integer(genus));
    j.set("lambdas", JsonValue::real_array(lambdas));
    j.set("bound", bound_report_json(b));
    emit(o, j);
    return b.verdict == "violated" ? 1 : 0;
}

int run_noether(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const double chi_surface = get_number(root, "input", "chi_surface");
    const int genus = static_cast<int>(get_integer(root, "input", "genus"));
    const auto& aj = require_field(root, "input", "analytic");
    require_field(aj, "analytic", "omega_omega");
    require_field(aj, "analytic", "b_g");
    const AnalyticInputs a = parse_analytic(aj, "analytic");

    const double residual = noether_residual(a, chi_surface);
    const bool holds = std::abs(residual) <= o.tol;
    const double floor = wilms_floor(genus);
    const std::vector<std::size_t> flags = wilms_violations(a, genus);

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("noether"));
    j.set("residual", JsonValue::real(residual));
    j.set("tolerance", JsonValue::real(o.tol));
    j.set("holds", JsonValue::boolean(holds));
    j.set("wilms_floor", JsonValue::real(floor));
    std::vector<long long> flag_indices(flags.begin(), flags.end());
    j.set("delta_flags", JsonValue::integer_array(flag_indices));
    emit(o, j);
    return holds ? 0 : 1;
}

int run_rr_surface(const CommonOpts& o) {
    const nlohmann::json root = load_json_file(o.input_path);
    const double chi_l = get_number(root, "input", "chi_l");
    const double chi_o = get_number(root, "input", "chi_o");
    const auto& aj = require_field(root, "input", "analytic");
    require_field(aj, "analytic", "l_l_omega_dual");
    require_field(aj, "analytic", "log_det_laplacian_l");
    require_field(aj, "analytic", "deg_det_l2");
    require_field(aj, "analytic", "l_f_omega");
    require_field(aj, "analytic", "omega_x_f_omega");
    const AnalyticInputs a = parse_analytic(aj, "analytic");

    const SurfaceResiduals r = rr_surface_residual(a, chi_l, chi_o);
    const bool rr_holds = std::abs(r.rr) <= o.tol;
    const bool com_holds = std::abs(r.com) <= o.tol;

    JsonValue j = JsonValue::object();
    j.set("command", JsonValue::text("rr-surface"));
    j.set("rr_residual", JsonValue::real(r.rr));
    j.set("com_residual", JsonValue::real(r.com));
    j.set("tolerance", JsonValue::real(o.tol));
    j.set("rr_holds", JsonValue::boolean(rr_holds));
    j.set("com_holds", JsonValue::boolean(com_holds));
    emit(o, j);
    return (rr_holds && com_holds) ? 0 : 1;
}

struct Subcommand {
    const char* name;
    const char* description;
    int (*run)(const CommonOpts&);
    bool svg = false;
};

const Subcommand kSubcommands[] = {
    {"theta", "h0 of a metrized module via the certified theta sum", run_theta},
    {"chi", "Euler characteristic, plus the volume bound when volumes are given",
     run_chi},
    {"rr-check", "verify h0 - h1 = chi with a certified error bar", run_rr_check},
    {"minima", "successive minima with independence witnesses", run_minima},
    {"minkowski", "second-theorem bound for one lattice or a random suite",
     run_minkowski},
    {"h0-bounds", "section-count upper bounds on their applicability domains",
     run_h0_bounds},
    {"hyp-dist", "hyperbolic distance between two upper-half-plane points",
     run_hyp_dist},
    {"dirichlet", "inscribed radius of a Dirichlet domain truncation",
     run_dirichlet, true},
    {"cp", "local correction constant c_P of a section datum", run_cp},
    {"lower-bound", "vanishing-order lower bounds and their minimum",
     run_lower_bound},
    {"main2", "self-intersection upper bound from successive minima", run_main2},
    {"noether", "Noether-type residual of supplied analytic data", run_noether},
    {"rr-surface", "surface Riemann-Roch and pullback residuals", run_rr_surface},
};

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"arithmetic lattice cohomology, minima and hyperbolic "
                 "domain toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    const Subcommand* selected = nullptr;
    for (const auto& sc : kSubcommands) {
        CLI::App* sub = app.add_subcommand(sc.name, sc.description);
        sub->add_option("--input", o.input_path, "input JSON file")->required();
        sub->add_option("--output", o.output_path,
                        "report file (default: standard output)");
        sub->add_option("--tol", o.tol, "numeric tolerance (default 1e-9)");
        sub->add_option("--budget", o.budget,
                        "enumeration budget in points (default: LATKIT_BUDGET "
                        "or 20000000)");
        sub->add_option("--seed", o.seed, "seed for randomized suites");
        sub->add_option("--max-word-len", o.max_word_len,
                        "group word length cap (dirichlet)");
        sub->add_option("--format", o.format, "report format")
            ->check(CLI::IsMember({"json", "text"}));
        if (sc.svg)
            sub->add_option("--svg", o.svg_path, "write an SVG sketch here");
        sub->callback([&selected, &sc] { selected = &sc; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (selected == nullptr)
            throw InputError("no subcommand selected");
        if (!(o.tol > 0.0))
            throw InputError("tolerance must be positive");
        return selected->run(o);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace latkit
