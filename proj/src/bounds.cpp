#include "latkit/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared accumulation shape for c_p and the order-(2g-2) lower bound: when
// the min caps are inactive the two are the same float expression, so that
// min-over-orders == -c_p holds bit for bit.
double capped_sum(const SectionData& s) {
    const double g = static_cast<double>(s.genus);
    double total = std::min(0.0, (2.0 * g - 1.0) * std::log(s.m_p));
    for (const auto& pl : s.places) {
        const double k = 4.0 * g - 3.0;
        total += (pl.epsilon / 2.0) *
                 (std::log(2.0) + std::min(0.0, k * std::log(pl.radius)) - std::log(k));
    }
    return total;
}

} // namespace

void require_valid_section(const SectionData& s) {
    if (s.genus < 2)
        throw InputError("genus must be >= 2");
    if (!(s.m_p > 0.0))
        throw InputError("m_P must be positive");
    if (s.places.empty())
        throw InputError("at least one infinite place required");
    for (const auto& pl : s.places) {
        if (pl.epsilon != 1.0 && pl.epsilon != 2.0)
            throw InputError("place epsilon must be 1 (real) or 2 (complex)");
        if (!(pl.radius > 0.0))
            throw InputError("place radius must be positive");
    }
}

void require_valid_analytic(const AnalyticInputs& a) {
    for (const auto& pl : a.infinite_places) {
        if (pl.epsilon != 1.0 && pl.epsilon != 2.0)
            throw InputError("place epsilon must be 1 (real) or 2 (complex)");
        if (!(pl.arakelov_volume > 0.0))
            throw InputError("arakelov_volume must be positive");
    }
    for (const auto& pl : a.finite_places) {
        if (pl.residue_size < 2)
            throw InputError("finite place q_v >= 2");
        if (!(pl.delta >= 0.0))
            throw InputError("delta_v must be nonnegative");
    }
}

double c_p(const SectionData& s) {
    require_valid_section(s);
    return -capped_sum(s);
}

double omega_l2_lower_bound(const SectionData& s, int order) {
    require_valid_section(s);
    if (order < 0 || order > 2 * s.genus - 2)
        throw InputError("vanishing order out of range [0, 2g-2]");
    double total = (static_cast<double>(order) + 1.0) * std::log(s.m_p);
    for (const auto& pl : s.places) {
        const double k = 2.0 * static_cast<double>(order) + 1.0;
        total += (pl.epsilon / 2.0) *
                 (std::log(2.0) + k * std::log(pl.radius) - std::log(k));
    }
    return total;
}

double omega_l2_lower_bound_disc(const SectionData& s, int order) {
    require_valid_section(s);
    if (order < 0 || order > 2 * s.genus - 2)
        throw InputError("vanishing order out of range [0, 2g-2]");
    double total = (static_cast<double>(order) + 1.0) * std::log(s.m_p);
    for (const auto& pl : s.places) {
        total += (pl.epsilon / 2.0) *
                 ((2.0 * order + 2.0) * std::log(pl.radius) - std::log(order + 1.0));
    }
    return total;
}

OrderConstant order_constant(double radius, int order) {
    if (!(radius > 0.0))
        throw InputError("place radius must be positive");
    if (order < 0)
        throw InputError("vanishing order must be nonnegative");
    OrderConstant c;
    c.bound_form = 2.0 * std::pow(radius, 2.0 * order + 1.0) / (2.0 * order + 1.0);
    c.disc_form = disc_integral(radius, order);
    return c;
}

double disc_integral(double radius, int k) {
    if (!(radius > 0.0))
        throw InputError("disc radius must be positive");
    if (k < 0)
        throw InputError("monomial exponent must be nonnegative");
    return std::pow(radius, 2.0 * k + 2.0) / (static_cast<double>(k) + 1.0);
}

LowerBoundScan scan_lower_bounds(const SectionData& s) {
    require_valid_section(s);
    LowerBoundScan scan;
    const int top = 2 * s.genus - 2;
    scan.min_bound = std::numeric_limits<double>::infinity();
    for (int order = 0; order <= top; ++order) {
        const double b = omega_l2_lower_bound(s, order);
        scan.bound.push_back(b);
        scan.bound_disc.push_back(omega_l2_lower_bound_disc(s, order));
        if (b < scan.min_bound) {
            scan.min_bound = b;
            scan.argmin = order;
        }
    }
    return scan;
}

double c_p_total(const SectionData& s, const NumberFieldProfile& profile,
                 double lambda_1) {
    require_valid_profile(profile);
    if (!(lambda_1 > 0.0))
        throw InputError("lambda_1 must be positive");
    if (lambda_1 < 1.0)
        return 12.0 * static_cast<double>(s.genus) *
               static_cast<double>(profile.degree) * c_p(s);
    return 0.0;
}

BoundReport volume_chi_bound(const NumberFieldProfile& profile,
                             const std::vector<double>& volumes,
                             double constant, double tol) {
    require_valid_profile(profile);
    if (volumes.size() != profile.infinite_places.size())
        throw InputError("volumes: one entry per infinite place required");
    for (double v : volumes)
        if (!(v > 0.0))
            throw InputError("arakelov_volume must be positive");

    double lhs = -0.5 * std::log(profile.abs_discriminant);
    double rhs = constant;
    for (std::size_t i = 0; i < volumes.size(); ++i) {
        const Place& pl = profile.infinite_places[i];
        const double eps = pl.epsilon();
        const double base = pl.kind == PlaceKind::complex ? 2.0 : 1.0;
        const double unit_norm_sq = eps * volumes[i] / kPi;
        lhs -= 0.5 * eps * std::log(unit_norm_sq / base);
        rhs -= 0.5 * eps * std::log(volumes[i]);
    }
    BoundReport report;
    report.name = "chi_volume";
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = rhs - lhs;
    report.verdict = *report.slack >= -tol ? "holds" : "violated";
    report.provenance = {
        "lhs: chi of the rank-1 module with ||1||^2_v = eps_v vol_v / pi",
        "rhs: -(1/2) sum eps_v log vol_v plus the configured constant",
        "constant C: configuration input"};
    return report;
}

BoundReport self_intersection_bound(const std::vector<double>& lambdas,
                                    const NumberFieldProfile& profile,
                                    int genus, double constant,
                                    std::optional<double> omega_omega,
                                    double tol) {
    require_valid_profile(profile);
    if (genus < 2)
        throw InputError("genus must be >= 2");
    if (static_cast<int>(lambdas.size()) != genus)
        throw InputError("expected exactly genus successive minima");
    double log_sum = 0.0;
    for (double l : lambdas) {
        if (!(l > 0.0))
            throw InputError("successive minima must be positive");
        log_sum += -std::log(l);
    }
    BoundReport report;
    report.name = "self_intersection";
    report.rhs = 12.0 * static_cast<double>(profile.degree) * log_sum + constant;
    report.provenance = {
        "rhs: 12 [F:Q] sum_i (-log lambda_i) plus the configured constant",
        "constant C: configuration input",
        "lambda_i: inputs (successive minima of the direct image)"};
    if (omega_omega) {
        report.lhs = *omega_omega;
        report.slack = report.rhs - *report.lhs;
        report.verdict = *report.slack >= -tol ? "holds" : "violated";
        report.provenance.push_back("lhs: supplied reference pairing (omega, omega)");
    }
    return report;
}

double noether_residual(const AnalyticInputs& a, double chi_surface) {
    require_valid_analytic(a);
    double lhs = 12.0 * chi_surface;
    for (const auto& pl : a.infinite_places)
        lhs += 6.0 * pl.epsilon * pl.log_det_laplacian;
    double rhs = a.omega_omega + a.b_g;
    for (const auto& pl : a.finite_places)
        rhs += std::log(static_cast<double>(pl.residue_size)) * pl.delta;
    return lhs - rhs;
}

SurfaceResiduals rr_surface_residual(const AnalyticInputs& a, double chi_l,
                                     double chi_o) {
    require_valid_analytic(a);
    double log_det_o = 0.0;
    for (const auto& pl : a.infinite_places)
        log_det_o += pl.log_det_laplacian;
    SurfaceResiduals out;
    out.rr = (chi_l + 0.5 * a.log_det_laplacian_l) -
             (0.5 * a.l_l_omega_dual + chi_o + 0.5 * log_det_o);
    out.com = chi_l - (a.deg_det_l2 - 0.5 * a.l_f_omega + 0.25 * a.omega_x_f_omega);
    return out;
}

double wilms_floor(int genus) {
    if (genus < 2)
        throw InputError("genus must be >= 2");
    return -2.0 * static_cast<double>(genus) * std::log(2.0 * kPi * kPi * kPi * kPi);
}

std::vector<std::size_t> wilms_violations(const AnalyticInputs& a, int genus) {
    const double floor = wilms_floor(genus);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.infinite_places.size(); ++i) {
        const auto& delta = a.infinite_places[i].archimedean_delta;
        if (delta && *delta <= floor)
            out.push_back(i);
    }
    return out;
}

} // namespace latkit
