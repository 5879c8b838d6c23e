#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/number_field.hpp"

namespace latkit {

// Local data of a global section at one infinite place: the place weight
// (1 real, 2 complex) and the radius of an embedded disc around the lift of
// the base point.
struct SectionPlace {
    double epsilon = 1.0;
    double radius = 1.0;
};

// Inputs for the local correction constant c_P: the multiplier m_P, the
// genus, and one (epsilon, radius) pair per infinite place.
struct SectionData {
    double m_p = 1.0;
    int genus = 2;
    std::vector<SectionPlace> places;
};

// Analytic torsion, volumes, conductors and intersection numbers are
// supplied, never computed here; computing them is out of scope.
struct InfinitePlaceData {
    double epsilon = 1.0;
    double log_det_laplacian = 0.0;
    double arakelov_volume = 1.0;
    // Faltings delta invariant, checked against the Wilms floor when given.
    std::optional<double> archimedean_delta;
};

struct FinitePlaceData {
    long long residue_size = 2;
    double delta = 0.0; // conductor contribution, nonnegative
};

struct AnalyticInputs {
    std::vector<InfinitePlaceData> infinite_places;
    std::vector<FinitePlaceData> finite_places;
    double omega_omega = 0.0;         // (omega, omega)
    double l_l_omega_dual = 0.0;      // (L, L tensor omega^dual)
    double l_f_omega = 0.0;           // (L, pullback of the base omega)
    double omega_x_f_omega = 0.0;     // (omega, pullback of the base omega)
    double deg_det_l2 = 0.0;          // degree of det of the direct image, L2 metric
    double log_det_laplacian_l = 0.0; // analytic torsion of L, all places combined
    double b_g = 0.0;                 // additive constant of the Noether identity
    double a_v_g = 0.0;               // additive constant of the delta/torsion relation
};

// One assembled inequality.  verdict is "holds" iff slack >= -tolerance,
// "unevaluated" when no reference left-hand side was supplied.
struct BoundReport {
    std::string name;
    std::optional<double> lhs;
    double rhs = 0.0;
    std::optional<double> slack;
    std::string verdict = "unevaluated";
    std::vector<std::string> provenance;
};

void require_valid_section(const SectionData& s);
void require_valid_analytic(const AnalyticInputs& a);

// c_P = -(min(0, (2g-1) log m_P)
//        + sum_v (eps_v/2) (log 2 + min(0, (4g-3) log r_v) - log(4g-3))).
// Nonnegative whenever m_P <= 1 and every r_v <= 1.
double c_p(const SectionData& s);

// Lower bound for the log L2 norm of a section vanishing to the given order
// at the base point:
//   (order+1) log m_P
//     + sum_v (eps_v/2) (log 2 + (2 order+1) log r_v - log(2 order+1)).
// Valid orders are 0 .. 2g-2.
double omega_l2_lower_bound(const SectionData& s, int order);

// Variant whose per-place constant is the closed-form disc integral
// (1/pi) int_{B(r)} |z^k|^2 = r^(2k+2)/(k+1).
double omega_l2_lower_bound_disc(const SectionData& s, int order);

// Per-place constant at one vanishing order, in both forms.  bound_form is
// what omega_l2_lower_bound uses; disc_form is the closed-form integral.
struct OrderConstant {
    double bound_form = 0.0; // 2 r^(2k+1)/(2k+1)
    double disc_form = 0.0;  // r^(2k+2)/(k+1)
};
OrderConstant order_constant(double radius, int order);

// (1/pi) int_{B(radius)} |z^k|^2 dx dy.
double disc_integral(double radius, int k);

// All orders 0 .. 2g-2 of both lower-bound variants.  When m_P <= 1 and all
// radii are <= 1 the minimum of bound equals -c_p(s) exactly.
struct LowerBoundScan {
    std::vector<double> bound;
    std::vector<double> bound_disc;
    int argmin = 0;
    double min_bound = 0.0;
};
LowerBoundScan scan_lower_bounds(const SectionData& s);

// C_P = 12 g [F:Q] c_P when lambda_1 < 1, and 0 otherwise.
double c_p_total(const SectionData& s, const NumberFieldProfile& profile,
                 double lambda_1);

// chi of the rank-1 module carrying ||1||^2_v = eps_v vol_v / pi against the
// bound -(1/2) sum_v eps_v log vol_v + C.
BoundReport volume_chi_bound(const NumberFieldProfile& profile,
                             const std::vector<double>& volumes,
                             double constant, double tol);

// Self-intersection upper bound 12 [F:Q] sum_i (-log lambda_i) + C.  The
// verdict is evaluated only when a reference pairing value is supplied.
BoundReport self_intersection_bound(const std::vector<double>& lambdas,
                                    const NumberFieldProfile& profile,
                                    int genus, double constant,
                                    std::optional<double> omega_omega,
                                    double tol);

// lhs - rhs of
//   12 chi + sum_{v inf} 6 eps_v log det Delta_v
//     = (omega, omega) + sum_{v fin} eps_v delta_v + B(g),
// with eps_v = log q_v at the finite places.
double noether_residual(const AnalyticInputs& a, double chi_surface);

// rr:  chi_L + (1/2) log det Delta_L
//        - [(1/2)(L, L tensor omega^dual) + chi_O + (1/2) log det Delta_O].
// com: chi_L - [deg det - (1/2)(L, f*omega) + (1/4)(omega, f*omega)].
struct SurfaceResiduals {
    double rr = 0.0;
    double com = 0.0;
};
SurfaceResiduals rr_surface_residual(const AnalyticInputs& a, double chi_l,
                                     double chi_o);

// Strict lower bound -2g log(2 pi^4) for the archimedean delta invariant.
double wilms_floor(int genus);

// Indices of infinite places whose supplied delta sits at or below the floor.
std::vector<std::size_t> wilms_violations(const AnalyticInputs& a, int genus);

} // namespace latkit
