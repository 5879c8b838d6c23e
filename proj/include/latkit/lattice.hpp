#pragma once

#include "latkit/enumerate.hpp"
#include "latkit/errors.hpp"
#include "latkit/number_field.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latkit {

// A metrized module over the ring of integers of the profile's field:
// a full-rank lattice embedded by `basis` (columns are the generators in
// Euclidean n-space), plus the cardinality of the torsion part.  Torsion
// elements vanish in the real span, so only their count enters any formula.
struct HermitianModule {
    int rank_z = 1;                       // n, rank of the free quotient over Z
    Eigen::MatrixXd basis;                // n x n, columns are lattice generators
    long long torsion_order = 1;          // #torsion, >= 1
    std::vector<Eigen::MatrixXd> field_action; // optional, one n x n matrix per
                                               // integral-basis element of O
    std::optional<Eigen::MatrixXd> omega_twist_basis; // optional explicit lattice
                                                      // realizing the h1 twist
    NumberFieldProfile profile = NumberFieldProfile::rationals();

    Eigen::MatrixXd gram() const { return basis.transpose() * basis; }
};

struct ThetaResult {
    double value = 0.0;             // h0, includes the log(torsion) contribution
    double tail_bound = 0.0;        // certified remainder of the theta sum
    double enumeration_radius = 0.0;
    std::uint64_t points_counted = 0; // lattice points accounted for (with mirrors)
};

struct RrCheckReport {
    double h0 = 0.0;
    double h1 = 0.0;
    double chi = 0.0;
    double residual = 0.0;        // (h0 - h1) - chi
    double certified_error = 0.0; // sum of the two theta tail bounds
    bool holds = false;           // |residual| <= certified_error + 10*tol
};

// Carries the partial theta evaluation when the point budget ran out before
// the tail certificate met the tolerance.
class ThetaBudgetExceeded : public BudgetError {
public:
    ThetaBudgetExceeded(const std::string& what, ThetaResult partial)
        : BudgetError(what), partial_(partial) {}
    const ThetaResult& partial() const { return partial_; }

private:
    ThetaResult partial_;
};

// Returns the list of violated module invariants, empty when valid.
std::vector<std::string> validate_module(const HermitianModule& m);

// Throws InputError when the module is invalid.  The singular-basis
// diagnostic is exactly "basis singular".
void require_valid_module(const HermitianModule& m);

// |det basis|; throws on a singular basis.
double covolume(const HermitianModule& m);

// Metric dual: basis (B^T)^{-1}, torsion 1, same profile.  The field action
// and any twist data are not transported.
HermitianModule dual(const HermitianModule& m);

// chi = -log(covolume / torsion), exactly (no enumeration).
double euler_chi(const HermitianModule& m);

// h0 = log(torsion * sum_x exp(-pi ||x||^2)) over the free quotient, with
// |value - true h0| <= tol certified by the returned tail bound.
ThetaResult theta_h0(const HermitianModule& m, double tol,
                     const EnumerationBudget& budget = {});

// h1 = h0 of the twisted dual.  Over |D_F| = 1 the twist is trivial and this
// is theta_h0(dual(m)).  For |D_F| > 1 the twisted dual is the metric dual
// (trace duality) when the module carries a field action, or the explicitly
// supplied omega_twist_basis; with neither present the configuration is
// unsupported.
ThetaResult h1(const HermitianModule& m, double tol,
               const EnumerationBudget& budget = {});

// Riemann-Roch residual (h0 - h1) - chi with the combined certificate.
RrCheckReport rr_check(const HermitianModule& m, double tol,
                       const EnumerationBudget& budget = {});

// log sum_{n in Z} exp(-pi n^2): h0 of the unit rank-1 lattice, used as an
// additive constant in the section-count upper bounds.
double h0_unit_z();

} // namespace latkit
