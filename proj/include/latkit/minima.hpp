#pragma once

#include "latkit/lattice.hpp"

#include <string>
#include <vector>

namespace latkit {

struct ShortVector {
    std::vector<long long> coords; // sign-canonical: first nonzero positive
    double norm = 0.0;
};

struct MinimaReport {
    std::vector<double> lambdas;                    // nondecreasing
    std::vector<std::vector<long long>> witnesses;  // one per lambda
    int rank_o = 0;                                 // r = n / [F:Q]
    std::string independence_mode;                  // "rational" or "field_action"
};

struct MinkowskiReport {
    double lhs = 0.0; // chi of the module
    double rhs = 0.0; // degree * sum(-log lambda_i) + c
    double constant = 0.0;
    std::vector<double> lambdas;
    bool violated = false; // lhs > rhs beyond tolerance
};

// One evaluated section-count upper bound; `applicable` is false when the
// module is outside the bound's domain (wrong degree sign or O-rank).
struct H0Bound {
    std::string name;
    bool applicable = false;
    double bound = 0.0;
    bool holds = true; // h0 <= bound + tol whenever applicable
};

struct H0BoundsReport {
    double h0 = 0.0;
    double arithmetic_degree = 0.0; // deg det of the module
    double lambda_1 = 0.0;
    std::vector<H0Bound> bounds;
};

// Lebesgue volume of the k-dimensional unit ball, pi^{k/2} / Gamma(k/2 + 1).
double ball_volume(int k);

// i-th Hermite constant: exact values for i <= 8, the conservative estimate
// gamma_i = i beyond (any upper estimate keeps the bounds valid).
double hermite_constant(int i);

// Exact rank over Q of an integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<long long>> rows);

// Nonzero lattice vectors of norm <= radius, one representative per +-pair,
// sorted by norm then lexicographic coordinates.
std::vector<ShortVector> short_vectors(const HermitianModule& m, double radius,
                                       const EnumerationBudget& budget = {});

// Successive minima with F-linear independence: greedy scan of short vectors
// in norm order, accepting a vector when it enlarges the F-span.  For degree
// > 1 independence is certified by the exact rational rank of the orbit
// {beta v_k} under the field action.
MinimaReport successive_minima(const HermitianModule& m,
                               const EnumerationBudget& budget = {});

// chi <= degree * sum(-log lambda_i) + c with
// c = r*degree*log 2 - log(V_r^{r1} (2 V_{2r})^{r2}).
MinkowskiReport minkowski_check(const HermitianModule& m,
                                const EnumerationBudget& budget = {});

// The Minkowski constant c alone, for a given O-rank and signature.
double minkowski_constant(int rank_o, const NumberFieldProfile& profile);

// The three section-count upper bounds for a precomputed h0:
//   (i)   h0 <= n h0_Z(Z) + sum_i log max{1, gamma_i / lambda_1}   (always)
//   (ii)  h0 <= 3^d (1 - 1/(2 pi)) exp(-pi d e^{-(2/d) deg})       (deg <= 0)
//   (iii) h0 <= 1 + deg                                            (deg >= 0)
// (ii) and (iii) apply only to O-rank-1 modules; deg is derived from the
// covolume as chi(M) - rank_o * chi(O).
H0BoundsReport h0_upper_bounds(const HermitianModule& m, double h0, double tol = 1e-9,
                               const EnumerationBudget& budget = {});

} // namespace latkit
