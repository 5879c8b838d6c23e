#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace latkit {

// Work limit for lattice point enumeration, counted in visited coordinate
// vectors.  Shared by theta evaluation, short-vector listing and the minima
// scan; on exhaustion the operations throw BudgetError (or the partial-result
// variant in lattice.hpp).
struct EnumerationBudget {
    std::uint64_t max_points = 20'000'000;
};

// Branch-and-bound enumeration of the nonzero integer vectors x with
// x^T G x <= radius_sq, one representative per antipodal pair {x, -x}.
// Bounds come from the Cholesky factor of the Gram matrix G; the norm passed
// to the callback is recomputed as x^T G x in a fixed summation order, so for
// integer Gram matrices it is exact.  Visits are in a fixed recursive order
// independent of any threading above this call.
//
// `consumed` accumulates visited-point counts across calls against the same
// budget.  Throws InputError when G is not positive definite, BudgetError on
// exhaustion.
void enumerate_gram_points(
    const Eigen::MatrixXd& gram,
    double radius_sq,
    const EnumerationBudget& budget,
    std::uint64_t& consumed,
    const std::function<void(const std::vector<long long>&, double)>& visit);

} // namespace latkit
