#include "latkit/minima.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace latkit {

namespace {

constexpr double kPi = std::numbers::pi;

void canonicalize_sign(std::vector<long long>& x) {
    for (long long v : x) {
        if (v > 0) return;
        if (v < 0) break;
    }
    for (long long& v : x) v = -v;
}

// Continued-fraction rational reconstruction for field-action entries.
// Desk-scale actions have small denominators; anything else is rejected.
void snap_rational(double x, long long& num, long long& den) {
    const long long kDenLimit = 1'000'000;
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(v);
        const long long ai = static_cast<long long>(a);
        const long long p2 = ai * p1 + p0;
        const long long q2 = ai * q1 + q0;
        if (q2 > kDenLimit || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(x - approx) <= 1e-12 * std::max(1.0, std::abs(x))) {
            num = p1;
            den = q1;
            return;
        }
        const double frac = v - a;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    throw InputError("field_action entry is not a small rational");
}

// Integer matrices of the field action, denominators cleared per matrix
// (column scaling does not change the span, so the rank is unaffected).
std::vector<std::vector<std::vector<long long>>>
integer_actions(const HermitianModule& m) {
    std::vector<std::vector<std::vector<long long>>> out;
    const int n = m.rank_z;
    for (const auto& a : m.field_action) {
        std::vector<std::vector<long long>> nums(n, std::vector<long long>(n));
        std::vector<std::vector<long long>> dens(n, std::vector<long long>(n));
        long long lcm = 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                snap_rational(a(i, j), nums[i][j], dens[i][j]);
                const long long g = std::gcd(lcm, dens[i][j]);
                lcm = lcm / g * dens[i][j];
                if (lcm > 1'000'000'000LL)
                    throw InputError("field_action denominators too large");
            }
        std::vector<std::vector<long long>> mat(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mat[i][j] = nums[i][j] * (lcm / dens[i][j]);
        out.push_back(std::move(mat));
    }
    return out;
}

std::vector<long long> apply_integer_matrix(const std::vector<std::vector<long long>>& a,
                                            const std::vector<long long>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<long long> y(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            y[i] += a[i][j] * x[j];
    return y;
}

// Greedy-independence helper: the candidate columns so far, flattened over
// the field action when present.
struct IndependenceChecker {
    const HermitianModule& m;
    std::vector<std::vector<std::vector<long long>>> actions; // empty => rational mode
    std::vector<std::vector<long long>> columns;              // accepted orbit columns
    int accepted = 0;

    explicit IndependenceChecker(const HermitianModule& mod) : m(mod) {
        if (m.profile.degree > 1)
            actions = integer_actions(m);
    }

    int degree() const { return m.profile.degree; }

    // True when adding v enlarges the F-span; commits v on success.
    bool try_accept(const std::vector<long long>& v) {
        std::vector<std::vector<long long>> trial = columns;
        if (actions.empty()) {
            trial.push_back(v);
        } else {
            for (const auto& a : actions)
                trial.push_back(apply_integer_matrix(a, v));
        }
        const int want = (accepted + 1) * degree();
        if (integer_rank(trial) != want)
            return false;
        columns = std::move(trial);
        ++accepted;
        return true;
    }
};

} // namespace

double ball_volume(int k) {
    if (k < 1)
        throw InputError("ball_volume requires k >= 1");
    return std::exp(0.5 * k * std::log(kPi) - std::lgamma(0.5 * k + 1.0));
}

double hermite_constant(int i) {
    if (i < 1)
        throw InputError("hermite_constant requires i >= 1");
    // gamma_n for the squared-norm normalization lambda_1^2 <= gamma_n covol^{2/n}
    static const double table[8] = {
        1.0,
        2.0 / std::sqrt(3.0),
        std::pow(2.0, 1.0 / 3.0),
        std::sqrt(2.0),
        std::pow(8.0, 1.0 / 5.0),
        std::pow(64.0 / 3.0, 1.0 / 6.0),
        std::pow(64.0, 1.0 / 7.0),
        2.0,
    };
    return i <= 8 ? table[i - 1] : static_cast<double>(i);
}

int integer_rank(std::vector<std::vector<long long>> cols) {
    if (cols.empty()) return 0;
    const size_t nrows = cols.front().size();
    // Bareiss fraction-free elimination on the transpose, exact in __int128.
    std::vector<std::vector<__int128>> a;
    for (size_t i = 0; i < nrows; ++i) {
        std::vector<__int128> row(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) row[j] = cols[j][i];
        a.push_back(std::move(row));
    }
    const size_t rows = a.size(), colcount = cols.size();
    size_t rank = 0;
    __int128 prev = 1;
    for (size_t col = 0; col < colcount && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < colcount; ++j) {
                __int128 t1, t2;
                if (__builtin_mul_overflow(a[rank][col], a[i][j], &t1) ||
                    __builtin_mul_overflow(a[i][col], a[rank][j], &t2))
                    throw InputError("independence rank overflow: entries too large");
                a[i][j] = (t1 - t2) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

std::vector<ShortVector> short_vectors(const HermitianModule& m, double radius,
                                       const EnumerationBudget& budget) {
    require_valid_module(m);
    if (!(radius > 0.0))
        throw InputError("radius must be positive");
    const Eigen::MatrixXd gram = m.gram();
    std::uint64_t consumed = 0;
    std::vector<ShortVector> out;
    enumerate_gram_points(gram, radius * radius, budget, consumed,
                          [&](const std::vector<long long>& x, double norm_sq) {
                              ShortVector sv;
                              sv.coords = x;
                              canonicalize_sign(sv.coords);
                              sv.norm = std::sqrt(norm_sq);
                              out.push_back(std::move(sv));
                          });
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.coords < b.coords;
    });
    return out;
}

MinimaReport successive_minima(const HermitianModule& m, const EnumerationBudget& budget) {
    require_valid_module(m);
    const int n = m.rank_z;
    const int degree = m.profile.degree;
    if (degree > 1 && m.field_action.empty())
        throw InputError("successive_minima requires field_action when degree > 1");
    if (n % degree != 0)
        throw InputError("rank not divisible by degree");
    const int rank_o = n / degree;

    // Hermite bound gives a radius certain to contain the first minimum;
    // growth handles the later ones.
    const double covol = covolume(m);
    double radius =
        std::sqrt(hermite_constant(n)) * std::pow(covol, 1.0 / n) * 1.05 + 1e-6;

    MinimaReport report;
    report.rank_o = rank_o;
    report.independence_mode = degree > 1 ? "field_action" : "rational";

    for (int attempt = 0; attempt < 256; ++attempt) {
        const auto vecs = short_vectors(m, radius, budget);
        IndependenceChecker checker(m);
        report.lambdas.clear();
        report.witnesses.clear();
        for (const auto& sv : vecs) {
            if (checker.accepted == rank_o) break;
            if (checker.try_accept(sv.coords)) {
                report.lambdas.push_back(sv.norm);
                report.witnesses.push_back(sv.coords);
            }
        }
        if (checker.accepted == rank_o)
            return report;
        radius *= 1.5;
    }
    throw BudgetError("successive_minima failed to reach full rank");
}

double minkowski_constant(int rank_o, const NumberFieldProfile& profile) {
    const double log_v = profile.r1 * std::log(ball_volume(rank_o)) +
                         profile.r2 * (std::log(2.0) + std::log(ball_volume(2 * rank_o)));
    return rank_o * profile.degree * std::log(2.0) - log_v;
}

MinkowskiReport minkowski_check(const HermitianModule& m, const EnumerationBudget& budget) {
    const MinimaReport minima = successive_minima(m, budget);
    MinkowskiReport r;
    r.lambdas = minima.lambdas;
    r.constant = minkowski_constant(minima.rank_o, m.profile);
    r.lhs = euler_chi(m);
    double sum_neg_log = 0.0;
    for (double lam : minima.lambdas) sum_neg_log -= std::log(lam);
    r.rhs = m.profile.degree * sum_neg_log + r.constant;
    r.violated = r.lhs > r.rhs + 1e-9;
    return r;
}

H0BoundsReport h0_upper_bounds(const HermitianModule& m, double h0, double tol,
                               const EnumerationBudget& budget) {
    require_valid_module(m);
    const int n = m.rank_z;
    const int degree = m.profile.degree;

    H0BoundsReport report;
    report.h0 = h0;

    // lambda_1 is the plain lattice minimum; no independence data needed.
    const double covol = covolume(m);
    double radius = std::sqrt(hermite_constant(n)) * std::pow(covol, 1.0 / n) * 1.05 + 1e-6;
    std::vector<ShortVector> vecs;
    for (int attempt = 0; attempt < 256 && vecs.empty(); ++attempt) {
        vecs = short_vectors(m, radius, budget);
        radius *= 1.5;
    }
    if (vecs.empty())
        throw BudgetError("lattice minimum not found within budget");
    const double lambda1 = vecs.front().norm;
    report.lambda_1 = lambda1;

    const double deg = euler_chi(m) - (static_cast<double>(n) / degree) * chi_ring(m.profile);
    report.arithmetic_degree = deg;

    {
        H0Bound b;
        b.name = "hermite_sum";
        b.applicable = true;
        double bound = n * h0_unit_z();
        for (int i = 1; i <= n; ++i)
            bound += std::log(std::max(1.0, hermite_constant(i) / lambda1));
        b.bound = bound;
        b.holds = h0 <= bound + tol;
        report.bounds.push_back(b);
    }
    {
        H0Bound b;
        b.name = "gaussian_decay";
        b.applicable = (n == degree) && deg <= 0.0;
        if (b.applicable) {
            const double d = degree;
            b.bound = std::pow(3.0, d) * (1.0 - 1.0 / (2.0 * kPi)) *
                      std::exp(-kPi * d * std::exp(-(2.0 / d) * deg));
            b.holds = h0 <= b.bound + tol;
        }
        report.bounds.push_back(b);
    }
    {
        H0Bound b;
        b.name = "degree_linear";
        b.applicable = (n == degree) && deg >= 0.0;
        if (b.applicable) {
            b.bound = 1.0 + deg;
            b.holds = h0 <= b.bound + tol;
        }
        report.bounds.push_back(b);
    }
    return report;
}

} // namespace latkit
