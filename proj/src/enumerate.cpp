#include "latkit/enumerate.hpp"

#include "latkit/errors.hpp"

#include <cmath>

namespace latkit {

namespace {

struct EnumState {
    const Eigen::MatrixXd& upper; // Cholesky factor U, gram = U^T U
    const Eigen::MatrixXd& gram;
    double bound_sq;
    std::uint64_t limit;
    std::uint64_t& consumed;
    const std::function<void(const std::vector<long long>&, double)>& visit;
    std::vector<long long> x;
    std::vector<double> partial; // norm contribution of coordinates > i
};

double exact_gram_norm(const Eigen::MatrixXd& gram, const std::vector<long long>& x) {
    const int n = static_cast<int>(x.size());
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (x[j] == 0) continue;
            row += gram(i, j) * static_cast<double>(x[j]);
        }
        norm_sq += static_cast<double>(x[i]) * row;
    }
    return norm_sq;
}

// Level i fixes coordinate x_i given x_{i+1..n-1}.  `positive_prefix` is set
// once some higher coordinate is nonzero; until then x_i >= 0, which selects
// the representative whose highest nonzero coordinate is positive.
void descend(EnumState& s, int i, bool positive_prefix) {
    const double remaining = s.bound_sq - s.partial[i + 1];
    if (remaining < 0.0) return;
    const double uii = s.upper(i, i);
    double c = 0.0;
    for (int j = i + 1; j < static_cast<int>(s.x.size()); ++j)
        c += s.upper(i, j) * static_cast<double>(s.x[j]);
    const double half_width = std::sqrt(remaining) / uii;
    const double centre = -c / uii;
    long long lo = static_cast<long long>(std::ceil(centre - half_width - 1e-9));
    long long hi = static_cast<long long>(std::floor(centre + half_width + 1e-9));
    if (!positive_prefix && lo < 0) lo = 0;

    for (long long v = lo; v <= hi; ++v) {
        s.x[i] = v;
        const double term = uii * static_cast<double>(v) + c;
        const double used = s.partial[i + 1] + term * term;
        if (used > s.bound_sq * (1.0 + 1e-12) + 1e-12) continue;
        if (i == 0) {
            bool zero = true;
            for (long long e : s.x)
                if (e != 0) { zero = false; break; }
            if (zero) continue;
            if (++s.consumed > s.limit)
                throw BudgetError("enumeration budget exceeded");
            const double norm_sq = exact_gram_norm(s.gram, s.x);
            if (norm_sq <= s.bound_sq * (1.0 + 1e-12) + 1e-12)
                s.visit(s.x, norm_sq);
        } else {
            s.partial[i] = used;
            descend(s, i - 1, positive_prefix || v != 0);
        }
    }
    s.x[i] = 0;
}

} // namespace

void enumerate_gram_points(
    const Eigen::MatrixXd& gram,
    double radius_sq,
    const EnumerationBudget& budget,
    std::uint64_t& consumed,
    const std::function<void(const std::vector<long long>&, double)>& visit) {
    const int n = static_cast<int>(gram.rows());
    if (n == 0 || gram.cols() != n)
        throw InputError("gram matrix must be square and nonempty");
    if (radius_sq < 0.0)
        return;

    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw InputError("gram matrix not positive definite");
    const Eigen::MatrixXd upper = llt.matrixU();

    EnumState s{upper, gram, radius_sq, budget.max_points, consumed, visit, {}, {}};
    s.x.assign(n, 0);
    s.partial.assign(n + 1, 0.0);
    descend(s, n - 1, false);
}

} // namespace latkit
