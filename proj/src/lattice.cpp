#include "latkit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace latkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier compensated accumulator: the theta sums must be deterministic and
// accurate independent of term count.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Upper bound on the half-parameter tail sum_{|x| > R} exp(-pi |x|^2 / 2).
// Points in the shell (R+k, R+k+1] number at most (1 + 2(R+k+1)/lambda)^n
// (disjoint packing balls of radius lambda/2), each weighing at most
// exp(-pi (R+k)^2 / 2).
double half_tail_closure(double radius, double lambda_lb, int n) {
    const double lam = std::max(lambda_lb, 1e-12);
    double total = 0.0;
    for (int k = 0; k < 4000; ++k) {
        const double r_out = radius + k + 1;
        const double log_term =
            n * std::log1p(2.0 * r_out / lam) - 0.5 * kPi * (radius + k) * (radius + k);
        if (log_term < -745.0) break; // exp underflows; later terms only smaller
        total += std::exp(log_term);
    }
    return total;
}

} // namespace

std::vector<std::string> validate_module(const HermitianModule& m) {
    std::vector<std::string> diags;
    if (m.rank_z < 1)
        diags.push_back("rank >= 1");
    if (m.basis.rows() != m.rank_z || m.basis.cols() != m.rank_z)
        diags.push_back("basis must be rank x rank");
    if (m.torsion_order < 1)
        diags.push_back("torsion_order >= 1");

    for (const auto& d : validate_profile(m.profile))
        diags.push_back("profile: " + d);

    if (m.basis.rows() == m.rank_z && m.basis.cols() == m.rank_z && m.rank_z >= 1) {
        const double scale = std::max(1e-30, m.basis.cwiseAbs().maxCoeff());
        const double det = m.basis.determinant();
        if (!std::isfinite(det) || std::abs(det) < 1e-12 * std::pow(scale, m.rank_z))
            diags.push_back("basis singular");
        else {
            Eigen::LLT<Eigen::MatrixXd> llt(m.gram());
            if (llt.info() != Eigen::Success)
                diags.push_back("gram not positive definite");
        }
    }

    if (!m.field_action.empty()) {
        if (static_cast<int>(m.field_action.size()) != m.profile.degree)
            diags.push_back("field_action must have one matrix per integral-basis element");
        bool shapes_ok = true;
        for (const auto& a : m.field_action)
            if (a.rows() != m.rank_z || a.cols() != m.rank_z) shapes_ok = false;
        if (!shapes_ok) {
            diags.push_back("field_action matrices must be rank x rank");
        } else {
            double scale = 1.0;
            for (const auto& a : m.field_action)
                scale = std::max(scale, a.cwiseAbs().maxCoeff());
            const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m.rank_z, m.rank_z);
            bool has_identity = false;
            for (const auto& a : m.field_action)
                if ((a - id).cwiseAbs().maxCoeff() <= 1e-12 * scale) has_identity = true;
            if (!has_identity)
                diags.push_back("field_action must include the identity");
            for (size_t i = 0; i < m.field_action.size(); ++i)
                for (size_t j = i + 1; j < m.field_action.size(); ++j) {
                    const Eigen::MatrixXd comm = m.field_action[i] * m.field_action[j] -
                                                 m.field_action[j] * m.field_action[i];
                    if (comm.cwiseAbs().maxCoeff() > 1e-10 * scale * scale) {
                        diags.push_back("field_action matrices must commute");
                        i = m.field_action.size();
                        break;
                    }
                }
        }
    }
    return diags;
}

void require_valid_module(const HermitianModule& m) {
    const auto diags = validate_module(m);
    if (diags.empty()) return;
    std::ostringstream msg;
    msg << "invalid module:";
    for (const auto& d : diags) msg << " [" << d << "]";
    throw InputError(msg.str());
}

double covolume(const HermitianModule& m) {
    require_valid_module(m);
    return std::abs(m.basis.determinant());
}

HermitianModule dual(const HermitianModule& m) {
    require_valid_module(m);
    HermitianModule d;
    d.rank_z = m.rank_z;
    d.basis = m.basis.transpose().inverse();
    d.torsion_order = 1;
    d.profile = m.profile;
    return d;
}

double euler_chi(const HermitianModule& m) {
    return std::log(static_cast<double>(m.torsion_order)) - std::log(covolume(m));
}

ThetaResult theta_h0(const HermitianModule& m, double tol, const EnumerationBudget& budget) {
    require_valid_module(m);
    if (!(tol > 0.0))
        throw InputError("tolerance must be positive");

    const int n = m.rank_z;
    const Eigen::MatrixXd gram = m.gram();
    const double covol = std::abs(m.basis.determinant());
    std::uint64_t consumed = 0;

    // Initial radius from the target e^{-pi R^2/2} * mass <= tol, with the
    // half-parameter mass guessed crudely; the certificate loop fixes any
    // underestimate.
    const double mass_guess = n * std::log(2.0) + std::abs(std::log(covol)) + 2.0;
    double radius = std::sqrt(2.0 * (-std::log(tol) + mass_guess) / kPi);
    radius = std::max(radius, 1.0);

    auto partial_result = [&](double sum_full, double radius_now,
                              std::uint64_t reps) -> ThetaResult {
        ThetaResult r;
        r.value = std::log(static_cast<double>(m.torsion_order)) + std::log(sum_full);
        r.tail_bound = std::numeric_limits<double>::infinity();
        r.enumeration_radius = radius_now;
        r.points_counted = 2 * reps + 1;
        return r;
    };

    for (int attempt = 0; attempt < 64; ++attempt) {
        CompensatedSum sum_full;  // sum exp(-pi |x|^2), zero vector included
        CompensatedSum sum_half;  // sum exp(-pi |x|^2 / 2), for the tail certificate
        sum_full.add(1.0);
        sum_half.add(1.0);
        std::uint64_t reps = 0;
        double min_norm_sq = std::numeric_limits<double>::infinity();

        try {
            enumerate_gram_points(
                gram, radius * radius, budget, consumed,
                [&](const std::vector<long long>&, double norm_sq) {
                    ++reps;
                    min_norm_sq = std::min(min_norm_sq, norm_sq);
                    sum_full.add(2.0 * std::exp(-kPi * norm_sq));
                    sum_half.add(2.0 * std::exp(-0.5 * kPi * norm_sq));
                });
        } catch (const BudgetError&) {
            throw ThetaBudgetExceeded("theta enumeration budget exceeded",
                                      partial_result(sum_full.value(), radius, reps));
        }

        // Tail of the full-parameter sum beyond R: each remaining term is at
        // most e^{-pi R^2/2} times its half-parameter weight, and the full
        // half-parameter sum is the enumerated part plus the packing closure.
        const double lambda_lb = std::isfinite(min_norm_sq) ? std::sqrt(min_norm_sq) : radius;
        const double closure = half_tail_closure(radius, lambda_lb, n);
        const double tail =
            std::exp(-0.5 * kPi * radius * radius) * (sum_half.value() + closure);

        if (tail <= tol) {
            ThetaResult r;
            r.value = std::log(static_cast<double>(m.torsion_order)) +
                      std::log(sum_full.value());
            r.tail_bound = tail;
            r.enumeration_radius = radius;
            r.points_counted = 2 * reps + 1;
            return r;
        }
        radius *= 1.3;
    }
    throw ThetaBudgetExceeded("theta tolerance unreachable",
                              partial_result(1.0, radius, 0));
}

ThetaResult h1(const HermitianModule& m, double tol, const EnumerationBudget& budget) {
    require_valid_module(m);
    if (m.profile.abs_discriminant > 1.0 + 1e-12) {
        if (m.omega_twist_basis) {
            HermitianModule twist;
            twist.rank_z = m.rank_z;
            twist.basis = *m.omega_twist_basis;
            twist.torsion_order = 1;
            twist.profile = m.profile;
            return theta_h0(twist, tol, budget);
        }
        if (m.field_action.empty())
            throw UnsupportedError(
                "omega twist unsupported: |D_F| > 1 requires field_action or an "
                "explicit omega_twist_basis");
        // With genuine O-module data the metric dual realizes the twisted
        // dual: the trace pairing identifies Hom_Z(F, Z) with F^dual tensor
        // omega, and the ambient metric restricts to the trivial structure.
    }
    return theta_h0(dual(m), tol, budget);
}

RrCheckReport rr_check(const HermitianModule& m, double tol, const EnumerationBudget& budget) {
    const ThetaResult a = theta_h0(m, tol, budget);
    const ThetaResult b = h1(m, tol, budget);
    RrCheckReport r;
    r.h0 = a.value;
    r.h1 = b.value;
    r.chi = euler_chi(m);
    r.residual = (a.value - b.value) - r.chi;
    // tail T on a sum S >= 1 perturbs log S by at most log(1 + T/S) <= T
    r.certified_error = a.tail_bound + b.tail_bound;
    r.holds = std::abs(r.residual) <= r.certified_error + 10.0 * tol;
    return r;
}

double h0_unit_z() {
    // Direct summation; terms past |n| = 8 are below double precision.
    double s = 1.0;
    for (int n = 1; n <= 8; ++n)
        s += 2.0 * std::exp(-kPi * n * n);
    return std::log(s);
}

} // namespace latkit
