#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/bounds.hpp"
#include "latkit/errors.hpp"

#include "support/oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace latkit;

namespace {

constexpr double kPi = std::numbers::pi;
// frozen values of the pinned examples
constexpr double kCpUnit = 0.458145365937077532592;     // (1/2) log(5/2)
constexpr double kCpHalfRadius = 2.19101331733694080613; // (1/2) log 80
constexpr double kOrderZero = 0.346573590279972654709;   // (1/2) log 2
constexpr double kCpTotalHalfLambda = 10.9954887824898607822; // 24 c_P
constexpr double kWilmsG2 = -21.0882668958301840240;     // -4 log(2 pi^4)
constexpr double kWilmsG3 = -31.6324003437452760359;     // 1.5x the g=2 floor

SectionData one_real_place(double m_p, double radius, int genus) {
    SectionData s;
    s.m_p = m_p;
    s.genus = genus;
    s.places = {SectionPlace{1.0, radius}};
    return s;
}

} // namespace

TEST_CASE("c_p at the pinned section data") {
    CHECK(std::abs(c_p(one_real_place(1.0, 1.0, 2)) - kCpUnit) <= 1e-15);
    CHECK(std::abs(c_p(one_real_place(1.0, 0.5, 2)) - kCpHalfRadius) <= 1e-14);
    // m_P above 1 is capped away by the min
    CHECK(std::abs(c_p(one_real_place(2.0, 1.0, 2)) - kCpUnit) <= 1e-15);
}

TEST_CASE("c_p monotonicity on the capped domain") {
    // nonincreasing in m_P
    CHECK(c_p(one_real_place(0.5, 1.0, 2)) >= c_p(one_real_place(0.9, 1.0, 2)));
    CHECK(c_p(one_real_place(0.9, 1.0, 2)) >= c_p(one_real_place(1.0, 1.0, 2)));
    // nonincreasing in the radius on (0, 1]
    CHECK(c_p(one_real_place(1.0, 0.25, 2)) >= c_p(one_real_place(1.0, 0.5, 2)));
    CHECK(c_p(one_real_place(1.0, 0.5, 2)) >= c_p(one_real_place(1.0, 1.0, 2)));
    // nondecreasing in the genus when the caps are active
    CHECK(c_p(one_real_place(0.5, 0.5, 3)) >= c_p(one_real_place(0.5, 0.5, 2)));
    // nonnegative on the capped domain
    CHECK(c_p(one_real_place(1.0, 1.0, 5)) >= 0.0);
}

TEST_CASE("c_p rejects invalid sections") {
    CHECK_THROWS_WITH_AS(c_p(one_real_place(1.0, 1.0, 1)),
                         doctest::Contains("genus must be >= 2"), InputError);
    CHECK_THROWS_WITH_AS(c_p(one_real_place(0.0, 1.0, 2)),
                         doctest::Contains("m_P must be positive"), InputError);
    CHECK_THROWS_WITH_AS(c_p(one_real_place(1.0, -1.0, 2)),
                         doctest::Contains("radius must be positive"), InputError);
    SectionData empty;
    empty.places.clear();
    CHECK_THROWS_WITH_AS(c_p(empty),
                         doctest::Contains("at least one infinite place"),
                         InputError);
    SectionData bad_eps = one_real_place(1.0, 1.0, 2);
    bad_eps.places[0].epsilon = 3.0;
    CHECK_THROWS_WITH_AS(c_p(bad_eps),
                         doctest::Contains("epsilon must be 1 (real) or 2 (complex)"),
                         InputError);
}

TEST_CASE("vanishing-order lower bound at pinned orders") {
    const SectionData s = one_real_place(1.0, 1.0, 2);
    CHECK(std::abs(omega_l2_lower_bound(s, 0) - kOrderZero) <= 1e-15);
    CHECK(std::abs(omega_l2_lower_bound(s, 2) - (-kCpUnit)) <= 1e-15);
    CHECK_THROWS_WITH_AS(omega_l2_lower_bound(s, 3),
                         doctest::Contains("out of range"), InputError);
    CHECK_THROWS_AS(omega_l2_lower_bound(s, -1), InputError);
}

TEST_CASE("scan minimum equals minus c_p bit for bit on the capped domain") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        SectionData s;
        s.m_p = testing::uniform(rng, 0.05, 1.0);
        s.genus = 2 + static_cast<int>(rng() % 3);
        const int places = 1 + static_cast<int>(rng() % 3);
        for (int v = 0; v < places; ++v)
            s.places.push_back(SectionPlace{rng() % 2 == 0 ? 1.0 : 2.0,
                                            testing::uniform(rng, 0.05, 1.0)});
        const LowerBoundScan scan = scan_lower_bounds(s);
        CHECK(scan.min_bound == -c_p(s)); // exact double equality by design
        CHECK(scan.argmin == 2 * s.genus - 2);
        REQUIRE(scan.bound.size() == static_cast<std::size_t>(2 * s.genus - 1));
        // the scan is strictly decreasing on the capped domain
        for (std::size_t k = 1; k < scan.bound.size(); ++k)
            CHECK(scan.bound[k] < scan.bound[k - 1]);
    }
}

TEST_CASE("c_p_total branches on lambda_1") {
    const SectionData s = one_real_place(1.0, 1.0, 2);
    const auto profile = NumberFieldProfile::rationals();
    CHECK(std::abs(c_p_total(s, profile, 0.5) - kCpTotalHalfLambda) <= 1e-13);
    CHECK(c_p_total(s, profile, 1.0) == 0.0);
    CHECK(c_p_total(s, profile, 2.0) == 0.0);
    CHECK_THROWS_WITH_AS(c_p_total(s, profile, 0.0),
                         doctest::Contains("lambda_1 must be positive"), InputError);
}

TEST_CASE("disc integral closed form and the quoted constant disagree") {
    CHECK(std::abs(disc_integral(1.0, 0) - 1.0) <= 1e-15);
    CHECK(std::abs(disc_integral(2.0, 3) - std::pow(2.0, 8) / 4.0) <= 1e-12);
    const OrderConstant c = order_constant(1.0, 0);
    CHECK(std::abs(c.bound_form - 2.0) <= 1e-15);
    CHECK(std::abs(c.disc_form - 1.0) <= 1e-15);
    CHECK(c.bound_form != c.disc_form);
    CHECK_THROWS_AS(disc_integral(-1.0, 0), InputError);
    CHECK_THROWS_AS(disc_integral(1.0, -1), InputError);
}

TEST_CASE("quadrature oracle confirms the closed-form disc integral") {
    for (double r : {0.5, 1.0, 2.0})
        for (int k = 0; k <= 6; ++k)
            CHECK(std::abs(testing::simpson_disc_integral(r, k) -
                           disc_integral(r, k)) <= 1e-6);
}

TEST_CASE("volume bound on the rationals") {
    const auto profile = NumberFieldProfile::rationals();

    // vol = pi gives the unit metric, chi = 0
    const BoundReport unit = volume_chi_bound(profile, {kPi}, 1.0, 1e-9);
    REQUIRE(unit.lhs.has_value());
    CHECK(std::abs(*unit.lhs) <= 1e-15);
    CHECK(std::abs(unit.rhs - (-0.5 * std::log(kPi) + 1.0)) <= 1e-14);
    CHECK(unit.verdict == "holds");
    CHECK(!unit.provenance.empty());

    // same data with zero constant: rhs < lhs, violated
    const BoundReport tight = volume_chi_bound(profile, {kPi}, 0.0, 1e-9);
    CHECK(tight.verdict == "violated");

    // vol = 4 pi scales the norm: chi = -log 2
    const BoundReport scaled = volume_chi_bound(profile, {4.0 * kPi}, 0.0, 1e-9);
    REQUIRE(scaled.lhs.has_value());
    CHECK(std::abs(*scaled.lhs - (-std::log(2.0))) <= 1e-14);
}

TEST_CASE("volume bound slack is invariant under volume rescaling") {
    const auto profile = NumberFieldProfile::rationals();
    const BoundReport base = volume_chi_bound(profile, {2.0}, 0.3, 1e-9);
    const double t4 = std::pow(1.7, 4);
    const BoundReport moved = volume_chi_bound(profile, {2.0 * t4}, 0.3, 1e-9);
    REQUIRE(base.slack.has_value());
    REQUIRE(moved.slack.has_value());
    CHECK(std::abs(*base.slack - *moved.slack) <= 1e-12);
    CHECK_THROWS_WITH_AS(volume_chi_bound(profile, {1.0, 2.0}, 0.0, 1e-9),
                         doctest::Contains("one entry per infinite place"),
                         InputError);
}

TEST_CASE("self-intersection bound assembly") {
    const auto profile = NumberFieldProfile::rationals();

    const BoundReport flat =
        self_intersection_bound({1.0, 1.0}, profile, 2, 0.7, std::nullopt, 1e-9);
    CHECK(std::abs(flat.rhs - 0.7) <= 1e-15);
    CHECK(flat.verdict == "unevaluated");
    CHECK(!flat.lhs.has_value());

    const BoundReport halves =
        self_intersection_bound({0.5, 0.5}, profile, 2, 0.0, std::nullopt, 1e-9);
    CHECK(std::abs(halves.rhs - 16.6355323334386874260) <= 1e-13); // 24 log 2

    // doubling every minimum lowers the bound by 12 deg g log 2
    const BoundReport doubled =
        self_intersection_bound({1.0, 1.0}, profile, 2, 0.0, std::nullopt, 1e-9);
    CHECK(std::abs((halves.rhs - doubled.rhs) - 24.0 * std::log(2.0)) <= 1e-12);

    const BoundReport judged =
        self_intersection_bound({0.5, 0.5}, profile, 2, 0.0, 10.0, 1e-9);
    CHECK(judged.verdict == "holds");
    const BoundReport broken =
        self_intersection_bound({0.5, 0.5}, profile, 2, 0.0, 20.0, 1e-9);
    CHECK(broken.verdict == "violated");

    CHECK_THROWS_WITH_AS(
        self_intersection_bound({1.0}, profile, 2, 0.0, std::nullopt, 1e-9),
        doctest::Contains("expected exactly genus successive minima"), InputError);
}

TEST_CASE("noether residual on synthetic data") {
    AnalyticInputs a;
    CHECK(noether_residual(a, 0.0) == 0.0);

    a.omega_omega = 12.0;
    CHECK(std::abs(noether_residual(a, 1.0)) <= 1e-15);

    a.omega_omega = 13.0; // +1 on the pairing moves the residual by -1
    CHECK(std::abs(noether_residual(a, 1.0) - (-1.0)) <= 1e-15);
}

TEST_CASE("noether residual weights places by their epsilon") {
    AnalyticInputs a;
    a.infinite_places = {InfinitePlaceData{1.0, 0.25, 1.0, std::nullopt},
                         InfinitePlaceData{2.0, 0.5, 1.0, std::nullopt}};
    a.finite_places = {FinitePlaceData{2, 0.75}};
    a.omega_omega = 2.0;
    a.b_g = 0.5;
    // lhs = 12 chi + 6*1*0.25 + 6*2*0.5; rhs = 2 + log(2)*0.75 + 0.5
    const double chi = 0.125;
    const double expected =
        (12.0 * chi + 1.5 + 6.0) - (2.0 + std::log(2.0) * 0.75 + 0.5);
    CHECK(std::abs(noether_residual(a, chi) - expected) <= 1e-15);
}

TEST_CASE("surface residuals on synthetic data") {
    AnalyticInputs zero;
    const SurfaceResiduals at_zero = rr_surface_residual(zero, 0.0, 0.0);
    CHECK(at_zero.rr == 0.0);
    CHECK(at_zero.com == 0.0);

    AnalyticInputs a;
    a.l_l_omega_dual = 2.0;
    const SurfaceResiduals halved = rr_surface_residual(a, 1.0, 0.0);
    CHECK(std::abs(halved.rr) <= 1e-15); // 1 = (1/2) * 2

    AnalyticInputs b;
    b.deg_det_l2 = 3.0;
    b.l_f_omega = 4.0;
    b.omega_x_f_omega = 8.0;
    const SurfaceResiduals com_zero = rr_surface_residual(b, 3.0, 0.0);
    CHECK(std::abs(com_zero.com) <= 1e-15); // 3 - (3 - 2 + 2) = 0
}

TEST_CASE("wilms floor values and flags") {
    CHECK(std::abs(wilms_floor(2) - kWilmsG2) <= 1e-12);
    CHECK(std::abs(wilms_floor(3) - kWilmsG3) <= 1e-12);
    CHECK(std::abs(wilms_floor(3) - 1.5 * wilms_floor(2)) <= 1e-12);
    CHECK_THROWS_WITH_AS(wilms_floor(1), doctest::Contains("genus must be >= 2"),
                         InputError);

    AnalyticInputs a;
    a.infinite_places = {
        InfinitePlaceData{1.0, 0.0, 1.0, kWilmsG2 - 1.0}, // below the floor
        InfinitePlaceData{1.0, 0.0, 1.0, 0.0},            // fine
        InfinitePlaceData{1.0, 0.0, 1.0, std::nullopt},   // not supplied
    };
    const auto flags = wilms_violations(a, 2);
    REQUIRE(flags.size() == 1);
    CHECK(flags.front() == 0);
}

TEST_CASE("analytic input validation") {
    AnalyticInputs a;
    a.infinite_places = {InfinitePlaceData{1.0, 0.0, -1.0, std::nullopt}};
    CHECK_THROWS_WITH_AS(require_valid_analytic(a),
                         doctest::Contains("arakelov_volume must be positive"),
                         InputError);
    AnalyticInputs b;
    b.finite_places = {FinitePlaceData{1, 0.0}};
    CHECK_THROWS_WITH_AS(require_valid_analytic(b),
                         doctest::Contains("finite place q_v >= 2"), InputError);
    AnalyticInputs c;
    c.finite_places = {FinitePlaceData{2, -0.5}};
    CHECK_THROWS_WITH_AS(require_valid_analytic(c),
                         doctest::Contains("delta_v must be nonnegative"),
                         InputError);
}
