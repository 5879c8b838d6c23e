#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latkit/errors.hpp"
#include "latkit/hyperbolic.hpp"

#include "support/oracles.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace latkit;

namespace {

// z -> 2z in PSL2(R)
Mobius doubling() {
    return Mobius::normalized(std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0));
}

Point on_geodesic(const Geodesic& g, double t) {
    if (g.is_vertical)
        return Point(g.x0, std::exp(t));
    // open parametrization of the semicircle, endpoints excluded
    const double angle = std::numbers::pi / (1.0 + std::exp(-t));
    return Point(g.center + g.radius * std::cos(angle),
                 g.radius * std::sin(angle));
}

} // namespace

TEST_CASE("hyperbolic distance on pinned pairs") {
    CHECK(std::abs(hyp_distance(Point(0, 1), Point(0, 2)) - std::log(2.0)) <= 1e-14);
    CHECK(hyp_distance(Point(0.3, 0.7), Point(0.3, 0.7)) == 0.0);
    CHECK(std::abs(hyp_distance(Point(0, 1), Point(1, 1)) -
                   std::acosh(1.5)) <= 1e-14);
    // frozen decimal of arccosh(3/2)
    CHECK(std::abs(hyp_distance(Point(0, 1), Point(1, 1)) -
                   0.962423650119206894996) <= 1e-14);
}

TEST_CASE("hyperbolic distance rejects the closed lower half-plane") {
    CHECK_THROWS_AS(hyp_distance(Point(0, 0), Point(0, 1)), InputError);
    CHECK_THROWS_AS(hyp_distance(Point(0, 1), Point(0, -2)), InputError);
}

TEST_CASE("distance symmetry and triangle inequality on random triples") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Point a = testing::random_point(rng);
        const Point b = testing::random_point(rng);
        const Point c = testing::random_point(rng);
        const double ab = hyp_distance(a, b);
        CHECK(std::abs(ab - hyp_distance(b, a)) <= 1e-13);
        CHECK(ab <= hyp_distance(a, c) + hyp_distance(c, b) + 1e-12);
    }
}

TEST_CASE("mobius_apply on pinned transforms") {
    const Mobius inversion = Mobius::normalized(0, -1, 1, 0);
    const Point fixed = mobius_apply(inversion, Point(0, 1));
    CHECK(std::abs(fixed.real()) <= 1e-15);
    CHECK(std::abs(fixed.imag() - 1.0) <= 1e-15);

    const Mobius shift = Mobius::normalized(1, 1, 0, 1);
    const Point moved = mobius_apply(shift, Point(0, 1));
    CHECK(std::abs(moved.real() - 1.0) <= 1e-15);
    CHECK(std::abs(moved.imag() - 1.0) <= 1e-15);

    const Point doubled = mobius_apply(doubling(), Point(0, 1));
    CHECK(std::abs(doubled.real()) <= 1e-15);
    CHECK(std::abs(doubled.imag() - 2.0) <= 1e-13);
}

TEST_CASE("mobius normalization canonicalizes the sign and rejects det <= 0") {
    const Mobius negated = Mobius::normalized(-1, 0, 0, -1);
    CHECK(negated.is_identity());
    CHECK_THROWS_AS(Mobius::normalized(1, 0, 0, -1), InputError);
    CHECK_THROWS_AS(Mobius::normalized(1, 2, 2, 4), InputError);
}

TEST_CASE("mobius composition matches pointwise application") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Mobius g = testing::random_sl2(rng);
        const Mobius h = testing::random_sl2(rng);
        const Point z = testing::random_point(rng);
        const Point via_product = mobius_apply(g * h, z);
        const Point via_chain = mobius_apply(g, mobius_apply(h, z));
        CHECK(std::abs(via_product - via_chain) <= 1e-12);
    }
}

TEST_CASE("mobius invariance of the distance") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const Mobius g = testing::random_sl2(rng);
        const Point z = testing::random_point(rng);
        const Point w = testing::random_point(rng);
        const double before = hyp_distance(z, w);
        const double after = hyp_distance(mobius_apply(g, z), mobius_apply(g, w));
        CHECK(std::abs(before - after) <= 1e-12);
    }
}

TEST_CASE("group enumeration of the doubling group") {
    FuchsianGroup g{{doubling()}};
    const auto words = enumerate_group(g, 2);
    REQUIRE(words.size() == 4); // 2z, z/2, 4z, z/4
    // ordered by word length first: scales {1/2, 2} precede {1/4, 4}
    std::multiset<double> head{mobius_apply(words[0], Point(0, 1)).imag(),
                               mobius_apply(words[1], Point(0, 1)).imag()};
    std::multiset<double> tail{mobius_apply(words[2], Point(0, 1)).imag(),
                               mobius_apply(words[3], Point(0, 1)).imag()};
    CHECK(std::abs(*head.begin() - 0.5) <= 1e-12);
    CHECK(std::abs(*head.rbegin() - 2.0) <= 1e-12);
    CHECK(std::abs(*tail.begin() - 0.25) <= 1e-12);
    CHECK(std::abs(*tail.rbegin() - 4.0) <= 1e-12);

    const auto single = enumerate_group(g, 1);
    CHECK(single.size() == 2);
}

TEST_CASE("group enumeration deduplicates inverse-listed generators") {
    FuchsianGroup g{{doubling(), doubling().inverse()}};
    CHECK(enumerate_group(g, 1).size() == 2);
}

TEST_CASE("free two-generator group at word length one") {
    FuchsianGroup g{{Mobius::normalized(1, 2, 0, 1), Mobius::normalized(1, 0, 2, 1)}};
    CHECK(enumerate_group(g, 1).size() == 4);
}

TEST_CASE("group enumeration rejects identity generators and tiny budgets") {
    FuchsianGroup empty;
    CHECK_THROWS_AS(enumerate_group(empty, 1), InputError);
    FuchsianGroup with_id{{Mobius::normalized(1, 0, 0, 1)}};
    CHECK_THROWS_AS(enumerate_group(with_id, 1), InputError);
    FuchsianGroup g{{Mobius::normalized(1, 2, 0, 1), Mobius::normalized(1, 0, 2, 1)}};
    CHECK_THROWS_AS(enumerate_group(g, 3, 5), BudgetError);
}

TEST_CASE("bisectors of pinned pairs") {
    const Geodesic circ = bisector(Point(0, 1), Point(0, 0.5));
    CHECK(!circ.is_vertical);
    CHECK(std::abs(circ.center) <= 1e-12);
    CHECK(std::abs(circ.radius - 1.0 / std::sqrt(2.0)) <= 1e-12);

    const Geodesic line = bisector(Point(0, 1), Point(2, 1));
    CHECK(line.is_vertical);
    CHECK(std::abs(line.x0 - 1.0) <= 1e-12);

    const Geodesic wide = bisector(Point(0, 1), Point(0, 4));
    CHECK(!wide.is_vertical);
    CHECK(std::abs(wide.radius - 2.0) <= 1e-12);

    CHECK_THROWS_AS(bisector(Point(0, 1), Point(0, 1)), InputError);
}

TEST_CASE("bisector points are equidistant, sampled") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        const Point z = testing::random_point(rng);
        Point w = testing::random_point(rng);
        if (std::abs(z - w) < 1e-3)
            w += Point(0.5, 0.5);
        const Geodesic geo = bisector(z, w);
        for (int i = 0; i < 100; ++i) {
            const double t = -3.0 + 6.0 * (i + 0.5) / 100.0;
            const Point tau = on_geodesic(geo, t);
            CHECK(std::abs(hyp_distance(z, tau) - hyp_distance(w, tau)) <= 1e-9);
        }
    }
}

TEST_CASE("euclidean distance to geodesics") {
    Geodesic line;
    line.is_vertical = true;
    line.x0 = 1.0;
    CHECK(std::abs(euclidean_distance(Point(0, 1), line) - 1.0) <= 1e-15);

    Geodesic circ;
    circ.center = 0.0;
    circ.radius = 1.0;
    CHECK(std::abs(euclidean_distance(Point(0, 2), circ) - 1.0) <= 1e-15);
    CHECK(std::abs(euclidean_distance(Point(0, 0.25), circ) - 0.75) <= 1e-15);
}

TEST_CASE("hyperbolic distance to geodesics") {
    Geodesic line;
    line.is_vertical = true;
    line.x0 = 0.0;
    // distance from x + iy to the imaginary axis is asinh(|x|/y)
    CHECK(std::abs(hyperbolic_distance_to_geodesic(Point(1, 1), line) -
                   std::asinh(1.0)) <= 1e-13);
    CHECK(hyperbolic_distance_to_geodesic(Point(0, 3), line) <= 1e-13);

    Geodesic circ;
    circ.center = 0.0;
    circ.radius = 1.0;
    // nearest point of the unit semicircle to 2i is i
    CHECK(std::abs(hyperbolic_distance_to_geodesic(Point(0, 2), circ) -
                   hyp_distance(Point(0, 2), Point(0, 1))) <= 1e-13);
}

TEST_CASE("dirichlet radius of the doubling group at i") {
    FuchsianGroup g{{doubling()}};
    const double expected = 1.0 - 1.0 / std::sqrt(2.0);
    for (int len = 1; len <= 3; ++len) {
        const DirichletData d = dirichlet_radius(g, Point(0, 1), len);
        CHECK(std::abs(d.r_z - expected) <= 1e-12);
        CHECK(d.word_length == len);
        // nearest bisector along the imaginary axis sits at hyperbolic
        // distance (1/2) log 2
        CHECK(std::abs(d.r_z_hyperbolic - 0.5 * std::log(2.0)) <= 1e-12);
    }
}

TEST_CASE("dirichlet radius caps at the real axis") {
    FuchsianGroup g{{Mobius::normalized(1, 5, 0, 1)}};
    const DirichletData d = dirichlet_radius(g, Point(0, 1), 2);
    CHECK(std::abs(d.r_z - 1.0) <= 1e-14); // Im z beats the x = 5/2 bisector
    REQUIRE(!d.bisectors.empty());
    CHECK(d.bisectors.front().geodesic.is_vertical);
    CHECK(std::abs(d.bisectors.front().distance - 2.5) <= 1e-12);
}

TEST_CASE("dirichlet radius is monotone in the word length") {
    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 5) {
        FuchsianGroup g{{testing::random_sl2(rng), testing::random_sl2(rng)}};
        const Point z = testing::random_point(rng);
        try {
            double prev = dirichlet_radius(g, z, 1).r_z;
            for (int len = 2; len <= 3; ++len) {
                const double cur = dirichlet_radius(g, z, len).r_z;
                CHECK(cur <= prev + 1e-12);
                prev = cur;
            }
            ++done;
        } catch (const InputError&) {
            // a drawn element fixed z; redraw
        }
    }
}

TEST_CASE("dirichlet radius reports a stabilizing element") {
    FuchsianGroup g{{Mobius::normalized(0, -1, 1, 0)}}; // fixes i
    CHECK_THROWS_WITH_AS(dirichlet_radius(g, Point(0, 1), 1),
                         doctest::Contains("fixes the base point"), InputError);
}

TEST_CASE("dirichlet svg sketch is self-contained") {
    FuchsianGroup g{{doubling()}};
    const DirichletData d = dirichlet_radius(g, Point(0, 1), 2);
    const std::string svg = dirichlet_svg(d);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
    CHECK(svg == dirichlet_svg(d)); // deterministic
}
