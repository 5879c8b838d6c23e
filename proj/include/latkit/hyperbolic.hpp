#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace latkit {

using Point = std::complex<double>; // upper half-plane, Im > 0

// Element of PSL2(R): det normalized to 1 and the first nonzero entry of
// (a, b, c, d) made positive, so each group element has one representation.
struct Mobius {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mobius normalized(double a, double b, double c, double d);
    Mobius inverse() const;
    Mobius operator*(const Mobius& rhs) const; // composition g∘h
    bool is_identity(double tol = 1e-10) const;
    bool approx_equal(const Mobius& rhs, double tol = 1e-10) const;
};

struct FuchsianGroup {
    std::vector<Mobius> generators;
};

// A geodesic of the upper half-plane: a vertical line x = x0 or a Euclidean
// semicircle centered on the real axis.
struct Geodesic {
    bool is_vertical = false;
    double x0 = 0.0;     // vertical line abscissa
    double center = 0.0; // semicircle center on R
    double radius = 0.0; // semicircle radius, > 0
};

struct BisectorEntry {
    Mobius element;        // the group element gamma
    Point mirror;          // gamma^{-1} z
    Geodesic geodesic;     // bisector of z and gamma^{-1} z
    double distance = 0.0; // Euclidean distance from z to the geodesic
};

struct DirichletData {
    Point base_point;
    int word_length = 0;
    std::vector<BisectorEntry> bisectors;
    double r_z = 0.0;            // min(Im z, nearest bisector), Euclidean
    double r_z_hyperbolic = 0.0; // comparison value: min hyperbolic distance
                                 // from z to a bisector geodesic
};

// arccosh(1 + |z-w|^2 / (2 Im z Im w)).  Throws on Im <= 0.
double hyp_distance(Point z, Point w);

// (az + b) / (cz + d).
Point mobius_apply(const Mobius& g, Point z);

// All distinct nonidentity products of at most max_len generators and
// inverses, deduplicated in PSL2 at tolerance 1e-10 and ordered by word
// length then lexicographic entries.  `max_elements` caps the combinatorial
// growth (BudgetError beyond it).
std::vector<Mobius> enumerate_group(const FuchsianGroup& g, int max_len,
                                    std::size_t max_elements = 200'000);

// Perpendicular bisector {tau : d(z,tau) = d(w,tau)}; a vertical line when
// Im z = Im w, else a semicircle.  Throws on z = w.
Geodesic bisector(Point z, Point w);

// Euclidean distance from a point of H to a geodesic: |Re z - x0| for a
// vertical line, ||z - c| - rho| for a semicircle.
double euclidean_distance(Point z, const Geodesic& geo);

// Hyperbolic distance from a point to a complete geodesic; the comparison
// variant behind DirichletData::r_z_hyperbolic.
double hyperbolic_distance_to_geodesic(Point z, const Geodesic& geo);

// Inscribed-radius data of the Dirichlet domain truncation at word length
// max_len: r_z = min(Im z, min over enumerated gamma of the distance from z
// to the bisector of z and gamma^{-1} z).  Monotone nonincreasing in
// max_len.  Throws when an enumerated element fixes z.
DirichletData dirichlet_radius(const FuchsianGroup& g, Point z, int max_len,
                               std::size_t max_elements = 200'000);

// SVG sketch of the bisectors, the base point and the inscribed ball.
std::string dirichlet_svg(const DirichletData& data);

} // namespace latkit
