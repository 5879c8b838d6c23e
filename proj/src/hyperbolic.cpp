#include "latkit/hyperbolic.hpp"

#include "latkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace latkit {

namespace {

bool lex_less(const Mobius& x, const Mobius& y) {
    const double ax[4] = {x.a, x.b, x.c, x.d};
    const double ay[4] = {y.a, y.b, y.c, y.d};
    for (int i = 0; i < 4; ++i) {
        if (ax[i] < ay[i] - 1e-12) return true;
        if (ax[i] > ay[i] + 1e-12) return false;
    }
    return false;
}

} // namespace

Mobius Mobius::normalized(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!(det > 0.0))
        throw InputError("mobius matrix must have positive determinant");
    const double s = std::sqrt(det);
    Mobius g{a / s, b / s, c / s, d / s};
    const double entries[4] = {g.a, g.b, g.c, g.d};
    for (double e : entries) {
        if (e > 1e-14) break;
        if (e < -1e-14) {
            g.a = -g.a; g.b = -g.b; g.c = -g.c; g.d = -g.d;
            break;
        }
    }
    return g;
}

Mobius Mobius::inverse() const { return normalized(d, -b, -c, a); }

Mobius Mobius::operator*(const Mobius& rhs) const {
    return normalized(a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                      c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d);
}

bool Mobius::is_identity(double tol) const {
    return std::abs(a - 1.0) <= tol && std::abs(b) <= tol && std::abs(c) <= tol &&
           std::abs(d - 1.0) <= tol;
}

bool Mobius::approx_equal(const Mobius& rhs, double tol) const {
    return std::abs(a - rhs.a) <= tol && std::abs(b - rhs.b) <= tol &&
           std::abs(c - rhs.c) <= tol && std::abs(d - rhs.d) <= tol;
}

double hyp_distance(Point z, Point w) {
    if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
        throw InputError("hyp_distance requires points with positive imaginary part");
    const double q = std::norm(z - w) / (2.0 * z.imag() * w.imag());
    return std::acosh(1.0 + q);
}

Point mobius_apply(const Mobius& g, Point z) {
    if (!(z.imag() > 0.0))
        throw InputError("mobius_apply requires a point with positive imaginary part");
    return (g.a * z + g.b) / (g.c * z + g.d);
}

std::vector<Mobius> enumerate_group(const FuchsianGroup& g, int max_len,
                                    std::size_t max_elements) {
    if (g.generators.empty())
        throw InputError("group has no generators");
    if (max_len < 1)
        throw InputError("max_len must be >= 1");

    std::vector<Mobius> alphabet;
    for (const auto& gen : g.generators) {
        const Mobius n = Mobius::normalized(gen.a, gen.b, gen.c, gen.d);
        if (n.is_identity())
            throw InputError("identity listed as a generator");
        bool dup = false;
        for (const auto& seen : alphabet)
            if (seen.approx_equal(n)) dup = true;
        if (!dup) alphabet.push_back(n);
        const Mobius inv = n.inverse();
        dup = false;
        for (const auto& seen : alphabet)
            if (seen.approx_equal(inv)) dup = true;
        if (!dup) alphabet.push_back(inv);
    }

    std::vector<Mobius> all;            // deduplicated nonidentity elements
    std::vector<int> word_of;           // word length at first appearance
    std::vector<Mobius> frontier = {Mobius{}}; // identity seeds length-1 words

    for (int len = 1; len <= max_len; ++len) {
        std::vector<Mobius> next;
        for (const auto& w : frontier) {
            for (const auto& letter : alphabet) {
                const Mobius prod = w * letter;
                if (prod.is_identity()) continue;
                bool dup = false;
                for (const auto& seen : all)
                    if (seen.approx_equal(prod)) { dup = true; break; }
                if (dup) continue;
                all.push_back(prod);
                word_of.push_back(len);
                next.push_back(prod);
                if (all.size() > max_elements)
                    throw BudgetError("group enumeration budget exceeded");
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    // Deterministic order: word length, then lexicographic entries.
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        if (word_of[i] != word_of[j]) return word_of[i] < word_of[j];
        return lex_less(all[i], all[j]);
    });
    std::vector<Mobius> out;
    out.reserve(all.size());
    for (std::size_t i : idx) out.push_back(all[i]);
    return out;
}

Geodesic bisector(Point z, Point w) {
    if (!(z.imag() > 0.0) || !(w.imag() > 0.0))
        throw InputError("bisector requires points in the upper half-plane");
    const double scale = std::max({1.0, std::abs(z), std::abs(w)});
    if (std::abs(z - w) <= 1e-13 * scale)
        throw InputError("bisector undefined for equal points");

    // Equidistance reduces to Im(w) |tau - z|^2 = Im(z) |tau - w|^2, whose
    // imaginary cross terms cancel; with A = Im w - Im z the locus is
    // A |tau|^2 - 2 Re(tau) B + C = 0.
    const double yz = z.imag(), yw = w.imag();
    const double A = yw - yz;
    const double B = yw * z.real() - yz * w.real();
    const double C = yw * std::norm(z) - yz * std::norm(w);

    Geodesic geo;
    if (std::abs(A) <= 1e-13 * scale) {
        geo.is_vertical = true;
        geo.x0 = C / (2.0 * B);
        return geo;
    }
    geo.center = B / A;
    const double radius_sq = geo.center * geo.center - C / A;
    if (!(radius_sq > 0.0))
        throw InputError("degenerate bisector");
    geo.radius = std::sqrt(radius_sq);
    return geo;
}

double euclidean_distance(Point z, const Geodesic& geo) {
    if (geo.is_vertical)
        return std::abs(z.real() - geo.x0);
    return std::abs(std::abs(z - Point(geo.center, 0.0)) - geo.radius);
}

double hyperbolic_distance_to_geodesic(Point z, const Geodesic& geo) {
    if (!(z.imag() > 0.0))
        throw InputError("point must lie in the upper half-plane");
    if (geo.is_vertical)
        return std::asinh(std::abs(z.real() - geo.x0) / z.imag());
    const double q = std::abs(std::norm(z - Point(geo.center, 0.0)) - geo.radius * geo.radius);
    return std::asinh(q / (2.0 * geo.radius * z.imag()));
}

DirichletData dirichlet_radius(const FuchsianGroup& g, Point z, int max_len,
                               std::size_t max_elements) {
    if (!(z.imag() > 0.0))
        throw InputError("base point must lie in the upper half-plane");
    const auto elements = enumerate_group(g, max_len, max_elements);

    DirichletData data;
    data.base_point = z;
    data.word_length = max_len;
    data.r_z = z.imag(); // the inscribed ball must stay inside H
    data.r_z_hyperbolic = std::numeric_limits<double>::infinity();

    for (const auto& gamma : elements) {
        const Point mirror = mobius_apply(gamma.inverse(), z);
        if (std::abs(mirror - z) <= 1e-12 * std::max(1.0, std::abs(z))) {
            std::ostringstream msg;
            msg << "group element fixes the base point (torsion or stabilizer)";
            throw InputError(msg.str());
        }
        BisectorEntry entry;
        entry.element = gamma;
        entry.mirror = mirror;
        entry.geodesic = bisector(z, mirror);
        entry.distance = euclidean_distance(z, entry.geodesic);
        data.r_z = std::min(data.r_z, entry.distance);
        // Comparison variant: the inscribed radius measured hyperbolically
        // (largest hyperbolic ball; no real-axis cap since such balls never
        // leave H).
        data.r_z_hyperbolic = std::min(
            data.r_z_hyperbolic, hyperbolic_distance_to_geodesic(z, entry.geodesic));
        data.bisectors.push_back(std::move(entry));
    }
    return data;
}

std::string dirichlet_svg(const DirichletData& data) {
    const Point z = data.base_point;
    double extent = std::max(2.0 * data.r_z, 1.0);
    for (const auto& e : data.bisectors) {
        if (e.geodesic.is_vertical)
            extent = std::max(extent, std::abs(e.geodesic.x0 - z.real()) * 1.2);
        else
            extent = std::max(extent, (std::abs(e.geodesic.center - z.real()) +
                                       e.geodesic.radius) * 1.1);
    }
    extent = std::min(extent, 50.0 * std::max(1.0, z.imag()));
    const double x_min = z.real() - extent, x_max = z.real() + extent;
    const double y_max = std::max(2.0 * z.imag(), extent);
    const double w = 640.0, h = 480.0;
    const double sx = w / (x_max - x_min), sy = h / y_max;
    const double s = std::min(sx, sy);
    auto px = [&](double x) { return (x - x_min) * s; };
    auto py = [&](double y) { return h - y * s; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    svg << "  <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << w << "\" y2=\"" << py(0)
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const auto& e : data.bisectors) {
        if (e.geodesic.is_vertical) {
            svg << "  <line x1=\"" << px(e.geodesic.x0) << "\" y1=\"" << py(0)
                << "\" x2=\"" << px(e.geodesic.x0)
                << "\" y2=\"0\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        } else {
            const double c = e.geodesic.center, r = e.geodesic.radius;
            svg << "  <path d=\"M " << px(c - r) << " " << py(0) << " A " << r * s << " "
                << r * s << " 0 0 1 " << px(c + r) << " " << py(0)
                << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        }
    }
    svg << "  <circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag()) << "\" r=\""
        << data.r_z * s
        << "\" fill=\"rgba(200,80,80,0.15)\" stroke=\"firebrick\" stroke-width=\"1\"/>\n";
    svg << "  <circle cx=\"" << px(z.real()) << "\" cy=\"" << py(z.imag())
        << "\" r=\"3\" fill=\"firebrick\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace latkit
