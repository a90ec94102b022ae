#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rov/errors.hpp"
#include "rov/kernel.hpp"
#include "rov/params.hpp"
#include "rov/region.hpp"

// Certification battery: geometric checks on sampled curves (closed, simple,
// convex, containment) and analytic identity checks tying the sampled curve
// back to the closed-form fields.

namespace rov {

struct CertReport {
    std::string name;
    bool pass = false;
    double margin = 0.0;
    std::vector<Complex> witnesses;
    std::string detail;
};

// Counterclockwise polygon discretizing a Jordan curve.
struct Polygon {
    std::vector<Complex> vertices;
    double diameter = 0.0;
};

enum class Containment { Inside, Outside, OnBoundary };

namespace detail {

inline double cross(Complex u, Complex v) {
    return u.real() * v.imag() - u.imag() * v.real();
}

inline double polygon_diameter(std::span<const Complex> pts) {
    double d = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

inline double signed_area(std::span<const Complex> v) {
    double area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a = v[i];
        const Complex b = v[(i + 1) % v.size()];
        area += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * area;
}

inline double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::real(std::conj(d) * (p - a)) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

}  // namespace detail

/// Builds a counterclockwise polygon from ordered curve samples: drops
/// consecutive vertices closer than 1e-15 * diameter (closing edge included)
/// and reverses clockwise input.  Throws DegeneratePolygon when fewer than
/// three vertices survive.
inline Polygon make_polygon(std::span<const Complex> pts) {
    Polygon poly;
    poly.diameter = detail::polygon_diameter(pts);
    const double eps = 1e-15 * poly.diameter;
    for (const Complex& w : pts) {
        if (poly.vertices.empty() || std::abs(w - poly.vertices.back()) > eps)
            poly.vertices.push_back(w);
    }
    while (poly.vertices.size() > 1 &&
           std::abs(poly.vertices.front() - poly.vertices.back()) <= eps)
        poly.vertices.pop_back();
    if (poly.vertices.size() < 3)
        throw DegeneratePolygon("fewer than 3 distinct vertices");
    if (detail::signed_area(poly.vertices) < 0.0)
        std::reverse(poly.vertices.begin(), poly.vertices.end());
    return poly;
}

inline Polygon make_polygon(const BoundaryCurve& curve) {
    std::vector<Complex> pts;
    pts.reserve(curve.samples.size());
    for (const auto& s : curve.samples) pts.push_back(s.w);
    return make_polygon(pts);
}

/// Convexity: every cross product of consecutive edge vectors stays above
/// -tol_rel * diameter^2.  Margin is the smallest cross product; the witness
/// is the vertex where it occurs.
inline CertReport check_convex(const Polygon& poly, double tol_rel = 1e-9) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    CertReport rep{"convex", true, 0.0, {}, ""};
    double worst = std::numeric_limits<double>::infinity();
    std::size_t worst_i = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex e1 = v[(i + 1) % n] - v[i];
        const Complex e2 = v[(i + 2) % n] - v[(i + 1) % n];
        const double c = detail::cross(e1, e2);
        if (c < worst) {
            worst = c;
            worst_i = (i + 1) % n;
        }
    }
    rep.margin = worst;
    rep.pass = worst >= -tol_rel * poly.diameter * poly.diameter;
    if (!rep.pass) rep.witnesses.push_back(v[worst_i]);
    return rep;
}

/// Simplicity: no two non-adjacent edges intersect.  Orientation signs are
/// taken with an epsilon band of 1e-14 * diameter^2 so that the nearly
/// collinear edges of very flat curves do not false-positive.
inline CertReport check_simple(const Polygon& poly) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    const double band = 1e-14 * poly.diameter * poly.diameter;
    auto sgn = [band](double x) { return x > band ? 1 : (x < -band ? -1 : 0); };

    CertReport rep{"simple", true, 0.0, {}, ""};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex a = v[i], b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            // skip adjacent edges (shared endpoint), including the wrap pair
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            const Complex c = v[j], d = v[(j + 1) % n];
            const int o1 = sgn(detail::cross(b - a, c - a));
            const int o2 = sgn(detail::cross(b - a, d - a));
            const int o3 = sgn(detail::cross(d - c, a - c));
            const int o4 = sgn(detail::cross(d - c, b - c));
            bool hit = (o1 * o2 < 0) && (o3 * o4 < 0);
            if (!hit && (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0)) {
                // collinear within band: overlap decided on bounding boxes
                auto overlap = [](double p1, double p2, double q1, double q2) {
                    return std::max(std::min(p1, p2), std::min(q1, q2)) <=
                           std::min(std::max(p1, p2), std::max(q1, q2));
                };
                hit = (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) &&
                      overlap(a.real(), b.real(), c.real(), d.real()) &&
                      overlap(a.imag(), b.imag(), c.imag(), d.imag());
            }
            if (hit) {
                rep.pass = false;
                rep.witnesses = {a, b, c, d};
                rep.detail = "edges " + std::to_string(i) + " and " + std::to_string(j) +
                             " intersect";
                return rep;
            }
        }
    }
    return rep;
}

/// Winding-number classification of a point against the polygon, by summed
/// signed angles (branch-safe).  Distances within 1e-12 * diameter of an edge
/// classify as OnBoundary.
inline Containment classify_point(const Polygon& poly, Complex w) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        dist = std::min(dist, detail::point_segment_distance(w, v[i], v[(i + 1) % n]));
    if (dist <= 1e-12 * poly.diameter) return Containment::OnBoundary;

    double angle = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex u1 = v[i] - w;
        const Complex u2 = v[(i + 1) % n] - w;
        angle += std::atan2(detail::cross(u1, u2), std::real(std::conj(u1) * u2));
    }
    const double winding = angle / (2.0 * std::numbers::pi);
    return std::abs(winding - 1.0) < 0.5 ? Containment::Inside : Containment::Outside;
}

/// Interior containment.  Margin is the distance from w to the polygon
/// boundary, signed negative when w is outside or on it.
inline CertReport check_contains(const Polygon& poly, Complex w) {
    const auto& v = poly.vertices;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        dist = std::min(dist, detail::point_segment_distance(w, v[i], v[(i + 1) % v.size()]));

    CertReport rep{"contains", false, dist, {w}, ""};
    const Containment c = classify_point(poly, w);
    if (c == Containment::OnBoundary) {
        rep.detail = "OnBoundary";
        rep.margin = 0.0;
        return rep;
    }
    if (c == Containment::Outside) {
        rep.detail = "outside";
        rep.margin = -dist;
        return rep;
    }
    rep.pass = true;
    return rep;
}

// Tolerances of the analytic identity checks; independent of any quadrature
// tolerance because only closed rational forms enter.
inline constexpr double kIdentityTol = 1e-8;
inline constexpr double kMembershipSlack = 1e-12;
inline constexpr double kSupBoundSlack = 1e-10;
inline constexpr double kRootSlack = 1e-10;

struct PolarGrid {
    double radius = 0.9;
    int n_radial = 32;
    int n_angular = 32;
};

namespace detail {

// Shared sweep for the boundary-field identity
//   F''(z) - c(z) = r(z) * G'(z)/|G'(z)|
// checked in modulus and in phase on a polar grid, for n_theta boundary
// parameters.  Points with r below 1e-300 are skipped and counted.
template <class Field, class CR, class GPrime>
CertReport extremal_identity_sweep(const char* name, Field&& field, CR&& center_radius,
                                   GPrime&& gprime, const PolarGrid& grid, int n_theta) {
    CertReport rep{name, true, 0.0, {}, ""};
    long long skipped = 0;
    double worst_mod = 0.0, worst_phase = 0.0;
    Complex witness;
    for (int t = 1; t <= n_theta; ++t) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * t / n_theta;
        const Complex a = std::polar(1.0, theta);
        for (int i = 1; i <= grid.n_radial; ++i) {
            const double rho = grid.radius * i / grid.n_radial;
            for (int j = 0; j < grid.n_angular; ++j) {
                const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * j / grid.n_angular;
                const Complex z = std::polar(rho, phi);
                const CenterRadius cr = center_radius(z);
                if (std::abs(cr.radius) < 1e-300) {
                    ++skipped;
                    continue;
                }
                const Complex lhs = field(z, a) - cr.center;
                const Complex gp = gprime(z, theta);
                const double mod_res = std::abs(std::abs(lhs) - cr.radius);
                const Complex q = lhs * (std::abs(gp) / (cr.radius * gp));
                const double phase_res = std::abs(std::atan2(q.imag(), q.real()));
                const bool ok =
                    mod_res <= kIdentityTol * cr.radius && phase_res <= kIdentityTol;
                const double mod_rel = mod_res / std::abs(cr.radius);
                if (std::max(mod_rel, phase_res) > std::max(worst_mod, worst_phase)) witness = z;
                worst_mod = std::max(worst_mod, mod_rel);
                worst_phase = std::max(worst_phase, phase_res);
                if (!ok && rep.pass) {
                    rep.pass = false;
                    rep.witnesses.push_back(z);
                }
            }
        }
    }
    rep.margin = std::max(worst_mod, worst_phase);
    rep.detail = "worst modulus residual " + std::to_string(worst_mod) + ", worst phase residual " +
                 std::to_string(worst_phase) +
                 (skipped ? ", skipped " + std::to_string(skipped) + " degenerate points" : "");
    if (!rep.pass && rep.witnesses.empty()) rep.witnesses.push_back(witness);
    return rep;
}

inline std::pair<Complex, Complex> solve_quadratic(Complex a, Complex b, Complex c) {
    const Complex d = std::sqrt(b * b - 4.0 * a * c);
    const Complex q = (std::abs(b + d) >= std::abs(b - d)) ? -0.5 * (b + d) : -0.5 * (b - d);
    // q = -(b + sign d)/2 with the sign that avoids cancellation
    return {q / a, c / q};
}

}  // namespace detail

/// Identity F'' - c1 = r1 G'/|G'| on a polar grid, for n_theta boundary
/// parameters; modulus and phase residuals must both stay below 1e-8.
inline CertReport check_extremal_identity(const ClassBParams& p, const PolarGrid& grid,
                                          int n_theta = 16) {
    return detail::extremal_identity_sweep(
        "extremal_identity_b", [&](Complex z, Complex a) { return integrand_b(z, a, p); },
        [&](Complex z) { return center_radius_b(z, p); },
        [&](Complex z, double theta) { return g_integrand_b(z, theta, p.lambda, p.beta); }, grid,
        n_theta);
}

inline CertReport check_extremal_identity(const ClassPParams& p, const PolarGrid& grid,
                                          int n_theta = 16) {
    return detail::extremal_identity_sweep(
        "extremal_identity_p", [&](Complex z, Complex a) { return integrand_p(z, a, p); },
        [&](Complex z) { return center_radius_p(z, p); },
        [&](Complex z, double theta) { return g_integrand_p(z, theta, p.lambda); }, grid, n_theta);
}

/// Class-B membership of the extremal field: max over the grid of
/// |z F''(z)| <= bound (1 + 1e-12).  `bound` defaults to p.M; passing the
/// original M while p carries a corrupted one turns this into a tamper
/// detector.  Margin is (bound - max)/bound.
inline CertReport check_class_membership(const ClassBParams& p, Complex a, const PolarGrid& grid,
                                         double bound = -1.0) {
    if (bound <= 0.0) bound = p.M;
    CertReport rep{"class_membership_b", true, 0.0, {}, ""};
    double worst = 0.0;
    Complex witness;
    for (int i = 1; i <= grid.n_radial; ++i) {
        const double rho = grid.radius * i / grid.n_radial;
        for (int j = 0; j < grid.n_angular; ++j) {
            const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * j / grid.n_angular;
            const Complex z = std::polar(rho, phi);
            double v;
            try {
                v = std::abs(z * integrand_b(z, a, p));
            } catch (const DegenerateDenominator&) {
                v = std::numeric_limits<double>::infinity();
            }
            if (v > worst) {
                worst = v;
                witness = z;
            }
        }
    }
    rep.margin = (bound - worst) / bound;
    rep.pass = worst <= bound * (1.0 + kMembershipSlack);
    rep.detail = "max |z F''| = " + std::to_string(worst) + " vs bound " + std::to_string(bound);
    if (!rep.pass) rep.witnesses.push_back(witness);
    return rep;
}

/// Class-P membership: min over the grid of Re(z H''(z)) > -bound (1+1e-12).
inline CertReport check_class_membership(const ClassPParams& p, Complex a, const PolarGrid& grid,
                                         double bound = -1.0) {
    if (bound <= 0.0) bound = p.M;
    CertReport rep{"class_membership_p", true, 0.0, {}, ""};
    double worst = std::numeric_limits<double>::infinity();
    Complex witness;
    for (int i = 1; i <= grid.n_radial; ++i) {
        const double rho = grid.radius * i / grid.n_radial;
        for (int j = 0; j < grid.n_angular; ++j) {
            const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * j / grid.n_angular;
            const Complex z = std::polar(rho, phi);
            double v;
            try {
                v = std::real(z * integrand_p(z, a, p));
            } catch (const DegenerateDenominator&) {
                v = -std::numeric_limits<double>::infinity();
            }
            if (v < worst) {
                worst = v;
                witness = z;
            }
        }
    }
    rep.margin = (worst + bound) / bound;
    rep.pass = worst > -bound * (1.0 + kMembershipSlack);
    rep.detail = "min Re(z H'') = " + std::to_string(worst) + " vs bound " + std::to_string(-bound);
    if (!rep.pass) rep.witnesses.push_back(witness);
    return rep;
}

/// Sup bound for lambda = 0: max over the grid and over n_a unimodular a of
/// (1 - |z|^4) |H''_{a,0}(z)| <= 4M (1 + 1e-10).
inline CertReport check_sup_bound_p(const ClassPParams& p, const PolarGrid& grid, int n_a = 32) {
    if (p.lambda != Complex(0.0, 0.0))
        throw ValidationError("InvalidLambda", "sup bound check requires lambda = 0");
    CertReport rep{"sup_bound_p", true, 0.0, {}, ""};
    double worst = 0.0;
    Complex witness;
    for (int t = 1; t <= n_a; ++t) {
        const Complex a = std::polar(1.0, -std::numbers::pi + 2.0 * std::numbers::pi * t / n_a);
        for (int i = 1; i <= grid.n_radial; ++i) {
            const double rho = grid.radius * i / grid.n_radial;
            for (int j = 0; j < grid.n_angular; ++j) {
                const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * j / grid.n_angular;
                const Complex z = std::polar(rho, phi);
                const double z2 = std::norm(z);
                const double v = (1.0 - z2 * z2) * std::abs(integrand_p(z, a, p));
                if (v > worst) {
                    worst = v;
                    witness = z;
                }
            }
        }
    }
    const double bound = 4.0 * p.M;
    rep.margin = bound - worst;
    rep.pass = worst <= bound * (1.0 + kSupBoundSlack);
    rep.detail = "max (1-|z|^4)|H''| = " + std::to_string(worst) + " vs 4M = " + std::to_string(bound);
    if (!rep.pass) rep.witnesses.push_back(witness);
    return rep;
}

/// Root locations of the class-B denominator quadratic
///   conj(beta) e^{i theta} z^2 + (conj(lambda) e^{i theta} + conj(beta) lambda) z + 1:
/// both roots must satisfy |z| >= 1 - 1e-10 (exactly on the unit circle when
/// |beta| = 1).  beta = 0 degenerates to a linear factor, checked the same way.
inline CertReport check_root_locations(double theta, Complex lambda, Complex beta) {
    const Complex a = std::polar(1.0, theta);
    const Complex qa = std::conj(beta) * a;
    const Complex qb = std::conj(lambda) * a + std::conj(beta) * lambda;

    CertReport rep{"root_locations_b", true, 0.0, {}, ""};
    double min_mod;
    if (std::abs(beta) == 0.0) {
        if (std::abs(qb) < 1e-300) {
            // lambda = 0 as well: the denominator is constant 1
            rep.margin = std::numeric_limits<double>::infinity();
            rep.detail = "LinearCase: constant denominator";
            return rep;
        }
        const Complex root = -1.0 / qb;
        min_mod = std::abs(root);
        rep.detail = "LinearCase";
        rep.witnesses.push_back(root);
    } else {
        const auto [r1, r2] = detail::solve_quadratic(qa, qb, Complex(1.0, 0.0));
        min_mod = std::min(std::abs(r1), std::abs(r2));
        rep.witnesses = {r1, r2};
    }
    rep.margin = min_mod - 1.0;
    rep.pass = min_mod >= 1.0 - kRootSlack;
    return rep;
}

/// Root locations of the class-P denominator quadratic
///   -e^{i theta} z^2 + (conj(lambda) e^{i theta} - lambda) z + 1:
/// the root product is unimodular, so both roots must sit on the unit circle.
inline CertReport check_root_locations_p(double theta, Complex lambda) {
    const Complex a = std::polar(1.0, theta);
    const auto [r1, r2] =
        detail::solve_quadratic(-a, std::conj(lambda) * a - lambda, Complex(1.0, 0.0));
    CertReport rep{"root_locations_p", true, 0.0, {r1, r2}, ""};
    const double min_mod = std::min(std::abs(r1), std::abs(r2));
    rep.margin = min_mod - 1.0;
    rep.pass = min_mod >= 1.0 - kRootSlack;
    return rep;
}

}  // namespace rov
