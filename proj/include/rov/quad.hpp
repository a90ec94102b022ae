#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "rov/errors.hpp"
#include "rov/params.hpp"

// Adaptive complex-valued quadrature along straight segments and polylines
// inside the unit disk, plus a fixed-order composite Gauss-Legendre rule used
// as an independent cross-validation oracle.

namespace rov {

struct QuadResult {
    Complex value;
    double err_estimate = 0.0;  // absolute bound accumulated over accepted panels
    long long evaluations = 0;  // integrand calls
};

enum class PathRule { StraightSegment, Polyline };
enum class IntegralKind { Line, Arclength };

struct PathSpec {
    std::vector<Complex> nodes;
    PathRule rule = PathRule::StraightSegment;

    static PathSpec segment(Complex from, Complex to) {
        return {{from, to}, PathRule::StraightSegment};
    }

    double total_length() const {
        double len = 0.0;
        for (std::size_t i = 1; i < nodes.size(); ++i) len += std::abs(nodes[i] - nodes[i - 1]);
        return len;
    }

    // Nodes inside the open disk, at least one segment, consecutive nodes
    // distinct; StraightSegment means exactly two nodes.
    void validate() const {
        if (nodes.size() < 2)
            throw ValidationError("InvalidPath", "path needs at least two nodes");
        if (rule == PathRule::StraightSegment && nodes.size() != 2)
            throw ValidationError("InvalidPath", "straight segment has exactly two nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (!std::isfinite(nodes[i].real()) || !std::isfinite(nodes[i].imag()) ||
                std::abs(nodes[i]) >= 1.0)
                throw ValidationError("InvalidPath", "path node outside the open unit disk");
            if (i > 0 && nodes[i] == nodes[i - 1])
                throw ValidationError("InvalidPath", "consecutive path nodes coincide");
        }
    }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1]
// (QUADPACK dqk15 constants).  Odd-index abscissae form the embedded
// Gauss rule, so one sweep of 15 evaluations yields both values.
inline constexpr double kGkX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGkWk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGkWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// 10-point Gauss-Legendre rule on [-1,1], for the oracle integrator.
inline constexpr double kGl10X[5] = {
    0.14887433898163121088482600112972,
    0.43339539412924719079926594316578,
    0.67940956829902440623432736511487,
    0.86506336668898451073209668842349,
    0.97390652851717172007796401208445};
inline constexpr double kGl10W[5] = {
    0.29552422471475287017389299465134,
    0.26926671930999635509122692156947,
    0.21908636251598204399553493422816,
    0.14945134915058059314577633965770,
    0.066671344308688137593568809893332};

inline constexpr int kMaxDepth = 40;

struct GkPanel {
    Complex k15;
    double err;  // |K15 - G7|
};

// One Kronrod/Gauss sweep of f over the parameter interval [a,b].
template <class F>
GkPanel gk15(F& f, double a, double b, long long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex y0 = f(c);
    Complex k = kGkWk[7] * y0;
    Complex g = kGkWg[3] * y0;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGkX[i];
        const Complex y = f(c + dx) + f(c - dx);
        k += kGkWk[i] * y;
        if (i % 2 == 1) g += kGkWg[i / 2] * y;
    }
    evals += 15;
    return {k * h, std::abs((k - g) * h)};
}

// Depth-first refinement on [a,b]; accepts a panel once its Kronrod/Gauss
// discrepancy fits the length-proportional share of the error budget.
template <class F>
Complex refine(F& f, double a, double b, const GkPanel& panel, double tol_per_unit,
               int depth, double& err_sum, long long& evals) {
    if (panel.err <= tol_per_unit * (b - a)) {
        err_sum += panel.err;
        return panel.k15;
    }
    if (depth >= kMaxDepth)
        throw NoConvergence("adaptive quadrature: depth " + std::to_string(kMaxDepth) +
                            " exhausted with estimate above tolerance");
    const double m = 0.5 * (a + b);
    const auto left = gk15(f, a, m, evals);
    const auto right = gk15(f, m, b, evals);
    return refine(f, a, m, left, tol_per_unit, depth + 1, err_sum, evals) +
           refine(f, m, b, right, tol_per_unit, depth + 1, err_sum, evals);
}

inline void check_tol(double tol) {
    if (!(tol >= 1e-13 && tol <= 1e-3))
        throw ValidationError("InvalidTolerance", "tol must lie in [1e-13, 1e-3]");
}

}  // namespace detail

/// Adaptive integral of f along the straight segment from `from` to `to`.
/// Line mode computes the complex line integral (f dz); Arclength mode the
/// integral against |dz|.  On success err_estimate <= tol * max(1, |value|).
template <class F>
QuadResult integrate_segment(F&& f, Complex from, Complex to, double tol,
                             IntegralKind kind = IntegralKind::Line) {
    detail::check_tol(tol);
    const Complex dz = to - from;
    const Complex mult = (kind == IntegralKind::Line) ? dz : Complex(std::abs(dz), 0.0);
    if (mult == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), 0.0, 0};

    auto ft = [&](double t) { return f(from + t * dz); };

    QuadResult out;
    const auto whole = detail::gk15(ft, 0.0, 1.0, out.evaluations);
    double scale = std::max(1.0, std::abs(mult * whole.k15));

    // One re-run if the up-front scale guess was too optimistic: keeps the
    // contract err_estimate <= tol * max(1, |value|) without a priori
    // knowledge of the integral's magnitude.
    for (int pass = 0; pass < 2; ++pass) {
        out.err_estimate = 0.0;
        const double tol_per_unit = tol * scale / std::abs(mult);
        const Complex unit =
            detail::refine(ft, 0.0, 1.0, whole, tol_per_unit, 0, out.err_estimate, out.evaluations);
        out.value = mult * unit;
        out.err_estimate *= std::abs(mult);
        const double target = tol * std::max(1.0, std::abs(out.value));
        if (out.err_estimate <= target) break;
        scale = std::max(1.0, std::abs(out.value));
    }
    return out;
}

/// Integral of f along a polyline path, either as a complex line integral or
/// against arclength.  The error budget is split across segments in
/// proportion to their length.
template <class F>
QuadResult integrate_path(F&& f, const PathSpec& path, double tol,
                          IntegralKind kind = IntegralKind::Line) {
    detail::check_tol(tol);
    path.validate();
    const double total = path.total_length();
    QuadResult out;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        const double share = std::abs(path.nodes[i] - path.nodes[i - 1]) / total;
        const QuadResult seg =
            integrate_segment(f, path.nodes[i - 1], path.nodes[i], std::max(1e-13, tol * share), kind);
        out.value += seg.value;
        out.err_estimate += seg.err_estimate;
        out.evaluations += seg.evaluations;
    }
    return out;
}

/// Fixed composite Gauss-Legendre rule (order 10 per panel, `panels` panels)
/// along the straight segment from..to.  Cross-validation oracle for the
/// adaptive integrator; not used on any production path.
template <class F>
Complex oracle_integrate(F&& f, Complex from, Complex to, int panels) {
    if (panels < 64 || panels > 65536)
        throw ValidationError("InvalidPanelCount", "oracle panel count must lie in [64, 65536]");
    const Complex dz = to - from;
    Complex sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double a = static_cast<double>(k) / panels;
        const double b = static_cast<double>(k + 1) / panels;
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        for (int i = 0; i < 5; ++i) {
            const double dx = h * detail::kGl10X[i];
            sum += detail::kGl10W[i] * h * (f(from + (c + dx) * dz) + f(from + (c - dx) * dz));
        }
    }
    return sum * dz;
}

}  // namespace rov
