#pragma once

#include <cmath>
#include <complex>

#include "rov/errors.hpp"
#include "rov/params.hpp"

// Pure complex-valued kernels: the disk automorphism delta, the
// second-derivative fields of the two extremal families, the center/radius
// fields of the sharp disk inequalities, and the auxiliary G' integrands.
// All functions are total (given the denominator floor), reentrant and
// state-free.

namespace rov {

// Hard floor applied to every kernel denominator.  The root-location
// lemmas exclude interior zeros analytically, but inputs with |z| ~ 1 in
// floating point still need a cutoff.
inline constexpr double kDenominatorFloor = 1e-14;

namespace detail {

inline void require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ValidationError("NonFinite", std::string(who) + " received a non-finite value");
}

inline Complex guarded_div(Complex num, Complex den, const char* who) {
    if (std::abs(den) < kDenominatorFloor)
        throw DegenerateDenominator(std::string(who) + ": |denominator| < 1e-14");
    return num / den;
}

}  // namespace detail

/// Disk automorphism delta(z, lambda) = (z + lambda) / (1 + conj(lambda) z).
/// Maps the open unit disk into itself for |lambda| < 1; degenerates to the
/// constant lambda when |lambda| = 1.
inline Complex moebius_delta(Complex z, Complex lambda) {
    detail::require_finite(z, "moebius_delta");
    detail::require_finite(lambda, "moebius_delta");
    return detail::guarded_div(z + lambda, 1.0 + std::conj(lambda) * z, "moebius_delta");
}

/// Second derivative F''_{a,lambda}(z) of the class-B extremal family, in
/// closed rational form:
///   M ((a z + lambda) z + beta (1 + conj(lambda) a z))
///   / (1 + (conj(lambda) a + conj(beta) lambda) z + conj(beta) a z^2).
/// `a` is the family parameter; a = e^{i theta} traces the boundary.
inline Complex integrand_b(Complex zeta, Complex a, const ClassBParams& p) {
    detail::require_finite(zeta, "integrand_b");
    detail::require_finite(a, "integrand_b");
    const Complex num =
        p.M * ((a * zeta + p.lambda) * zeta + p.beta * (1.0 + std::conj(p.lambda) * a * zeta));
    const Complex den = 1.0 + (std::conj(p.lambda) * a + std::conj(p.beta) * p.lambda) * zeta +
                        std::conj(p.beta) * a * zeta * zeta;
    return detail::guarded_div(num, den, "integrand_b");
}

/// Second derivative H''_{a,lambda}(z) of the class-P extremal family:
///   2 M (a z + lambda) / (1 + (conj(lambda) a - lambda) z - a z^2).
inline Complex integrand_p(Complex zeta, Complex a, const ClassPParams& p) {
    detail::require_finite(zeta, "integrand_p");
    detail::require_finite(a, "integrand_p");
    const Complex num = 2.0 * p.M * (a * zeta + p.lambda);
    const Complex den =
        1.0 + (std::conj(p.lambda) * a - p.lambda) * zeta - a * zeta * zeta;
    return detail::guarded_div(num, den, "integrand_p");
}

struct CenterRadius {
    Complex center;
    double radius = 0.0;
};

/// Center/radius fields (c1, r1) of the sharp disk bound on f'' for class B:
///   c1 = M (1-|z|^2) { beta (1+|z|^2) + beta^2 conj(lambda) conj(z) + lambda z } / D
///   r1 = M (1-|lambda|^2) (1-|beta|^2) |z|^2 / D
/// with D = (1-|beta|^2 |z|^4) - (1-|beta|^2)|lambda|^2 |z|^2
///          + 2 (1-|z|^2) Re(conj(beta) lambda z).
inline CenterRadius center_radius_b(Complex z, const ClassBParams& p) {
    detail::require_finite(z, "center_radius_b");
    const double z2 = std::norm(z);
    const double b2 = std::norm(p.beta);
    const double l2 = std::norm(p.lambda);
    const double D = (1.0 - b2 * z2 * z2) - (1.0 - b2) * l2 * z2 +
                     2.0 * (1.0 - z2) * std::real(std::conj(p.beta) * p.lambda * z);
    if (D < kDenominatorFloor)
        throw DegenerateDenominator("center_radius_b: D < 1e-14");
    const Complex num = p.M * (1.0 - z2) *
                        (p.beta * (1.0 + z2) + p.beta * p.beta * std::conj(p.lambda) * std::conj(z) +
                         p.lambda * z);
    return {num / D, p.M * (1.0 - l2) * (1.0 - b2) * z2 / D};
}

/// Center/radius fields (c2, r2) of the sharp disk bound on f'' for class P:
///   c2 = 2 M [ (1-|z|^2) lambda + (|z|^2-|lambda|^2) conj(z) ] / D
///   r2 = 2 M (1-|lambda|^2) |z| / D
/// with D = (1-|z|^2)(1+|z|^2-2 Re(lambda z)).
inline CenterRadius center_radius_p(Complex z, const ClassPParams& p) {
    detail::require_finite(z, "center_radius_p");
    const double z2 = std::norm(z);
    const double l2 = std::norm(p.lambda);
    const double D = (1.0 - z2) * (1.0 + z2 - 2.0 * std::real(p.lambda * z));
    if (D < kDenominatorFloor)
        throw DegenerateDenominator("center_radius_p: D < 1e-14");
    const Complex num =
        2.0 * p.M * ((1.0 - z2) * p.lambda + (z2 - l2) * std::conj(z));
    return {num / D, 2.0 * p.M * (1.0 - l2) * std::abs(z) / D};
}

/// G'(z) for the class-B phase normalizer:
///   e^{i theta} z^2 / (1 + (conj(lambda) e^{i theta} + conj(beta) lambda) z
///                        + conj(beta) e^{i theta} z^2)^2.
/// G itself has a triple zero at the origin and no other zero in the disk.
inline Complex g_integrand_b(Complex zeta, double theta, Complex lambda, Complex beta) {
    detail::require_finite(zeta, "g_integrand_b");
    const Complex a = std::polar(1.0, theta);
    const Complex q = 1.0 + (std::conj(lambda) * a + std::conj(beta) * lambda) * zeta +
                      std::conj(beta) * a * zeta * zeta;
    return detail::guarded_div(a * zeta * zeta, q * q, "g_integrand_b");
}

/// G'(z) for the class-P phase normalizer:
///   e^{i theta} z / (1 + (conj(lambda) e^{i theta} - lambda) z
///                      - e^{i theta} z^2)^2.
/// G has a double zero at the origin and no other zero in the disk.
inline Complex g_integrand_p(Complex zeta, double theta, Complex lambda) {
    detail::require_finite(zeta, "g_integrand_p");
    const Complex a = std::polar(1.0, theta);
    const Complex q =
        1.0 + (std::conj(lambda) * a - lambda) * zeta - a * zeta * zeta;
    return detail::guarded_div(a * zeta, q * q, "g_integrand_p");
}

/// z G''(z)/G'(z) for the class-B normalizer, from the closed rational form.
/// Must satisfy Re > -1 throughout the disk.
inline Complex g_log_derivative_b(Complex z, double theta, Complex lambda, Complex beta) {
    const Complex a = std::polar(1.0, theta);
    const Complex p1 = std::conj(lambda) * a + std::conj(beta) * lambda;
    const Complex p2 = std::conj(beta) * a;
    const Complex q = 1.0 + p1 * z + p2 * z * z;
    return 2.0 - 2.0 * z * detail::guarded_div(p1 + 2.0 * p2 * z, q, "g_log_derivative_b");
}

/// z G''(z)/G'(z) for the class-P normalizer.  Re > -1 on the disk.
inline Complex g_log_derivative_p(Complex z, double theta, Complex lambda) {
    const Complex a = std::polar(1.0, theta);
    const Complex p1 = std::conj(lambda) * a - lambda;
    const Complex q = 1.0 + p1 * z - a * z * z;
    return 1.0 - 2.0 * z * detail::guarded_div(p1 - 2.0 * a * z, q, "g_log_derivative_p");
}

// ---------------------------------------------------------------------------
// Small-argument helpers for the closed-form derivative values.
//
// log1p_over(u)  = log(1+u)/u          -> 1 - u/2 + u^2/3 - ...
// log1p_defect(u) = (u - log(1+u))/u^2 -> 1/2 - u/3 + u^2/4 - ...
//
// The direct quotients cancel catastrophically for |u| below ~1e-2 (the
// defect loses all digits by |u| ~ 1e-8), so both switch to a truncated
// alternating series under |u| = 0.05.  Sixteen terms leave a truncation
// error below 1e-21 at the crossover.

namespace detail {
inline constexpr double kSeriesCutoff = 0.05;
inline constexpr int kSeriesTerms = 16;
}  // namespace detail

inline Complex log1p_over(Complex u) {
    detail::require_finite(u, "log1p_over");
    if (std::abs(u) < detail::kSeriesCutoff) {
        Complex acc = 1.0 / static_cast<double>(detail::kSeriesTerms);
        for (int k = detail::kSeriesTerms - 1; k >= 1; --k)
            acc = 1.0 / static_cast<double>(k) - u * acc;
        return acc;
    }
    const Complex w = 1.0 + u;
    if (std::real(w) <= 0.0)
        throw Error("BranchViolation", "log1p_over: Re(1+u) <= 0");
    return std::log(w) / u;
}

inline Complex log1p_defect(Complex u) {
    detail::require_finite(u, "log1p_defect");
    if (std::abs(u) < detail::kSeriesCutoff) {
        Complex acc = 1.0 / static_cast<double>(detail::kSeriesTerms + 1);
        for (int k = detail::kSeriesTerms; k >= 2; --k)
            acc = 1.0 / static_cast<double>(k) - u * acc;
        return acc;
    }
    const Complex w = 1.0 + u;
    if (std::real(w) <= 0.0)
        throw Error("BranchViolation", "log1p_defect: Re(1+u) <= 0");
    return (u - std::log(w)) / (u * u);
}

}  // namespace rov
