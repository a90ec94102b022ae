#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "rov/errors.hpp"
#include "rov/kernel.hpp"
#include "rov/params.hpp"
#include "rov/quad.hpp"

// Parameter validation and the headline computations: boundary Jordan
// curves, interior points, |lambda|=1 singletons, extremal-derivative
// sampling, covering disks.

namespace rov {

inline constexpr double kDefaultTol = 1e-10;
// |lambda| >= 1 - kSingletonEps collapses the region to a single point.
inline constexpr double kSingletonEps = 1e-12;
// Above 1 - kNearSingletonEps the curve is computed but flagged as tiny.
inline constexpr double kNearSingletonEps = 1e-6;

inline double univalence_bound_p() { return 1.0 / std::log(4.0); }

class ValidatedB;
class ValidatedP;
ValidatedB validate_b(const ClassBParams& p);
ValidatedP validate_p(const ClassPParams& p, bool relax_univalence);

// Proof token: region operations only accept parameter sets that passed
// validate_* (or were constructed via trusted(), e.g. the bundled figure
// presets, which are kept verbatim even where they stray outside the
// admissible domain).
class ValidatedB {
public:
    const ClassBParams& get() const noexcept { return p_; }
    const ClassBParams* operator->() const noexcept { return &p_; }

    static ValidatedB trusted(const ClassBParams& p) { return ValidatedB(p); }

private:
    friend ValidatedB validate_b(const ClassBParams&);
    explicit ValidatedB(const ClassBParams& p) : p_(p) {}
    ClassBParams p_;
};

class ValidatedP {
public:
    const ClassPParams& get() const noexcept { return p_; }
    const ClassPParams* operator->() const noexcept { return &p_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    static ValidatedP trusted(const ClassPParams& p) { return ValidatedP(p, {}); }

private:
    friend ValidatedP validate_p(const ClassPParams&, bool);
    ValidatedP(const ClassPParams& p, std::vector<std::string> w)
        : p_(p), warnings_(std::move(w)) {}
    ClassPParams p_;
    std::vector<std::string> warnings_;
};

namespace detail {

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Slack of a few ulps so that unimodular beta/lambda written as decimal
// literals are not rejected.
inline constexpr double kUnitSlack = 1e-14;

}  // namespace detail

inline ValidatedB validate_b(const ClassBParams& p) {
    if (!detail::finite(p.alpha) || !detail::finite(p.beta) || !detail::finite(p.lambda) ||
        !detail::finite(p.z0) || !std::isfinite(p.M))
        throw ValidationError("NonFinite", "class B parameters must be finite");
    if (!(p.M > 0.0) || p.M > std::abs(p.alpha))
        throw ValidationError("InvalidM", "require 0 < M <= |alpha|");
    if (std::abs(p.beta) > 1.0 + detail::kUnitSlack)
        throw ValidationError("InvalidBeta", "require |beta| <= 1");
    if (std::abs(p.lambda) > 1.0 + detail::kUnitSlack)
        throw ValidationError("InvalidLambda", "require |lambda| <= 1");
    if (!(std::abs(p.z0) < 1.0))
        throw ValidationError("InvalidZ0", "require |z0| < 1");
    return ValidatedB(p);
}

inline ValidatedP validate_p(const ClassPParams& p, bool relax_univalence = false) {
    if (!detail::finite(p.alpha) || !detail::finite(p.lambda) || !detail::finite(p.z0) ||
        !std::isfinite(p.M))
        throw ValidationError("NonFinite", "class P parameters must be finite");
    if (p.alpha == Complex(0.0, 0.0))
        throw ValidationError("InvalidAlpha", "require alpha != 0");
    std::vector<std::string> warnings;
    if (!(p.M > 0.0))
        throw ValidationError("InvalidM", "require M > 0");
    if (p.M > univalence_bound_p()) {
        if (relax_univalence)
            warnings.push_back("UnivalenceBoundRelaxed: M > 1/log(4), univalence not guaranteed");
        else
            throw ValidationError("InvalidM", "require M <= 1/log(4) (use relax_univalence to override)");
    }
    if (std::abs(p.lambda) > 1.0 + detail::kUnitSlack)
        throw ValidationError("InvalidLambda", "require |lambda| <= 1");
    if (!(std::abs(p.z0) < 1.0))
        throw ValidationError("InvalidZ0", "require |z0| < 1");
    return ValidatedP(p, std::move(warnings));
}

struct CurveSample {
    double theta;
    Complex w;
};

struct BoundaryCurve {
    char class_tag = 'b';  // 'b' or 'p'
    std::vector<CurveSample> samples;  // theta strictly increasing on (-pi, pi]
    double tol = kDefaultTol;
    double closure_error = 0.0;  // |w(-pi) - w(pi)|
    double scale = 0.0;          // max_k |w_k - mean|
    bool singleton = false;
    bool near_singleton = false;
};

struct DiskBound {
    Complex center;
    double radius = 0.0;
    PathSpec path;
};

namespace detail {

// Uniform glue over the two classes so curve/disk machinery is written once.
struct TraitsB {
    static constexpr char tag = 'b';
    const ClassBParams& p;
    Complex alpha() const { return p.alpha; }
    Complex z0() const { return p.z0; }
    Complex lambda() const { return p.lambda; }
    Complex field(Complex z, Complex a) const { return integrand_b(z, a, p); }
    CenterRadius center_radius(Complex z) const { return center_radius_b(z, p); }
    // Closed form of the derivative at z0 for the a=0 member, which is also
    // the unique value when |lambda|=1 or z0=0:
    //   alpha + M z0 (lambda z0 S(u) + beta L(u)),  u = lambda conj(beta) z0,
    // with L(u)=log(1+u)/u and S(u)=(u-log(1+u))/u^2.  Equivalent to
    //   (M/conj(beta)) (z0 - (1-|beta|^2) log(1+u)/(lambda conj(beta))) + alpha
    // but stable for small beta and small lambda, with the beta=0 limit
    //   alpha + M lambda z0^2 / 2  built in.
    Complex closed_derivative() const {
        const Complex u = p.lambda * std::conj(p.beta) * p.z0;
        return p.alpha +
               p.M * p.z0 * (p.lambda * p.z0 * log1p_defect(u) + p.beta * log1p_over(u));
    }
};

struct TraitsP {
    static constexpr char tag = 'p';
    const ClassPParams& p;
    Complex alpha() const { return p.alpha; }
    Complex z0() const { return p.z0; }
    Complex lambda() const { return p.lambda; }
    Complex field(Complex z, Complex a) const { return integrand_p(z, a, p); }
    CenterRadius center_radius(Complex z) const { return center_radius_p(z, p); }
    // -2 M log(1 - lambda z0) + alpha; the argument has positive real part
    // whenever |lambda z0| < 1, so the principal branch never jumps.
    Complex closed_derivative() const {
        const Complex w = 1.0 - p.lambda * p.z0;
        if (std::real(w) <= 0.0)
            throw Error("BranchViolation", "closed_derivative: Re(1 - lambda z0) <= 0");
        return p.alpha - 2.0 * p.M * std::log(w);
    }
};

template <class T>
bool is_singleton(const T& tr) {
    return std::abs(tr.lambda()) >= 1.0 - kSingletonEps || tr.z0() == Complex(0.0, 0.0);
}

template <class T>
Complex sample_derivative_impl(const T& tr, Complex a, double tol) {
    if (!detail::finite(a) || std::abs(a) > 1.0 + kUnitSlack)
        throw ValidationError("InvalidA", "require |a| <= 1");
    if (is_singleton(tr)) return tr.closed_derivative();
    auto f = [&](Complex z) { return tr.field(z, a); };
    return tr.alpha() + integrate_segment(f, Complex(0.0, 0.0), tr.z0(), tol).value;
}

template <class T>
BoundaryCurve boundary_curve_impl(const T& tr, int n_samples, double tol) {
    if (n_samples < 16)
        throw ValidationError("InvalidSamples", "need at least 16 boundary samples");

    BoundaryCurve curve;
    curve.class_tag = T::tag;
    curve.tol = tol;
    curve.samples.reserve(static_cast<std::size_t>(n_samples));

    if (is_singleton(tr)) {
        curve.singleton = true;
        const Complex w = tr.closed_derivative();
        for (int k = 1; k <= n_samples; ++k) {
            const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * k / n_samples;
            curve.samples.push_back({theta, w});
        }
        return curve;
    }
    const double mod_lambda = std::abs(tr.lambda());
    curve.near_singleton = mod_lambda >= 1.0 - kNearSingletonEps;

    auto value_at = [&](double theta) {
        const Complex a = std::polar(1.0, theta);
        auto f = [&](Complex z) { return tr.field(z, a); };
        return tr.alpha() + integrate_segment(f, Complex(0.0, 0.0), tr.z0(), tol).value;
    };

    for (int k = 1; k <= n_samples; ++k) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * k / n_samples;
        curve.samples.push_back({theta, value_at(theta)});
    }
    curve.closure_error = std::abs(value_at(-std::numbers::pi) - curve.samples.back().w);

    Complex mean = 0.0;
    for (const auto& s : curve.samples) mean += s.w;
    mean /= static_cast<double>(n_samples);
    for (const auto& s : curve.samples) curve.scale = std::max(curve.scale, std::abs(s.w - mean));
    return curve;
}

template <class T>
DiskBound covering_disk_impl(const T& tr, const PathSpec& path, double tol) {
    if (std::abs(tr.lambda()) >= 1.0 - kSingletonEps)
        throw Error("SingletonCase", "covering disk requires |lambda| < 1");
    if (tr.z0() == Complex(0.0, 0.0)) {
        DiskBound disk;
        disk.path = path;
        disk.center = tr.alpha();
        return disk;
    }
    path.validate();
    if (std::abs(path.nodes.front()) > 1e-15)
        throw ValidationError("InvalidPath", "covering-disk path must start at 0");
    if (std::abs(path.nodes.back() - tr.z0()) > 1e-15 * std::max(1.0, std::abs(tr.z0())))
        throw ValidationError("InvalidPath", "covering-disk path must end at z0");

    auto c_field = [&](Complex z) { return tr.center_radius(z).center; };
    auto r_field = [&](Complex z) { return Complex(tr.center_radius(z).radius, 0.0); };

    DiskBound disk;
    disk.path = path;
    disk.center = tr.alpha() + integrate_path(c_field, path, tol, IntegralKind::Line).value;
    disk.radius = integrate_path(r_field, path, tol, IntegralKind::Arclength).value.real();
    return disk;
}

}  // namespace detail

/// Derivative of the extremal-family member with parameter a, evaluated at
/// z0: the closed form when the region degenerates (|lambda|=1 or z0=0),
/// otherwise alpha plus the adaptive line integral of the field from 0 to z0.
/// |a|<1 lands strictly inside the region, |a|=1 on its boundary.
inline Complex sample_derivative(const ValidatedB& vp, Complex a, double tol = kDefaultTol) {
    return detail::sample_derivative_impl(detail::TraitsB{vp.get()}, a, tol);
}
inline Complex sample_derivative(const ValidatedP& vp, Complex a, double tol = kDefaultTol) {
    return detail::sample_derivative_impl(detail::TraitsP{vp.get()}, a, tol);
}

/// Closed-form value that is interior to the region for |lambda|<1, z0!=0
/// (and equals the a=0 sample up to quadrature error).
inline Complex interior_point(const ValidatedB& vp) {
    return detail::TraitsB{vp.get()}.closed_derivative();
}
inline Complex interior_point(const ValidatedP& vp) {
    return detail::TraitsP{vp.get()}.closed_derivative();
}

/// The unique region element when |lambda|=1 (within 1e-12) or z0=0.
inline Complex singleton_value(const ValidatedB& vp) {
    if (!detail::is_singleton(detail::TraitsB{vp.get()}))
        throw NotSingleton("singleton_value: need |lambda|=1 or z0=0");
    return detail::TraitsB{vp.get()}.closed_derivative();
}
inline Complex singleton_value(const ValidatedP& vp) {
    if (!detail::is_singleton(detail::TraitsP{vp.get()}))
        throw NotSingleton("singleton_value: need |lambda|=1 or z0=0");
    return detail::TraitsP{vp.get()}.closed_derivative();
}

/// Boundary curve sampled at theta_k = -pi + 2 pi k / n, k = 1..n.  For the
/// degenerate cases all samples carry the singleton value and the curve is
/// flagged; just below |lambda|=1 a near-singleton flag marks numerically
/// tiny curves.
inline BoundaryCurve boundary_curve(const ValidatedB& vp, int n_samples = 512,
                                    double tol = kDefaultTol) {
    return detail::boundary_curve_impl(detail::TraitsB{vp.get()}, n_samples, tol);
}
inline BoundaryCurve boundary_curve(const ValidatedP& vp, int n_samples = 512,
                                    double tol = kDefaultTol) {
    return detail::boundary_curve_impl(detail::TraitsP{vp.get()}, n_samples, tol);
}

/// Disk guaranteed to cover the region: center = alpha + line integral of the
/// center field along `path`, radius = arclength integral of the radius
/// field.  Any admissible 0 -> z0 path yields a valid (generally different)
/// disk.
inline DiskBound covering_disk(const ValidatedB& vp, const PathSpec& path,
                               double tol = kDefaultTol) {
    return detail::covering_disk_impl(detail::TraitsB{vp.get()}, path, tol);
}
inline DiskBound covering_disk(const ValidatedP& vp, const PathSpec& path,
                               double tol = kDefaultTol) {
    return detail::covering_disk_impl(detail::TraitsP{vp.get()}, path, tol);
}

/// Default covering-disk path: the straight segment 0 -> z0.
inline PathSpec radial_path(Complex z0) { return PathSpec::segment(Complex(0.0, 0.0), z0); }

}  // namespace rov
