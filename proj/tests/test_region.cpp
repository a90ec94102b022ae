#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "rov/presets.hpp"
#include "rov/region.hpp"
#include "rov/verify.hpp"
#include "support/reference.hpp"

using rov::Complex;
using Catch::Approx;

namespace {

double rel(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("class-B validation accepts the figure-1 parameters") {
    CHECK_NOTHROW(rov::validate_b(rov::figure_preset(1).b));
}

TEST_CASE("class-B validation rejects each broken invariant by name") {
    rov::ClassBParams p{{1, 0}, {0.5, 0}, 0.5, {0.2, 0}, {0.3, 0}};
    auto name_of = [](auto fn) {
        try {
            fn();
        } catch (const rov::ValidationError& e) {
            return e.name();
        }
        return std::string("none");
    };
    rov::ClassBParams bad = p;
    bad.M = 2.0;  // M > |alpha|
    CHECK(name_of([&] { rov::validate_b(bad); }) == "InvalidM");
    bad = p;
    bad.M = 0.0;
    CHECK(name_of([&] { rov::validate_b(bad); }) == "InvalidM");
    bad = p;
    bad.beta = {1.2, 0};
    CHECK(name_of([&] { rov::validate_b(bad); }) == "InvalidBeta");
    bad = p;
    bad.lambda = {1.0, 0.1};
    CHECK(name_of([&] { rov::validate_b(bad); }) == "InvalidLambda");
    bad = p;
    bad.z0 = {1.0, 0};
    CHECK(name_of([&] { rov::validate_b(bad); }) == "InvalidZ0");
}

TEST_CASE("class-P validation enforces the univalence bound on M") {
    rov::ClassPParams p{{-230.939, 799.526}, 0.254877, {0.839567, 0}, {0.00882581, -0.514124}};
    CHECK_NOTHROW(rov::validate_p(p));

    rov::ClassPParams bad = p;
    bad.M = 0.73;  // just above 1/log 4 = 0.7213475...
    CHECK_THROWS_AS(rov::validate_p(bad), rov::ValidationError);
    const auto relaxed = rov::validate_p(bad, true);
    REQUIRE(relaxed.warnings().size() == 1);

    bad.M = -1.0;
    CHECK_THROWS_AS(rov::validate_p(bad, true), rov::ValidationError);
    bad = p;
    bad.alpha = {0, 0};
    CHECK_THROWS_AS(rov::validate_p(bad), rov::ValidationError);
}

TEST_CASE("boundary curve at z0 = 0 degenerates to alpha") {
    const auto vp = rov::validate_b({{2, 1}, {0.5, 0}, 1.0, {0.3, 0}, {0, 0}});
    const auto curve = rov::boundary_curve(vp, 32, 1e-10);
    CHECK(curve.singleton);
    for (const auto& s : curve.samples) CHECK(s.w == Complex(2, 1));
}

TEST_CASE("boundary curve theta grid covers (-pi, pi] and closes") {
    const auto vp = rov::validate_p({{1, 0}, 0.5, {0, 0}, {0.5, 0}});
    const auto curve = rov::boundary_curve(vp, 512, 1e-10);
    REQUIRE(curve.samples.size() == 512);
    CHECK(curve.samples.front().theta ==
          Approx(-std::numbers::pi + 2 * std::numbers::pi / 512).margin(1e-15));
    CHECK(curve.samples.back().theta == Approx(std::numbers::pi).margin(1e-15));
    for (std::size_t i = 1; i < curve.samples.size(); ++i)
        CHECK(curve.samples[i].theta > curve.samples[i - 1].theta);
    CHECK(curve.closure_error <= 10 * curve.tol * std::max(1.0, curve.scale));

    // theta = 0 sample has the hand-derived value 1 - 0.5 log(3/4)
    const auto& mid = curve.samples[255];
    REQUIRE(mid.theta == Approx(0.0).margin(1e-15));
    CHECK(rel(mid.w, {1.1438410362258905, 0.0}) < 1e-13);
}

TEST_CASE("figure-1 boundary samples match the oracle value at theta = 0") {
    const auto curve = rov::boundary_curve(rov::preset_b(1), 64, 1e-12);
    const auto& mid = curve.samples[31];  // k = 32 of 64 -> theta = 0
    REQUIRE(mid.theta == Approx(0.0).margin(1e-15));
    CHECK(std::abs(mid.w - Complex(-219.71993662432235, 553.04096782240643)) < 5e-9);
    CHECK(curve.closure_error <= 10 * curve.tol * std::max(1.0, curve.scale));
}

TEST_CASE("near-unimodular lambda sets the tiny-curve flag") {
    const auto vp = rov::validate_p({{1, 0}, 0.5, {1.0 - 1e-8, 0}, {0.5, 0}});
    const auto curve = rov::boundary_curve(vp, 32, 1e-10);
    CHECK_FALSE(curve.singleton);
    CHECK(curve.near_singleton);
    CHECK(curve.scale < 1e-6);
}

TEST_CASE("unimodular lambda short-circuits sampling to the closed form") {
    const auto vp = rov::validate_p({{1, 0}, 0.5, {1.0, 0}, {0.5, 0}});
    const Complex expect{1.6931471805599453, 0.0};  // 1 + log 2
    CHECK(rel(rov::singleton_value(vp), expect) < 1e-15);
    for (int k = 0; k < 16; ++k) {
        const Complex a = std::polar(1.0, -std::numbers::pi + 2 * std::numbers::pi * (k + 1) / 16);
        CHECK(rel(rov::sample_derivative(vp, a), expect) < 1e-15);
    }
    const auto curve = rov::boundary_curve(vp, 32, 1e-10);
    CHECK(curve.singleton);
    for (const auto& s : curve.samples) CHECK(rel(s.w, expect) < 1e-15);
}

TEST_CASE("singleton value requires a degenerate configuration") {
    const auto vp = rov::validate_p({{1, 0}, 0.5, {0.5, 0}, {0.5, 0}});
    CHECK_THROWS_AS(rov::singleton_value(vp), rov::NotSingleton);

    // |beta| = 1 kills the logarithmic term entirely
    const auto vb = rov::validate_b({{1, 0}, {0, 1}, 0.5, {1, 0}, {0.4, 0}});
    CHECK(rel(rov::singleton_value(vb), {1.0, 0.2}) < 1e-14);
}

TEST_CASE("interior point closed forms") {
    // class P with lambda = 0: log term vanishes
    const auto vp0 = rov::validate_p({{3, -2}, 0.5, {0, 0}, {0.4, 0.2}});
    CHECK(rov::interior_point(vp0) == Complex(3, -2));

    // class B with beta = 0: the quadratic limit
    const auto vb0 = rov::validate_b({{1, 0}, {0, 0}, 0.5, {1, 0}, {0.4, 0}});
    CHECK(rel(rov::interior_point(vb0), {1.04, 0.0}) < 1e-15);

    // figure-1 closed form against the high-precision reference
    const auto vb = rov::preset_b(1);
    const Complex got = rov::interior_point(vb);
    CHECK(rel(got, {-218.59480529597162, 551.29663235571898}) < 1e-14);
    const auto& p = vb.get();
    CHECK(ref::rel_err(got, ref::interior_b(ref::bigc(p.alpha), ref::bigc(p.beta), p.M,
                                            ref::bigc(p.lambda), ref::bigc(p.z0))) < 1e-14);

    const auto vp = rov::preset_p(1);
    CHECK(rel(rov::interior_point(vp), {-230.97935399398437, 799.31690113076983}) < 1e-14);
}

TEST_CASE("interior point equals the a = 0 quadrature") {
    for (int fig = 1; fig <= 5; ++fig) {
        {
            const auto vb = rov::preset_b(fig);
            const Complex closed = rov::interior_point(vb);
            const Complex sampled = rov::sample_derivative(vb, {0, 0}, 1e-12);
            CHECK(std::abs(closed - sampled) <= 1e-10 * std::max(1.0, std::abs(closed)));
        }
        {
            const auto vp = rov::preset_p(fig);
            const Complex closed = rov::interior_point(vp);
            const Complex sampled = rov::sample_derivative(vp, {0, 0}, 1e-12);
            CHECK(std::abs(closed - sampled) <= 1e-10 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST_CASE("interior point varies continuously as beta -> 0") {
    rov::ClassBParams p{{50, 0}, {0, 0}, 50.0, {0.3, 0.2}, {0.6, -0.2}};
    const Complex base = rov::interior_point(rov::validate_b(p));
    double slope = 0.0;
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        rov::ClassBParams q = p;
        q.beta = {eps * 0.6, -eps * 0.8};
        const double diff = std::abs(rov::interior_point(rov::validate_b(q)) - base);
        if (eps == 1e-4) {
            slope = diff / eps;
            CHECK(slope > 0.0);
        } else {
            CHECK(diff <= 2.0 * slope * eps);
        }
    }
}

TEST_CASE("sampled extremal derivatives respect the parameter domain") {
    const auto vb = rov::preset_b(1);
    CHECK_THROWS_AS(rov::sample_derivative(vb, {2, 0}, 1e-10), rov::ValidationError);
    CHECK_THROWS_AS(rov::boundary_curve(vb, 8, 1e-10), rov::ValidationError);
}

TEST_CASE("figure-2 class-B sample matches the oracle quadrature") {
    const auto vb = rov::preset_b(2);
    const Complex a = std::polar(0.5, std::numbers::pi / 4.0);
    const Complex got = rov::sample_derivative(vb, a, 1e-12);
    CHECK(std::abs(got - Complex(386.73858979680252, 25.526054222713505)) < 5e-9);
}

TEST_CASE("covering disk degenerates with z0 and obeys closed forms") {
    const auto v0 = rov::validate_p({{2, 0}, 0.5, {0.3, 0}, {0, 0}});
    const auto d0 = rov::covering_disk(v0, rov::radial_path({0, 0}), 1e-10);
    CHECK(d0.center == Complex(2, 0));
    CHECK(d0.radius == 0.0);

    // lambda = 0, radial path to t0 = 1/2: both integrals have elementary
    // antiderivatives
    const auto vp = rov::validate_p({{1, 0}, 0.5, {0, 0}, {0.5, 0}});
    const auto d = rov::covering_disk(vp, rov::radial_path({0.5, 0}), 1e-12);
    CHECK(rel(d.center, {1.0161346302843928, 0.0}) < 1e-13);
    CHECK(d.radius == Approx(0.12770640594149767).epsilon(1e-12));
}

TEST_CASE("figure-3 class-B radial disk matches the oracle quadrature") {
    const auto vb = rov::preset_b(3);
    const auto d = rov::covering_disk(vb, rov::radial_path(vb->z0), 1e-11);
    CHECK(std::abs(d.center - Complex(114.99005311966093, -72.286332505673401)) < 1e-7);
    CHECK(d.radius == Approx(43.180131459662269).epsilon(1e-9));
}

TEST_CASE("covering disk validates its path and lambda domain") {
    const auto vp = rov::validate_p({{1, 0}, 0.5, {1.0, 0}, {0.5, 0}});
    CHECK_THROWS_AS(rov::covering_disk(vp, rov::radial_path({0.5, 0}), 1e-10), rov::Error);

    const auto ok = rov::validate_p({{1, 0}, 0.5, {0.2, 0}, {0.5, 0}});
    rov::PathSpec wrong_end{{{0, 0}, {0.4, 0}}, rov::PathRule::StraightSegment};
    CHECK_THROWS_AS(rov::covering_disk(ok, wrong_end, 1e-10), rov::ValidationError);
    rov::PathSpec wrong_start{{{0.1, 0}, {0.5, 0}}, rov::PathRule::StraightSegment};
    CHECK_THROWS_AS(rov::covering_disk(ok, wrong_start, 1e-10), rov::ValidationError);
}

TEST_CASE("boundary samples stay inside the radial covering disk") {
    for (int fig : {1, 4}) {
        const auto vp = rov::preset_p(fig);
        const auto curve = rov::boundary_curve(vp, 256, 1e-10);
        const auto disk = rov::covering_disk(vp, rov::radial_path(vp->z0), 1e-11);
        const double scale = std::max(1.0, 2 * curve.scale);
        for (const auto& s : curve.samples)
            CHECK(std::abs(s.w - disk.center) - disk.radius <= 1e-8 * scale);
    }
}

TEST_CASE("boundary samples coincide with extremal samples on the grid") {
    const auto vp = rov::preset_p(2);
    const auto curve = rov::boundary_curve(vp, 64, 1e-10);
    const double scale = std::max(1.0, 2 * curve.scale);
    for (std::size_t k = 0; k < curve.samples.size(); k += 7) {
        const Complex a = std::polar(1.0, curve.samples[k].theta);
        const Complex w = rov::sample_derivative(vp, a, curve.tol);
        CHECK(std::abs(w - curve.samples[k].w) <= 2 * curve.tol * scale);
    }
}

TEST_CASE("interior point lies inside the sampled boundary polygon") {
    for (int fig = 1; fig <= 5; ++fig) {
        const auto vb = rov::preset_b(fig);
        const auto poly = rov::make_polygon(rov::boundary_curve(vb, 256, 1e-10));
        CHECK(rov::check_contains(poly, rov::interior_point(vb)).pass);
        const auto vp = rov::preset_p(fig);
        const auto polyp = rov::make_polygon(rov::boundary_curve(vp, 256, 1e-10));
        CHECK(rov::check_contains(polyp, rov::interior_point(vp)).pass);
    }
}

TEST_CASE("curves collapse as lambda approaches the unit circle") {
    // diameter at t = 0.999 is under 1% of the t = 0 diameter
    rov::ClassPParams base = rov::figure_preset(1).p;
    rov::ClassPParams at0 = base;
    at0.lambda = {0, 0};
    rov::ClassPParams at999 = base;
    at999.lambda = {0.999, 0};
    const auto c0 = rov::boundary_curve(rov::validate_p(at0), 128, 1e-10);
    const auto c1 = rov::boundary_curve(rov::validate_p(at999), 128, 1e-10);
    CHECK_FALSE(c1.singleton);
    CHECK(c1.scale <= 0.01 * c0.scale);
}

TEST_CASE("validation rejects the out-of-class figure-2 class-B preset") {
    // |beta| = 1.0774 there; the preset loader deliberately bypasses this.
    try {
        rov::validate_b(rov::figure_preset(2).b);
        FAIL("expected InvalidBeta");
    } catch (const rov::ValidationError& e) {
        CHECK(e.name() == "InvalidBeta");
    }
    CHECK_NOTHROW(rov::validate_b(rov::figure_preset(3).b));
    CHECK_NOTHROW(rov::validate_b(rov::figure_preset(4).b));
    CHECK_NOTHROW(rov::validate_b(rov::figure_preset(5).b));
    for (int fig = 1; fig <= 5; ++fig) CHECK_NOTHROW(rov::validate_p(rov::figure_preset(fig).p));
}
