#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "rov/presets.hpp"
#include "rov/verify.hpp"

using rov::Complex;
using Catch::Approx;

namespace {

rov::Polygon unit_square() {
    const Complex pts[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return rov::make_polygon(pts);
}

}  // namespace

TEST_CASE("polygon construction normalizes orientation and filters duplicates") {
    const Complex cw[] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    const auto poly = rov::make_polygon(cw);
    REQUIRE(poly.vertices.size() == 4);
    CHECK(poly.diameter == Approx(std::sqrt(2.0)));
    double area = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const Complex a = poly.vertices[i], b = poly.vertices[(i + 1) % 4];
        area += a.real() * b.imag() - b.real() * a.imag();
    }
    CHECK(area > 0.0);  // counterclockwise after normalization

    const Complex dup[] = {{0, 0}, {0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 1}, {0, 0}};
    CHECK(rov::make_polygon(dup).vertices.size() == 4);

    const Complex degenerate[] = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    CHECK_THROWS_AS(rov::make_polygon(degenerate), rov::DegeneratePolygon);
}

TEST_CASE("convexity check on squares") {
    const auto ok = rov::check_convex(unit_square(), 1e-9);
    CHECK(ok.pass);
    CHECK(ok.margin == Approx(1.0));

    const Complex dent[] = {{0, 0}, {1, 0}, {0.4, 0.4}, {0, 1}};
    const auto bad = rov::check_convex(rov::make_polygon(dent), 1e-9);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(std::abs(bad.witnesses[0] - Complex(0.4, 0.4)) < 1e-15);
}

TEST_CASE("simplicity check on quadrilaterals") {
    CHECK(rov::check_simple(unit_square()).pass);

    // bowtie: force the vertex order by building the polygon directly
    rov::Polygon bow;
    bow.vertices = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    bow.diameter = std::sqrt(2.0);
    const auto rep = rov::check_simple(bow);
    CHECK_FALSE(rep.pass);
    CHECK(rep.witnesses.size() == 4);
}

TEST_CASE("containment check classifies inside, outside and boundary") {
    const auto poly = unit_square();
    CHECK(rov::check_contains(poly, {0.5, 0.5}).pass);
    CHECK(rov::check_contains(poly, {0.5, 0.5}).margin == Approx(0.5));

    const auto outside = rov::check_contains(poly, {2, 0});
    CHECK_FALSE(outside.pass);
    CHECK(outside.margin < 0.0);

    const auto edge = rov::check_contains(poly, {0.5, 0.0});
    CHECK_FALSE(edge.pass);
    CHECK(edge.detail == "OnBoundary");

    CHECK(rov::classify_point(poly, {0.2, 0.9}) == rov::Containment::Inside);
    CHECK(rov::classify_point(poly, {-0.1, 0.5}) == rov::Containment::Outside);
}

TEST_CASE("extremal identity holds on preset grids") {
    const rov::PolarGrid grid{0.9, 16, 16};
    const auto rb = rov::check_extremal_identity(rov::figure_preset(5).b, grid, 8);
    CHECK(rb.pass);
    CHECK(rb.margin < 1e-10);
    const auto rp = rov::check_extremal_identity(rov::figure_preset(1).p, grid, 8);
    CHECK(rp.pass);
    CHECK(rp.margin < 1e-10);
}

TEST_CASE("extremal identity hand case at z = 1/2, lambda = 0") {
    // |H''(1/2) - c2| = r2 with all three in elementary form
    rov::ClassPParams p{{1, 0}, 0.5, {0, 0}, {0.5, 0}};
    const Complex h = rov::integrand_p({0.5, 0}, {1, 0}, p);
    const auto cr = rov::center_radius_p({0.5, 0}, p);
    CHECK(h.real() == Approx(4.0 * p.M / 3.0).epsilon(1e-15));
    CHECK(cr.center.real() == Approx(4.0 * p.M / 15.0).epsilon(1e-15));
    CHECK(cr.radius == Approx(16.0 * p.M / 15.0).epsilon(1e-15));
    CHECK(std::abs(h - cr.center) == Approx(cr.radius).epsilon(1e-14));
}

TEST_CASE("extremal identity reports fully-degenerate grids as skipped") {
    const auto rep =
        rov::check_extremal_identity(rov::figure_preset(1).b, rov::PolarGrid{0.0, 1, 1}, 1);
    CHECK(rep.pass);
    CHECK(rep.detail.find("skipped") != std::string::npos);
}

TEST_CASE("identity modulus fails for the out-of-class figure-2 parameters") {
    // |beta| > 1 flips the sign of the radius field, so the modulus half of
    // the identity cannot hold even though the phase half still does.
    const auto rep =
        rov::check_extremal_identity(rov::figure_preset(2).b, rov::PolarGrid{0.9, 8, 8}, 4);
    CHECK_FALSE(rep.pass);
    CHECK(rep.margin > 1.0);
}

TEST_CASE("class membership bounds hold for admissible parameters") {
    const rov::PolarGrid grid{0.995, 24, 48};
    for (int t = 0; t < 4; ++t) {
        const Complex a = std::polar(1.0, -std::numbers::pi + 2 * std::numbers::pi * (t + 1) / 4);
        const auto rb = rov::check_class_membership(rov::figure_preset(1).b, a, grid);
        CHECK(rb.pass);
        CHECK(rb.margin > 0.0);
        const auto rp = rov::check_class_membership(rov::figure_preset(2).p, a, grid);
        CHECK(rp.pass);
        CHECK(rp.margin > 0.0);
    }
    // beta = 0, lambda = 0, a = 1: F'' = M z^2, so |z F''| = M |z|^3
    rov::ClassBParams simple{{1, 0}, {0, 0}, 0.5, {0, 0}, {0.3, 0}};
    const auto rep = rov::check_class_membership(simple, {1, 0}, grid);
    CHECK(rep.pass);
    CHECK(rep.margin == Approx(1.0 - 0.995 * 0.995 * 0.995).epsilon(1e-10));
}

TEST_CASE("membership detects a field exceeding its stated bound") {
    // same field with the bound an order of magnitude tighter: every grid
    // point violates it, so the check must fail with a witness
    rov::ClassBParams inflated = rov::figure_preset(1).b;
    inflated.M *= 10.0;
    const auto rep = rov::check_class_membership(inflated, {1, 0}, rov::PolarGrid{0.995, 16, 32},
                                                 rov::figure_preset(1).b.M);
    CHECK_FALSE(rep.pass);
    CHECK(rep.witnesses.size() == 1);
}

TEST_CASE("membership flags the out-of-class figure-2 class-B parameters") {
    const auto rep = rov::check_class_membership(rov::figure_preset(2).b, {1, 0},
                                                 rov::PolarGrid{0.995, 48, 96});
    CHECK_FALSE(rep.pass);
}

TEST_CASE("sup bound for the lambda = 0 family") {
    rov::ClassPParams p{{1, 0}, 0.5, {0, 0}, {0.5, 0}};
    const auto rep = rov::check_sup_bound_p(p, rov::PolarGrid{0.999, 48, 48}, 32);
    CHECK(rep.pass);
    CHECK(rep.margin > 0.0);
    CHECK(rep.margin < 4.0 * p.M);  // the bound is approached, not slack

    rov::ClassPParams bad = p;
    bad.lambda = {0.1, 0};
    CHECK_THROWS_AS(rov::check_sup_bound_p(bad, rov::PolarGrid{0.999, 8, 8}, 4),
                    rov::ValidationError);
}

TEST_CASE("root locations in closed-form cases") {
    // beta = 1, lambda = 0, theta = 0: roots of 1 + z^2 at +-i
    const auto rep = rov::check_root_locations(0.0, {0, 0}, {1, 0});
    CHECK(rep.pass);
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(std::abs(rep.witnesses[0].imag()) == Approx(1.0));
    CHECK(rep.margin == Approx(0.0).margin(1e-14));

    // beta = 0: linear denominator, root at -1/(conj(lambda) e^{i theta})
    const auto lin = rov::check_root_locations(0.3, {0.5, 0}, {0, 0});
    CHECK(lin.pass);
    CHECK(lin.detail == "LinearCase");
    CHECK(lin.margin == Approx(1.0));  // modulus 2, margin 1

    const auto constant = rov::check_root_locations(0.3, {0, 0}, {0, 0});
    CHECK(constant.pass);
}

TEST_CASE("root locations hold over random parameter draws") {
    std::mt19937_64 rng(0x5eed2);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double theta = (2.0 * uni(rng) - 1.0) * std::numbers::pi;
        const Complex lam = std::polar(0.9999 * std::sqrt(uni(rng)), 2 * std::numbers::pi * uni(rng));
        const bool unimodular = (i % 4 == 0);
        const Complex beta = unimodular
                                 ? std::polar(1.0, 2 * std::numbers::pi * uni(rng))
                                 : std::polar(0.999 * std::sqrt(uni(rng)) + 1e-6,
                                              2 * std::numbers::pi * uni(rng));
        const auto rep = rov::check_root_locations(theta, lam, beta);
        CHECK(rep.pass);
        if (unimodular)
            for (const Complex& r : rep.witnesses) CHECK(std::abs(std::abs(r) - 1.0) <= 1e-8);

        const auto repp = rov::check_root_locations_p(theta, lam);
        CHECK(repp.pass);
        for (const Complex& r : repp.witnesses) CHECK(std::abs(std::abs(r) - 1.0) <= 1e-8);
    }
}

TEST_CASE("containment sweep stays strictly inside the sampled boundary") {
    // 500 low-discrepancy parameters with |a| <= 0.97, figure-3 class P
    const auto vp = rov::preset_p(3);
    const auto poly = rov::make_polygon(rov::boundary_curve(vp, 512, 1e-10));
    const double golden = 0.6180339887498949;
    int inside = 0;
    for (int k = 0; k < 500; ++k) {
        const Complex a = std::polar(0.97 * std::sqrt((k + 0.5) / 500.0),
                                     2 * std::numbers::pi * std::fmod(k * golden, 1.0));
        const auto rep = rov::check_contains(poly, rov::sample_derivative(vp, a, 1e-10));
        if (rep.pass && rep.margin > 1e-10 * std::max(1.0, poly.diameter)) ++inside;
    }
    CHECK(inside == 500);
}
