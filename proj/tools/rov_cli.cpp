// Command-line front end: computes boundary curves of the derivative
// regions, renders figures, runs the certification battery, samples
// extremal derivatives and emits covering disks.
//
// Exit codes: 0 ok, 1 certification check failed, 2 invalid parameters,
// 3 numerical failure (no convergence / degenerate denominator).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rov/io.hpp"
#include "rov/presets.hpp"
#include "rov/region.hpp"
#include "rov/verify.hpp"

namespace {

using rov::Complex;

Complex parse_complex(const std::string& s, const char* flag) {
    double re = 0.0, im = 0.0;
    char tail = 0;
    const int got = std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &tail);
    if (got != 2)
        throw rov::ValidationError("InvalidComplex",
                                   std::string(flag) + " expects re,im (got '" + s + "')");
    return {re, im};
}

std::vector<Complex> parse_path_nodes(const std::string& s) {
    std::vector<Complex> nodes;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(';', pos);
        const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (!tok.empty()) nodes.push_back(parse_complex(tok, "--path"));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return nodes;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rov::ValidationError("InvalidOutput", "cannot open " + path);
    out << content;
}

// Raw option values shared by the parameter-taking subcommands.
struct ParamOpts {
    std::string cls;
    std::string alpha = "1,0";
    std::string beta = "0,0";
    std::string lambda = "0,0";
    std::string z0 = "0.5,0";
    double m = 0.5;
    int figure = 0;  // 0 = explicit parameters
    bool relax = false;
};

struct Problem {
    char cls = 'b';
    std::optional<rov::ValidatedB> b;
    std::optional<rov::ValidatedP> p;
    nlohmann::ordered_json echo;
};

Problem resolve_problem(const ParamOpts& o) {
    Problem prob;
    if (o.cls != "b" && o.cls != "p")
        throw rov::ValidationError("InvalidClass", "--class must be b or p");
    prob.cls = o.cls[0];
    if (o.figure != 0) {
        const auto& fp = rov::figure_preset(o.figure);
        if (prob.cls == 'b') {
            prob.b = rov::preset_b(o.figure);
            prob.echo = rov::params_json(fp.b);
        } else {
            prob.p = rov::preset_p(o.figure);
            prob.echo = rov::params_json(fp.p);
        }
        prob.echo["figure"] = o.figure;
        return prob;
    }
    if (prob.cls == 'b') {
        rov::ClassBParams p{parse_complex(o.alpha, "--alpha"), parse_complex(o.beta, "--beta"),
                            o.m, parse_complex(o.lambda, "--lambda"), parse_complex(o.z0, "--z0")};
        prob.b = rov::validate_b(p);
        prob.echo = rov::params_json(p);
    } else {
        rov::ClassPParams p{parse_complex(o.alpha, "--alpha"), o.m,
                            parse_complex(o.lambda, "--lambda"), parse_complex(o.z0, "--z0")};
        auto vp = rov::validate_p(p, o.relax);
        for (const auto& w : vp.warnings()) std::cerr << "warning: " << w << "\n";
        prob.p = std::move(vp);
        prob.echo = rov::params_json(p);
    }
    return prob;
}

rov::BoundaryCurve curve_of(const Problem& prob, int samples, double tol) {
    return prob.cls == 'b' ? rov::boundary_curve(*prob.b, samples, tol)
                           : rov::boundary_curve(*prob.p, samples, tol);
}

Complex interior_of(const Problem& prob) {
    return prob.cls == 'b' ? rov::interior_point(*prob.b) : rov::interior_point(*prob.p);
}

Complex sample_of(const Problem& prob, Complex a, double tol) {
    return prob.cls == 'b' ? rov::sample_derivative(*prob.b, a, tol)
                           : rov::sample_derivative(*prob.p, a, tol);
}

double default_tol() {
    if (const char* env = std::getenv("ROV_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v >= 1e-13 && v <= 1e-3) return v;
        throw rov::ValidationError("InvalidTolerance", "ROV_TOL must be a number in [1e-13, 1e-3]");
    }
    return rov::kDefaultTol;
}

// ---------------------------------------------------------------------------
// Certification battery over presets.

struct BatteryItem {
    std::string label;
    rov::CertReport report;
};

template <class Valid, class Params>
void geometry_checks(const std::string& label, const Valid& vp, const Params& params, int samples,
                     double tol, std::vector<BatteryItem>& items) {
    const auto curve = rov::boundary_curve(vp, samples, tol);
    const auto poly = rov::make_polygon(curve);
    const double scale = std::max(1.0, poly.diameter);

    items.push_back({label, rov::check_convex(poly, 1e-9)});
    items.push_back({label, rov::check_simple(poly)});

    rov::CertReport closure{"closure", curve.closure_error <= 1e-7 * scale, curve.closure_error,
                            {}, "|w(-pi) - w(pi)| vs 1e-7 * scale"};
    items.push_back({label, closure});

    items.push_back({label, rov::check_contains(poly, rov::interior_point(vp))});

    const auto disk = rov::covering_disk(vp, rov::radial_path(params.z0), tol);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& s : curve.samples)
        worst = std::max(worst, std::abs(s.w - disk.center) - disk.radius);
    rov::CertReport cover{"covering_disk", worst <= 1e-8 * scale, worst, {},
                          "max |w - C| - R over samples; R = " + rov::fmt17(disk.radius)};
    items.push_back({label, cover});
}

template <class Params>
void identity_checks(const std::string& label, const Params& params,
                     std::vector<BatteryItem>& items) {
    items.push_back(
        {label, rov::check_extremal_identity(params, rov::PolarGrid{0.9, 32, 32}, 16)});
}

template <class Valid>
void consistency_checks(const std::string& label, const Valid& vp,
                        std::vector<BatteryItem>& items) {
    const Complex closed = rov::interior_point(vp);
    const Complex sampled = rov::sample_derivative(vp, Complex(0, 0), 1e-12);
    const double err = std::abs(closed - sampled);
    const double scale = std::max(1.0, std::abs(closed));
    items.push_back({label,
                     {"interior_consistency", err <= 1e-9 * scale, err, {},
                      "|closed form - a=0 quadrature|"}});
}

void membership_checks(const std::string& label, const rov::ClassBParams& params,
                       std::vector<BatteryItem>& items) {
    const rov::PolarGrid grid{0.995, 48, 96};
    rov::CertReport agg{"class_membership_b", true, std::numeric_limits<double>::infinity(), {}, ""};
    for (int t = 1; t <= 16; ++t) {
        const Complex a = std::polar(1.0, -std::numbers::pi + 2.0 * std::numbers::pi * t / 16.0);
        auto rep = rov::check_class_membership(params, a, grid);
        if (rep.margin < agg.margin) {
            agg.margin = rep.margin;
            agg.detail = rep.detail;
            agg.witnesses = rep.witnesses;
        }
        agg.pass = agg.pass && rep.pass;
    }
    items.push_back({label, agg});
}

void membership_checks(const std::string& label, const rov::ClassPParams& params,
                       std::vector<BatteryItem>& items) {
    const rov::PolarGrid grid{0.995, 48, 96};
    rov::CertReport agg{"class_membership_p", true, std::numeric_limits<double>::infinity(), {}, ""};
    for (int t = 1; t <= 16; ++t) {
        const Complex a = std::polar(1.0, -std::numbers::pi + 2.0 * std::numbers::pi * t / 16.0);
        auto rep = rov::check_class_membership(params, a, grid);
        if (rep.margin < agg.margin) {
            agg.margin = rep.margin;
            agg.detail = rep.detail;
            agg.witnesses = rep.witnesses;
        }
        agg.pass = agg.pass && rep.pass;
    }
    items.push_back({label, agg});
}

int run_check(const std::string& suite, int figure, int samples, double tol,
              const std::string& json_path) {
    std::vector<BatteryItem> items;
    const bool geometry = suite == "geometry" || suite == "all";
    const bool identities = suite == "identities" || suite == "all";
    const bool membership = suite == "membership" || suite == "all";
    if (!geometry && !identities && !membership)
        throw rov::ValidationError("InvalidSuite", "--suite must be geometry|identities|membership|all");

    for (const auto& fp : rov::figure_presets()) {
        if (figure != 0 && fp.figure != figure) continue;
        const std::string lb = "fig" + std::to_string(fp.figure) + "/b";
        const std::string lp = "fig" + std::to_string(fp.figure) + "/p";
        const auto vb = rov::ValidatedB::trusted(fp.b);
        const auto vp = rov::ValidatedP::trusted(fp.p);
        if (geometry) {
            geometry_checks(lb, vb, fp.b, samples, tol, items);
            geometry_checks(lp, vp, fp.p, samples, tol, items);
        }
        if (identities) {
            identity_checks(lb, fp.b, items);
            identity_checks(lp, fp.p, items);
            consistency_checks(lb, vb, items);
            consistency_checks(lp, vp, items);
            rov::CertReport roots_b{"root_locations_b", true,
                                    std::numeric_limits<double>::infinity(), {}, ""};
            rov::CertReport roots_p{"root_locations_p", true,
                                    std::numeric_limits<double>::infinity(), {}, ""};
            for (int t = 1; t <= 64; ++t) {
                const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * t / 64.0;
                auto rb = rov::check_root_locations(theta, fp.b.lambda, fp.b.beta);
                auto rp = rov::check_root_locations_p(theta, fp.p.lambda);
                if (rb.margin < roots_b.margin) {
                    roots_b.margin = rb.margin;
                    roots_b.witnesses = rb.witnesses;
                }
                roots_b.pass = roots_b.pass && rb.pass;
                if (rp.margin < roots_p.margin) {
                    roots_p.margin = rp.margin;
                    roots_p.witnesses = rp.witnesses;
                }
                roots_p.pass = roots_p.pass && rp.pass;
            }
            roots_b.detail = "worst min-root-modulus margin over 64 theta samples";
            roots_p.detail = roots_b.detail;
            items.push_back({lb, roots_b});
            items.push_back({lp, roots_p});
        }
        if (membership) {
            membership_checks(lb, fp.b, items);
            membership_checks(lp, fp.p, items);
        }
    }
    if (membership) {
        // sup bound applies to the lambda = 0 family only; run the canonical
        // M = 1/2 instance
        rov::ClassPParams sup{{1.0, 0.0}, 0.5, {0.0, 0.0}, {0.5, 0.0}};
        items.push_back({"sup/m=0.5", rov::check_sup_bound_p(sup, rov::PolarGrid{0.999, 64, 64}, 32)});
    }

    std::vector<rov::CertReport> reports;
    bool all_pass = true;
    for (const auto& item : items) {
        rov::CertReport r = item.report;
        r.name = item.label + " " + r.name;
        all_pass = all_pass && r.pass;
        reports.push_back(std::move(r));
    }
    nlohmann::ordered_json echo;
    echo["suite"] = suite;
    echo["figure"] = figure == 0 ? "all" : std::to_string(figure);
    const auto doc = rov::report_json(reports, echo);
    const std::string text = doc.dump(2) + "\n";
    if (!json_path.empty())
        write_file(json_path, text);
    else
        std::cout << text;
    for (const auto& r : reports)
        if (!r.pass) std::cerr << "check failed: " << r.name << " margin " << r.margin << "\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"region-of-variability curves: compute, certify, render"};
    app.require_subcommand(1);

    ParamOpts opts;
    int samples = 512;
    double tol = -1.0;  // resolved against ROV_TOL after parse
    std::string out_path, svg_path, json_path;

    auto add_param_flags = [&](CLI::App* cmd, bool with_class) {
        if (with_class) cmd->add_option("--class", opts.cls, "problem class: b or p")->required();
        cmd->add_option("--alpha", opts.alpha, "f'(0), as re,im");
        cmd->add_option("--beta", opts.beta, "f''(0)/M direction (class b), re,im");
        cmd->add_option("--lambda", opts.lambda, "Schwarz derivative parameter, re,im");
        cmd->add_option("--z0", opts.z0, "evaluation point, re,im");
        cmd->add_option("--m", opts.m, "bound M");
        cmd->add_option("--figure", opts.figure, "use bundled figure preset 1..5");
        cmd->add_flag("--relax-univalence", opts.relax,
                      "downgrade the class-p univalence bound on M to a warning");
        cmd->add_option("--tol", tol, "quadrature tolerance (defaults to ROV_TOL or 1e-10)");
        cmd->add_option("--samples", samples, "boundary samples");
    };

    auto* cmd_boundary = app.add_subcommand("boundary", "sample one boundary curve, write CSV/SVG");
    add_param_flags(cmd_boundary, true);
    cmd_boundary->add_option("--out", out_path, "CSV output path (default: stdout)");
    cmd_boundary->add_option("--svg", svg_path, "also write an SVG rendering");

    auto* cmd_figure = app.add_subcommand("figure", "render both curves of one bundled figure");
    int figure_id = 0;
    cmd_figure->add_option("id", figure_id, "figure id 1..5")->required();
    cmd_figure->add_option("--samples", samples, "boundary samples");
    cmd_figure->add_option("--tol", tol, "quadrature tolerance");
    cmd_figure->add_option("--out", out_path, "CSV base path (side suffix inserted)");
    cmd_figure->add_option("--svg", svg_path, "SVG path (default figureN.svg)");

    auto* cmd_check = app.add_subcommand("check", "run the certification battery");
    std::string suite = "all";
    cmd_check->add_option("--suite", suite, "geometry|identities|membership|all");
    int check_samples = 1024;
    cmd_check->add_option("--figure", opts.figure, "restrict to one figure");
    cmd_check->add_option("--samples", check_samples, "boundary samples")->capture_default_str();
    cmd_check->add_option("--tol", tol, "quadrature tolerance");
    cmd_check->add_option("--json", json_path, "write the JSON report here instead of stdout");

    auto* cmd_sample = app.add_subcommand("sample", "evaluate one extremal derivative");
    add_param_flags(cmd_sample, true);
    std::string a_str = "0,0";
    cmd_sample->add_option("--a", a_str, "family parameter, re,im, |a| <= 1")->required();

    auto* cmd_disk = app.add_subcommand("disk", "covering disk along a path from 0 to z0");
    add_param_flags(cmd_disk, true);
    std::string path_str;
    cmd_disk->add_option("--path", path_str,
                         "intermediate polyline nodes re,im;re,im;... (default: none)");
    cmd_disk->add_option("--json", json_path, "write disk JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, every parse error is a usage error
    }

    try {
        if (tol < 0.0) tol = default_tol();
        rov::detail::check_tol(tol);

        if (app.got_subcommand(cmd_boundary)) {
            const Problem prob = resolve_problem(opts);
            const auto curve = curve_of(prob, samples, tol);
            if (curve.near_singleton)
                std::cerr << "warning: NearSingleton: |lambda| within 1e-6 of 1, curve is tiny\n";
            const std::string csv = rov::curve_csv(curve);
            if (out_path.empty())
                std::cout << csv;
            else
                write_file(out_path, csv);
            if (!svg_path.empty()) {
                rov::SvgPanel panel{&curve, interior_of(prob), true, ""};
                write_file(svg_path, rov::curve_svg({panel}));
            }
            return 0;
        }

        if (app.got_subcommand(cmd_figure)) {
            const auto cb = rov::boundary_curve(rov::preset_b(figure_id), samples, tol);
            const auto cp = rov::boundary_curve(rov::preset_p(figure_id), samples, tol);
            std::string base = out_path.empty() ? "figure" + std::to_string(figure_id) : out_path;
            if (base.size() > 4 && base.substr(base.size() - 4) == ".csv")
                base = base.substr(0, base.size() - 4);
            write_file(base + "_b.csv", rov::curve_csv(cb));
            write_file(base + "_p.csv", rov::curve_csv(cp));
            const std::string svg = svg_path.empty() ? base + ".svg" : svg_path;
            rov::SvgPanel pb{&cb, rov::interior_point(rov::preset_b(figure_id)), true,
                             "V1, figure " + std::to_string(figure_id)};
            rov::SvgPanel pp{&cp, rov::interior_point(rov::preset_p(figure_id)), true,
                             "V2, figure " + std::to_string(figure_id)};
            write_file(svg, rov::curve_svg({pb, pp}));
            std::cout << "wrote " << base << "_b.csv, " << base << "_p.csv, " << svg << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_check))
            return run_check(suite, opts.figure, check_samples, tol, json_path);

        if (app.got_subcommand(cmd_sample)) {
            const Problem prob = resolve_problem(opts);
            const Complex a = parse_complex(a_str, "--a");
            const Complex w = sample_of(prob, a, tol);
            std::string verdict;
            if (std::abs(a) >= 1.0 - 1e-12) {
                verdict = "on-boundary";
            } else {
                const auto curve = curve_of(prob, std::max(samples, 256), tol);
                if (curve.singleton) {
                    verdict = "singleton";
                } else {
                    switch (rov::classify_point(rov::make_polygon(curve), w)) {
                        case rov::Containment::Inside: verdict = "inside"; break;
                        case rov::Containment::Outside: verdict = "outside"; break;
                        case rov::Containment::OnBoundary: verdict = "on-boundary"; break;
                    }
                }
            }
            std::cout << "value = " << rov::fmt17(w.real()) << "," << rov::fmt17(w.imag()) << "\n"
                      << "containment = " << verdict << "\n";
            return 0;
        }

        if (app.got_subcommand(cmd_disk)) {
            const Problem prob = resolve_problem(opts);
            const Complex z0 = prob.cls == 'b' ? (*prob.b)->z0 : (*prob.p)->z0;
            rov::PathSpec path;
            path.nodes.push_back({0.0, 0.0});
            for (const Complex& node : parse_path_nodes(path_str)) path.nodes.push_back(node);
            path.nodes.push_back(z0);
            path.rule = path.nodes.size() == 2 ? rov::PathRule::StraightSegment
                                               : rov::PathRule::Polyline;
            const auto disk = prob.cls == 'b' ? rov::covering_disk(*prob.b, path, tol)
                                              : rov::covering_disk(*prob.p, path, tol);
            std::cout << "center = " << rov::fmt17(disk.center.real()) << ","
                      << rov::fmt17(disk.center.imag()) << "\n"
                      << "radius = " << rov::fmt17(disk.radius) << "\n";
            if (!json_path.empty()) {
                nlohmann::ordered_json doc;
                doc["center"] = {disk.center.real(), disk.center.imag()};
                doc["radius"] = disk.radius;
                doc["path"] = nlohmann::ordered_json::array();
                for (const auto& n : path.nodes) doc["path"].push_back({n.real(), n.imag()});
                write_file(json_path, doc.dump(2) + "\n");
            }
            return 0;
        }
    } catch (const rov::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const rov::NoConvergence& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const rov::Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}
