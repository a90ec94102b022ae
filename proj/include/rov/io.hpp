#pragma once

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rov/errors.hpp"
#include "rov/region.hpp"
#include "rov/verify.hpp"

// Serialization of curves and reports.  All numeric output goes through one
// fixed %.17g formatter so identical inputs produce byte-identical files.

namespace rov {

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

/// CSV with header `theta,re,im`, one row per sample; a degenerate
/// (singleton) curve collapses to a single row.
inline std::string curve_csv(const BoundaryCurve& curve) {
    std::string out = "theta,re,im\n";
    if (curve.singleton && !curve.samples.empty()) {
        const Complex w = curve.samples.front().w;
        out += fmt17(0.0) + "," + fmt17(w.real()) + "," + fmt17(w.imag()) + "\n";
        return out;
    }
    for (const auto& s : curve.samples)
        out += fmt17(s.theta) + "," + fmt17(s.w.real()) + "," + fmt17(s.w.imag()) + "\n";
    return out;
}

/// Parses curve CSV back into (theta, w) samples.  Round-trips emitted
/// doubles exactly (17 significant digits).
inline std::vector<CurveSample> parse_curve_csv(std::istream& in) {
    std::vector<CurveSample> samples;
    std::string line;
    if (!std::getline(in, line) || line.rfind("theta,re,im", 0) != 0)
        throw ValidationError("InvalidCSV", "missing theta,re,im header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CurveSample s{};
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &s.theta, &re, &im) != 3)
            throw ValidationError("InvalidCSV", "bad row: " + line);
        s.w = Complex(re, im);
        samples.push_back(s);
    }
    return samples;
}

struct SvgPanel {
    const BoundaryCurve* curve = nullptr;
    Complex interior;
    bool has_interior = false;
    std::string label;
};

namespace detail {

struct Box {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

inline Box curve_box(const BoundaryCurve& c) {
    Box b{c.samples.front().w.real(), c.samples.front().w.real(), c.samples.front().w.imag(),
          c.samples.front().w.imag()};
    for (const auto& s : c.samples) {
        b.min_x = std::min(b.min_x, s.w.real());
        b.max_x = std::max(b.max_x, s.w.real());
        b.min_y = std::min(b.min_y, s.w.imag());
        b.max_y = std::max(b.max_y, s.w.imag());
    }
    return b;
}

}  // namespace detail

/// Standalone SVG: each curve drawn as one closed polyline in its own
/// 800x800 panel (auto-fitted with a 5% margin, y axis pointing up), the
/// interior point marked with a cross glyph.
inline std::string curve_svg(const std::vector<SvgPanel>& panels) {
    const double side = 800.0, gap = 50.0;
    const double width = side * panels.size() + gap * (panels.size() - 1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt17(width)
        << "\" height=\"800\" viewBox=\"0 0 " << fmt17(width) << " 800\">\n";
    for (std::size_t k = 0; k < panels.size(); ++k) {
        const auto& panel = panels[k];
        const auto& curve = *panel.curve;
        detail::Box box = detail::curve_box(curve);
        if (panel.has_interior) {
            box.min_x = std::min(box.min_x, panel.interior.real());
            box.max_x = std::max(box.max_x, panel.interior.real());
            box.min_y = std::min(box.min_y, panel.interior.imag());
            box.max_y = std::max(box.max_y, panel.interior.imag());
        }
        const double span = std::max({box.max_x - box.min_x, box.max_y - box.min_y, 1e-30});
        const double margin = 0.05 * span;
        const double scale = side / (span + 2.0 * margin);
        const double ox = side * k + gap * k;
        const double cx = 0.5 * (box.min_x + box.max_x);
        const double cy = 0.5 * (box.min_y + box.max_y);
        auto X = [&](double x) { return ox + side / 2.0 + (x - cx) * scale; };
        auto Y = [&](double y) { return side / 2.0 - (y - cy) * scale; };

        out << "  <g>\n    <path d=\"";
        for (std::size_t i = 0; i < curve.samples.size(); ++i) {
            const Complex w = curve.samples[i].w;
            out << (i == 0 ? "M " : "L ") << fmt17(X(w.real())) << " " << fmt17(Y(w.imag())) << " ";
        }
        out << "Z\" fill=\"none\" stroke=\"#20507a\" stroke-width=\"1.5\"/>\n";
        if (panel.has_interior) {
            const double px = X(panel.interior.real());
            const double py = Y(panel.interior.imag());
            const double r = 8.0;
            out << "    <path d=\"M " << fmt17(px - r) << " " << fmt17(py) << " L " << fmt17(px + r)
                << " " << fmt17(py) << " M " << fmt17(px) << " " << fmt17(py - r) << " L "
                << fmt17(px) << " " << fmt17(py + r)
                << "\" stroke=\"#a03030\" stroke-width=\"1.5\"/>\n";
        }
        if (!panel.label.empty())
            out << "    <text x=\"" << fmt17(ox + 10.0)
                << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" << panel.label
                << "</text>\n";
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// One JSON object per check under "checks", plus an echo of the preset /
/// parameters that produced them.
inline nlohmann::ordered_json report_json(const std::vector<CertReport>& checks,
                                          const nlohmann::ordered_json& preset_echo) {
    nlohmann::ordered_json doc;
    doc["preset"] = preset_echo;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["margin"] = c.margin;
        jc["witness"] = nlohmann::ordered_json::array();
        for (const auto& w : c.witnesses) jc["witness"].push_back({w.real(), w.imag()});
        if (!c.detail.empty()) jc["detail"] = c.detail;
        doc["checks"].push_back(jc);
    }
    return doc;
}

inline nlohmann::ordered_json params_json(const ClassBParams& p) {
    return {{"class", "b"},
            {"alpha", {p.alpha.real(), p.alpha.imag()}},
            {"beta", {p.beta.real(), p.beta.imag()}},
            {"m", p.M},
            {"lambda", {p.lambda.real(), p.lambda.imag()}},
            {"z0", {p.z0.real(), p.z0.imag()}}};
}

inline nlohmann::ordered_json params_json(const ClassPParams& p) {
    return {{"class", "p"},
            {"alpha", {p.alpha.real(), p.alpha.imag()}},
            {"m", p.M},
            {"lambda", {p.lambda.real(), p.lambda.imag()}},
            {"z0", {p.z0.real(), p.z0.imag()}}};
}

}  // namespace rov
