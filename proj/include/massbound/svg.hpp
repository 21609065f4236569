#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "massbound/bounds.hpp"

namespace massbound::svg {

// Fixed-frame polyline plot of a bound sweep, 800x500.  The whole curve is
// drawn in grey; the samples whose validity window holds are overlaid as a
// blue dashed line.  In oracle mode a red horizontal marker shows the true
// least mass eigenvalue.
inline std::string render_sweep(const SweepResult& sweep,
                                std::optional<double> w1_marker = std::nullopt) {
    constexpr double kWidth = 800.0, kHeight = 500.0;
    constexpr double kLeft = 70.0, kRight = 20.0, kTop = 20.0, kBottom = 50.0;

    double xmin = sweep.samples.front().alpha, xmax = sweep.samples.back().alpha;
    double ymin = sweep.samples.front().value, ymax = ymin;
    for (const BoundEvaluation& e : sweep.samples) {
        ymin = std::min(ymin, e.value);
        ymax = std::max(ymax, e.value);
    }
    if (w1_marker) {
        ymin = std::min(ymin, *w1_marker);
        ymax = std::max(ymax, *w1_marker);
    }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const auto px = [&](double a) {
        return kLeft + (a - xmin) / (xmax - xmin) * (kWidth - kLeft - kRight);
    };
    const auto py = [&](double v) {
        return kHeight - kBottom - (v - ymin) / (ymax - ymin) * (kHeight - kTop - kBottom);
    };
    const auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    const auto fmt_tick = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return std::string(buf);
    };

    const auto polyline = [&](const std::vector<const BoundEvaluation*>& pts,
                              const std::string& style) {
        if (pts.size() < 2) return std::string();
        std::string s = "  <polyline fill=\"none\" " + style + " points=\"";
        for (const BoundEvaluation* e : pts)
            s += fmt(px(e->alpha)) + "," + fmt(py(e->value)) + " ";
        s.back() = '"';
        s += " />\n";
        return s;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\">\n";
    out += "  <rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    out += "  <line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kHeight - kBottom) + "\" x2=\"" +
           fmt(kWidth - kRight) + "\" y2=\"" + fmt(kHeight - kBottom) +
           "\" stroke=\"black\"/>\n";
    out += "  <line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(kHeight - kBottom) + "\" stroke=\"black\"/>\n";

    std::vector<const BoundEvaluation*> all;
    for (const BoundEvaluation& e : sweep.samples) all.push_back(&e);
    out += polyline(all, "stroke=\"#999999\" stroke-width=\"1.5\"");

    // valid samples, drawn per contiguous run
    std::vector<const BoundEvaluation*> run;
    for (const BoundEvaluation& e : sweep.samples) {
        if (e.valid && *e.valid) {
            run.push_back(&e);
        } else {
            out += polyline(run, "stroke=\"#1f77b4\" stroke-width=\"2.5\" stroke-dasharray=\"8 5\"");
            run.clear();
        }
    }
    out += polyline(run, "stroke=\"#1f77b4\" stroke-width=\"2.5\" stroke-dasharray=\"8 5\"");

    if (w1_marker) {
        const double y = py(*w1_marker);
        out += "  <line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
               fmt(kWidth - kRight) + "\" y2=\"" + fmt(y) +
               "\" stroke=\"#d62728\" stroke-width=\"1.5\" stroke-dasharray=\"3 3\"/>\n";
        out += "  <text x=\"" + fmt(kWidth - kRight - 4) + "\" y=\"" + fmt(y - 5) +
               "\" text-anchor=\"end\" font-size=\"13\" fill=\"#d62728\">w1 = " +
               fmt_tick(*w1_marker) + "</text>\n";
    }

    // axis extents
    out += "  <text x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kHeight - kBottom + 18) +
           "\" font-size=\"12\">" + fmt_tick(xmin) + "</text>\n";
    out += "  <text x=\"" + fmt(kWidth - kRight) + "\" y=\"" + fmt(kHeight - kBottom + 18) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt_tick(xmax) + "</text>\n";
    out += "  <text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(py(ymin)) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt_tick(ymin) + "</text>\n";
    out += "  <text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(py(ymax) + 10) +
           "\" text-anchor=\"end\" font-size=\"12\">" + fmt_tick(ymax) + "</text>\n";
    out += "  <text x=\"" + fmt((kLeft + kWidth - kRight) / 2) + "\" y=\"" +
           fmt(kHeight - 12) + "\" text-anchor=\"middle\" font-size=\"14\">alpha</text>\n";
    out += "  <text x=\"18\" y=\"" + fmt((kTop + kHeight - kBottom) / 2) +
           "\" font-size=\"14\" transform=\"rotate(-90 18 " +
           fmt((kTop + kHeight - kBottom) / 2) + ")\" text-anchor=\"middle\">F(alpha)</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace massbound::svg
