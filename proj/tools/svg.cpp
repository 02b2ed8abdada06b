#include "svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace nodoid::cli {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Roughly five "nice" tick positions covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double f : {1.0, 2.0, 5.0, 10.0}) {
        step = f * mag;
        if (step >= raw) break;
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) {
        out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
    }
    return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label, int width,
                 int height)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)),
      width_(width),
      height_(height) {}

void SvgPlot::add(Series series) { series_.push_back(std::move(series)); }

void SvgPlot::write(std::ostream& os) const {
    constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 55;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_) {
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmin < xmax)) { xmin -= 1.0; xmax += 1.0; }
    if (!(ymin < ymax)) { ymin -= 1.0; ymax += 1.0; }
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double pw = width_ - kLeft - kRight;
    const double ph = height_ - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}px\" "
        "height=\"{}px\" viewBox=\"0 0 {} {}\">\n",
        width_, height_, width_, height_);
    os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << fmt::format(
        "<text x=\"{:.2f}\" y=\"22\" font-family=\"sans-serif\" font-size=\"15\" "
        "text-anchor=\"middle\">{}</text>\n",
        kLeft + pw / 2, escape(title_));
    os << fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        kLeft, kTop, pw, ph);

    for (double t : ticks(xmin, xmax)) {
        const double x = sx(t);
        os << fmt::format(
            "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"black\"/>\n",
            x, kTop + ph, kTop + ph + 5);
        os << fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
            "text-anchor=\"middle\">{:g}</text>\n",
            x, kTop + ph + 18, t);
    }
    for (double t : ticks(ymin, ymax)) {
        const double y = sy(t);
        os << fmt::format(
            "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n",
            kLeft - 5, y, kLeft);
        os << fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
            "text-anchor=\"end\">{:g}</text>\n",
            kLeft - 8, y + 4, t);
    }
    os << fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"13\" "
        "text-anchor=\"middle\">{}</text>\n",
        kLeft + pw / 2, static_cast<double>(height_) - 12, escape(x_label_));
    os << fmt::format(
        "<text x=\"18\" y=\"{0:.2f}\" font-family=\"sans-serif\" font-size=\"13\" "
        "text-anchor=\"middle\" transform=\"rotate(-90 18 {0:.2f})\">{1}</text>\n",
        kTop + ph / 2, escape(y_label_));

    for (std::size_t i = 0; i < series_.size(); ++i) {
        const auto& s = series_[i];
        std::string pts;
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y)) continue;
            pts += fmt::format("{:.2f},{:.2f} ", sx(x), sy(y));
        }
        if (!pts.empty()) pts.pop_back();
        os << fmt::format(
            "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.6\"{} points=\"{}\"/>\n",
            s.color, s.dashed ? " stroke-dasharray=\"6,4\"" : "", pts);
        const double ly = kTop + 14 + 18 * static_cast<double>(i);
        const double lx = kLeft + pw + 12;
        os << fmt::format(
            "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" "
            "stroke-width=\"1.6\"{}/>\n",
            lx, ly, lx + 22, ly, s.color, s.dashed ? " stroke-dasharray=\"6,4\"" : "");
        os << fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            lx + 28, ly + 4, escape(s.label));
    }
    os << "</svg>\n";
}

}  // namespace nodoid::cli
