#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nodoid::cli {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
    bool dashed = false;
};

/// Minimal static line plot: axes with ticks, axis labels, title, legend and
/// one polyline per series. SVG 1.1, no external references, no timestamps.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label, int width = 640,
            int height = 440);

    void add(Series series);
    void write(std::ostream& os) const;

private:
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    int width_;
    int height_;
    std::vector<Series> series_;
};

}  // namespace nodoid::cli
