#include "pcaepg/svg.hpp"

#include <sstream>

namespace pcaepg {

namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 30.0;

struct Frame {
    int min_row, max_row, min_col, max_col;
    double x(double col) const { return kMargin + (col - min_col) * kCell; }
    // SVG y grows downward; grid rows grow upward
    double y(double row) const { return kMargin + (max_row - row) * kCell; }
};

std::string color(int i, int n) {
    int hue = (n > 0) ? (i * 360) / n : 0;
    return "hsl(" + std::to_string(hue) + ",70%,40%)";
}

}  // namespace

std::string render_svg(const EpgRepresentation& rep) {
    auto [lo, hi] = rep.bounding_box();
    Frame f{lo.row, hi.row, lo.col, hi.col};
    double w = 2 * kMargin + (f.max_col - f.min_col) * kCell;
    double h = 2 * kMargin + (f.max_row - f.min_row) * kCell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int r = f.min_row; r <= f.max_row; ++r)
        os << "<line x1=\"" << f.x(f.min_col) << "\" y1=\"" << f.y(r) << "\" x2=\""
           << f.x(f.max_col) << "\" y2=\"" << f.y(r)
           << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
    for (int c = f.min_col; c <= f.max_col; ++c)
        os << "<line x1=\"" << f.x(c) << "\" y1=\"" << f.y(f.min_row) << "\" x2=\"" << f.x(c)
           << "\" y2=\"" << f.y(f.max_row) << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";

    int n = rep.size();
    for (int v = 0; v < n; ++v) {
        // deterministic sub-cell offset so overlapping runs stay distinguishable
        double off = ((v + 1.0) / (n + 1.0) - 0.5) * 0.5;
        os << "<polyline fill=\"none\" stroke=\"" << color(v, n)
           << "\" stroke-width=\"2.5\" points=\"";
        for (const GridPoint& p : rep.path(v).points())
            os << f.x(p.col + off) << ',' << f.y(p.row + off) << ' ';
        os << "\"/>\n";
        const GridPoint& first = rep.path(v).points().front();
        os << "<text x=\"" << f.x(first.col + off) + 4 << "\" y=\"" << f.y(first.row + off) - 4
           << "\" font-size=\"12\" fill=\"" << color(v, n) << "\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pcaepg
