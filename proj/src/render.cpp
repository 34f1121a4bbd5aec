#include "trapmeasure/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace trapmeasure {

namespace {

// Fixed three decimals with trailing zeros trimmed: 333.333, 1000, 0.
std::string coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string point(double x, double y) { return coord(1000.0 * x) + " " + coord(1000.0 * y); }

void open_document(std::ostringstream& out, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
        << "<g transform=\"translate(0,1000) scale(1,-1)\">\n";
}

void close_document(std::ostringstream& out) { out << "</g>\n</svg>\n"; }

}  // namespace

std::string render_trapezoid_svg(const TrapezoidSpec& spec) {
    std::ostringstream out;
    const auto n = static_cast<double>(spec.n());
    open_document(out, "trapezoid n=" + std::to_string(spec.n()));
    for (Index j = 1; j <= spec.n(); ++j) {
        const double k = spec.sigma()(j);
        out << "<polygon points=\"" << point((j - 1) / n, 0.0) << ", " << point(j / n, 0.0) << ", "
            << point(k / n, 1.0) << ", " << point((k - 1) / n, 1.0)
            << "\" fill=\"steelblue\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    close_document(out);
    return out.str();
}

std::string render_gasket_svg(const GasketSpec& spec) {
    std::ostringstream out;
    const double side = std::pow(3.0, -static_cast<double>(spec.depth()));
    open_document(out, "gasket depth=" + std::to_string(spec.depth()));
    for (const auto& [x, y] : gasket_anchors(spec)) {
        const double xd = x.to_double();
        const double yd = y.to_double();
        out << "<polygon points=\"" << point(xd, yd) << ", " << point(xd + side, yd) << ", "
            << point(xd, yd + side) << "\" fill=\"black\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    close_document(out);
    return out.str();
}

}  // namespace trapmeasure
