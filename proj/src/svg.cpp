#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssrr/serialize.hpp"

namespace ssrr {

namespace {

constexpr double kSize = 640.0;
constexpr double kPad = 48.0;

struct Frame {
    double x0, y0, scale;
    double px(double x) const { return kPad + (x - x0) * scale; }
    double py(double y) const { return kSize - kPad - (y - y0) * scale; }
};

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

}  // namespace

std::string polar_svg(const Polar& polar, const std::vector<ReflectionSolution>& roots) {
    // Closed curve: minus side from zero strength to N, then plus side back.
    const std::size_t half = polar.samples_per_side();
    std::vector<Vec2> curve{polar.upstream.v()};
    for (std::size_t k = 0; k < half; ++k) curve.push_back(polar.samples[k].shock.v_d);
    for (std::size_t k = 2 * half; k-- > half;) curve.push_back(polar.samples[k].shock.v_d);
    curve.push_back(polar.upstream.v());

    double xmin = curve[0].x, xmax = xmin, ymin = curve[0].y, ymax = ymin;
    for (const Vec2& p : curve) {
        xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const Frame f{xmin - 0.05 * span, ymin - 0.05 * span, (kSize - 2 * kPad) / (1.1 * span)};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n"
        << "  <text x=\"" << kPad << "\" y=\"" << kPad / 2 << "\" font-family=\"sans-serif\" font-size=\"14\">"
        << "shock polar, gamma = " << fmt(polar.upstream.gas().gamma()) << ", M = " << fmt(polar.mach_max)
        << "</text>\n";

    svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < curve.size(); ++k) {
        svg << (k ? " " : "") << fmt(f.px(curve[k].x)) << ',' << fmt(f.py(curve[k].y));
    }
    svg << "\"/>\n";

    const auto mark = [&](Vec2 p, const char* color, const std::string& label) {
        svg << "  <circle cx=\"" << fmt(f.px(p.x)) << "\" cy=\"" << fmt(f.py(p.y)) << "\" r=\"4\" fill=\"" << color
            << "\"/>\n"
            << "  <text x=\"" << fmt(f.px(p.x) + 6) << "\" y=\"" << fmt(f.py(p.y) - 6)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << label << "</text>\n";
    };
    mark(polar.upstream.v(), "gray", "I");
    mark(polar.normal_point().shock.v_d, "black", "N");
    for (Side side : {Side::minus, Side::plus}) {
        if (polar.sonic_phi) {
            mark(polar_shock_at_angle(polar.upstream, polar.xi, *polar.sonic_phi, side).v_d, "blue", "sonic");
        }
        mark(polar_shock_at_angle(polar.upstream, polar.xi, polar.critical_phi, side).v_d, "orange", "critical");
    }
    for (const auto& r : roots) {
        mark(r.shock.v_d, "red", r.type.label == ShockTypeLabel::weak ? "W" : (r.type.label == ShockTypeLabel::strong ? "S" : "C"));
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ssrr
