#include "branchcut/svg.hpp"

#include <algorithm>
#include <sstream>

namespace branchcut {

namespace {

struct Frame {
    double xmin, xmax, ymin, ymax;
    double width = 480, height = 480;

    double X(double x) const { return (x - xmin) / (xmax - xmin) * width; }
    double Y(double y) const { return height - (y - ymin) / (ymax - ymin) * height; }
};

double to_d(const Real& r) { return r.convert_to<double>(); }

void line(std::ostringstream& os, const Frame& f, double x1, double y1, double x2, double y2,
          const char* style) {
    os << "  <line x1=\"" << f.X(x1) << "\" y1=\"" << f.Y(y1) << "\" x2=\"" << f.X(x2) << "\" y2=\""
       << f.Y(y2) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const CutSystem& system, const SingularityReport& report) {
    Frame f{-2, 2, -2, 2};
    {
        double lo_x = to_d(system.base_point.re), hi_x = lo_x;
        double lo_y = to_d(system.base_point.im), hi_y = lo_y;
        for (const auto& p : report.finite) {
            lo_x = std::min(lo_x, to_d(p.location.re));
            hi_x = std::max(hi_x, to_d(p.location.re));
            lo_y = std::min(lo_y, to_d(p.location.im));
            hi_y = std::max(hi_y, to_d(p.location.im));
        }
        double span = std::max({hi_x - lo_x, hi_y - lo_y, 2.0 * to_d(system.rho0), 1.0});
        double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
        double half = span * 0.9;
        f.xmin = cx - half;
        f.xmax = cx + half;
        f.ymin = cy - half;
        f.ymax = cy + half;
    }
    double unit_px = f.width / (f.xmax - f.xmin);
    double mark = 0.04 * (f.xmax - f.xmin);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\"" << f.height
       << "\" viewBox=\"0 0 " << f.width << " " << f.height << "\">\n";
    os << "  <rect width=\"" << f.width << "\" height=\"" << f.height << "\" fill=\"white\"/>\n";

    // axes
    line(os, f, f.xmin, 0, f.xmax, 0, "stroke=\"#cccccc\" stroke-width=\"1\"");
    line(os, f, 0, f.ymin, 0, f.ymax, "stroke=\"#cccccc\" stroke-width=\"1\"");

    // convergence disk
    if (system.rho0 > 0 && system.rho0 < pow10(20)) {
        os << "  <circle cx=\"" << f.X(to_d(system.base_point.re)) << "\" cy=\""
           << f.Y(to_d(system.base_point.im)) << "\" r=\"" << to_d(system.rho0) * unit_px
           << "\" fill=\"none\" stroke=\"#5588cc\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    }

    // cuts
    double diag = 2.5 * (f.xmax - f.xmin);
    for (const auto& c : system.cuts) {
        double ox = to_d(report.finite[c.origin].location.re);
        double oy = to_d(report.finite[c.origin].location.im);
        double ex, ey;
        if (c.kind == CutKind::Ray) {
            double dx = to_d(c.direction.re), dy = to_d(c.direction.im);
            ex = ox + dx * diag;
            ey = oy + dy * diag;
            line(os, f, ox, oy, ex, ey, "stroke=\"#cc2222\" stroke-width=\"3\"");
            // arrow head at the frame margin
            double ax = ox + dx * diag * 0.35, ay = oy + dy * diag * 0.35;
            double px = -dy, py = dx;
            line(os, f, ax, ay, ax - mark * (dx + 0.5 * px), ay - mark * (dy + 0.5 * py),
                 "stroke=\"#cc2222\" stroke-width=\"2\"");
            line(os, f, ax, ay, ax - mark * (dx - 0.5 * px), ay - mark * (dy - 0.5 * py),
                 "stroke=\"#cc2222\" stroke-width=\"2\"");
        } else {
            ex = to_d(report.finite[c.endpoint].location.re);
            ey = to_d(report.finite[c.endpoint].location.im);
            line(os, f, ox, oy, ex, ey, "stroke=\"#cc2222\" stroke-width=\"3\"");
        }
    }

    // singular points
    for (const auto& p : report.finite) {
        double x = to_d(p.location.re), y = to_d(p.location.im);
        if (p.cls == PointClass::Apparent) {
            os << "  <circle cx=\"" << f.X(x) << "\" cy=\"" << f.Y(y) << "\" r=\"" << 0.6 * mark * unit_px
               << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
        } else {
            line(os, f, x - mark / 2, y - mark / 2, x + mark / 2, y + mark / 2,
                 "stroke=\"#222222\" stroke-width=\"2\"");
            line(os, f, x - mark / 2, y + mark / 2, x + mark / 2, y - mark / 2,
                 "stroke=\"#222222\" stroke-width=\"2\"");
        }
    }

    // base point
    os << "  <circle cx=\"" << f.X(to_d(system.base_point.re)) << "\" cy=\""
       << f.Y(to_d(system.base_point.im)) << "\" r=\"3\" fill=\"#5588cc\"/>\n";

    os << "</svg>\n";
    return os.str();
}

}  // namespace branchcut
