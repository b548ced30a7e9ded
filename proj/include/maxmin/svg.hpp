#ifndef MAXMIN_SVG_HPP
#define MAXMIN_SVG_HPP

// Static SVG scenes of planar instances in the unit square.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxmin/convex.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin::svg {

/// The max-min segment [p, q] in the plane, as the exact polyline from p to q.
inline std::vector<Point> segment_polyline(const Point& p, const Point& q) {
  std::vector<Scalar> breaks{Scalar::zero(), Scalar::one(), p[0], p[1], q[0], q[1]};
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Point> out;
  auto push = [&out](Point r) {
    if (out.empty() || out.back() != r) out.push_back(std::move(r));
  };
  for (const auto& beta : breaks) push(join(p, scale_meet(beta, q)));
  for (auto it = breaks.rbegin(); it != breaks.rend(); ++it) push(join(scale_meet(*it, p), q));
  return out;
}

class Scene {
 public:
  explicit Scene(int pixels = 480) : pixels_(pixels) {}

  void box(const Box& b, const std::string& fill, const std::string& label = {}) {
    rect(b.lower()[0].to_double(), b.lower()[1].to_double(), b.upper()[0].to_double(), b.upper()[1].to_double(),
         fill, "0.35", "#333");
    if (!label.empty()) text(b.upper()[0].to_double(), b.upper()[1].to_double(), label);
  }

  void generators(const GeneratedConvexSet& c, const std::string& color) {
    for (std::size_t a = 0; a < c.generators().size(); ++a) {
      for (std::size_t b = a + 1; b < c.generators().size(); ++b) {
        polyline(segment_polyline(c.generators()[a], c.generators()[b]), color);
      }
    }
    for (const auto& g : c.generators()) circle(g[0].to_double(), g[1].to_double(), 0.012, color);
  }

  void grid_hull(const GeneratedConvexSet& c, const Grid& grid, const std::string& color) {
    for (const auto& p : oracle::grid_hull(c.generators(), grid)) {
      circle(p[0].to_double(), p[1].to_double(), 0.004, color);
    }
  }

  /// Shades a planar semispace as a union of axis-aligned strips.
  void semispace(const SemispaceDescriptor& s, const std::string& fill) {
    const auto& x0 = s.x0();
    if (s.is_s0()) {
      upper_strip(0, x0[0], fill);
      upper_strip(1, x0[1], fill);
      return;
    }
    const std::size_t c = s.coordinate();
    lower_strip(c, x0[c], fill);
    for (std::size_t m = 0; m < 2; ++m) {
      if (x0[m] < x0[c]) upper_strip(m, x0[m], fill);
    }
  }

  void hemispace(const HemispaceDescriptor& h, const std::string& fill) {
    for (auto m : h.coordinates()) upper_strip(m, h.x0()[m], fill);
  }

  std::string str() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels_ << "\" height=\"" << pixels_
       << "\" viewBox=\"-0.05 -0.05 1.1 1.1\">\n"
       << "<g transform=\"translate(0,1) scale(1,-1)\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\" stroke=\"black\" stroke-width=\"0.004\"/>\n"
       << body_.str() << "</g>\n"
       << labels_.str() << "</svg>\n";
    return os.str();
  }

 private:
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
  }

  void rect(double x0, double y0, double x1, double y1, const std::string& fill, const std::string& opacity,
            const std::string& stroke) {
    body_ << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0) << "\" height=\""
          << num(y1 - y0) << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity << "\" stroke=\"" << stroke
          << "\" stroke-width=\"0.003\"/>\n";
  }

  void lower_strip(std::size_t axis, const Scalar& bound, const std::string& fill) {
    const double v = bound.to_double();
    if (axis == 0) rect(0, 0, v, 1, fill, "0.2", "none");
    else rect(0, 0, 1, v, fill, "0.2", "none");
  }

  void upper_strip(std::size_t axis, const Scalar& bound, const std::string& fill) {
    const double v = bound.to_double();
    if (axis == 0) rect(v, 0, 1, 1, fill, "0.2", "none");
    else rect(0, v, 1, 1, fill, "0.2", "none");
  }

  void circle(double x, double y, double r, const std::string& color) {
    body_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\" fill=\"" << color
          << "\"/>\n";
  }

  void polyline(const std::vector<Point>& pts, const std::string& color) {
    body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"0.006\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      body_ << (i ? " " : "") << num(pts[i][0].to_double()) << "," << num(pts[i][1].to_double());
    }
    body_ << "\"/>\n";
  }

  void text(double x, double y, const std::string& label) {
    labels_ << "<text x=\"" << num(x) << "\" y=\"" << num(1 - y - 0.01) << "\" font-size=\"0.035\">" << label
            << "</text>\n";
  }

  int pixels_;
  std::ostringstream body_;
  std::ostringstream labels_;
};

}  // namespace maxmin::svg

#endif  // MAXMIN_SVG_HPP
