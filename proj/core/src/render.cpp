#include "toric/render.hpp"

#include <cstdio>
#include <sstream>

namespace toric {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

// Clip a convex ring against l(x) >= 0.
std::vector<Pt> clip(const std::vector<Pt>& ring, const HalfSpace& h) {
  std::vector<Pt> out;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Pt& a = ring[i];
    const Pt& b = ring[(i + 1) % ring.size()];
    Rat la = h.level(a), lb = h.level(b);
    if (sgn(la) >= 0) out.push_back(a);
    if ((sgn(la) < 0 && sgn(lb) > 0) || (sgn(la) > 0 && sgn(lb) < 0)) {
      Rat t = la / (la - lb);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

}  // namespace

std::string emit_svg(const ClassificationGrid& g, const RenderStyle& style) {
  const Rat half = g.resolution / 2;
  const Rat X0 = g.bbox.x0 - half, Y0 = g.bbox.y0 - half;
  const Rat X1 = g.bbox.x1 + half, Y1 = g.bbox.y1 + half;
  const double k = style.scale;
  const double W = Rat(X1 - X0).get_d() * k, H = Rat(Y1 - Y0).get_d() * k;
  auto px = [&](const Rat& x) { return num(Rat(x - X0).get_d() * k); };
  auto py = [&](const Rat& y) { return num(Rat(Y1 - y).get_d() * k); };
  const double legend_w = style.legend ? 230 : 0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W + legend_w) << "\" height=\""
     << num(std::max(H, style.legend ? 150.0 : 0.0)) << "\">\n";
  os << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
        "patternTransform=\"rotate(45)\"><rect width=\"6\" height=\"6\" fill=\"#FFFFFF\"/>"
        "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#595959\" stroke-width=\"3\"/></pattern></defs>\n";
  os << "<g id=\"cells\" shape-rendering=\"crispEdges\">\n";
  const std::string side = num(g.resolution.get_d() * k);
  for (const auto& c : g.cells) {
    auto it = style.fill.find(c.cls);
    const std::string fill = it == style.fill.end() ? "none" : it->second;
    os << "<rect x=\"" << px(c.point.x - half) << "\" y=\"" << py(c.point.y + half) << "\" width=\"" << side
       << "\" height=\"" << side << "\" fill=\"" << fill << "\" class=\"" << class_name(c.cls) << "\"/>\n";
  }
  os << "</g>\n";

  std::vector<Pt> ring{{X0, Y0}, {X1, Y0}, {X1, Y1}, {X0, Y1}};
  for (const auto& h : g.polygon.hs)
    if (!h.ghost && !ring.empty()) ring = clip(ring, h);
  if (!ring.empty()) {
    os << "<polygon id=\"outline\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < ring.size(); ++i) os << (i ? " " : "") << px(ring[i].x) << "," << py(ring[i].y);
    os << "\"/>\n";
  }

  if (style.legend) {
    os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    int row = 0;
    for (auto c : {VerdictClass::DisplaceableProbe, VerdictClass::DisplaceableSymmetricExt,
                   VerdictClass::DisplaceableFlaggedExt, VerdictClass::NondispCertified,
                   VerdictClass::NondispCandidate, VerdictClass::Unknown}) {
      auto it = style.fill.find(c);
      double y = 10 + 20 * row++;
      os << "<rect x=\"" << num(W + 10) << "\" y=\"" << num(y) << "\" width=\"14\" height=\"14\" fill=\""
         << (it == style.fill.end() ? "none" : it->second) << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>";
      os << "<text x=\"" << num(W + 30) << "\" y=\"" << num(y + 11) << "\">" << class_name(c) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace toric
