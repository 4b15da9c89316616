#include "toric/polygon.hpp"

#include <algorithm>

namespace toric {

HalfSpace closed_hs(IVec eta, Rat kappa, Int label) {
  HalfSpace h;
  h.eta = eta;
  h.kappa = std::move(kappa);
  h.label = label;
  return h;
}

HalfSpace open_hs(IVec eta, Rat kappa) {
  HalfSpace h = closed_hs(eta, std::move(kappa));
  h.closure = Closure::Open;
  return h;
}

std::string closure_name(Closure c) { return c == Closure::Open ? "open" : "closed"; }

bool Polygon::has_open_facets() const {
  for (const auto& h : hs)
    if (!h.ghost && h.open()) return true;
  return false;
}

bool Polygon::contains(const Pt& x, Mode mode) const {
  for (const auto& h : hs) {
    if (h.ghost) continue;
    int s = sgn(h.level(x));
    if (s < 0) return false;
    if (s == 0 && (mode == Mode::Interior || (mode == Mode::AsDeclared && h.open()))) return false;
  }
  return true;
}

bool Polygon::in_facet_relint(int f, const Pt& b) const {
  if (sgn(hs[f].level(b)) != 0) return false;
  for (size_t j = 0; j < hs.size(); ++j) {
    if (static_cast<int>(j) == f || hs[j].ghost) continue;
    if (sgn(hs[j].level(b)) <= 0) return false;
  }
  return true;
}

const Edge* Polygon::edge_of(int facet) const {
  for (const auto& e : edges)
    if (e.facet == facet) return &e;
  return nullptr;
}

std::vector<int> Polygon::geometric() const {
  std::vector<int> out;
  for (size_t i = 0; i < hs.size(); ++i)
    if (!hs[i].ghost) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

struct Interval {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  bool empty = false;
};

Pt point_on_line(const HalfSpace& h) {
  if (h.eta.a != 0) return {-h.kappa / static_cast<long>(h.eta.a), Rat(0)};
  return {Rat(0), -h.kappa / static_cast<long>(h.eta.b)};
}

}  // namespace

Polygon build_polygon(std::vector<HalfSpace> halfspaces, std::string name) {
  if (halfspaces.size() < 2) throw DomainError("polygon needs at least 2 half-spaces");
  for (auto& h : halfspaces) {
    if (h.label < 1) throw DomainError("facet label must be positive");
    if (!is_primitive(h.eta)) throw DomainError("conormal " + to_string(h.eta) + " is not primitive");
    h.ghost = false;
    h.touches = false;
  }
  const size_t n = halfspaces.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (halfspaces[i].eta == halfspaces[j].eta)
        throw DomainError("duplicate parallel constraints with conormal " + to_string(halfspaces[i].eta));
      if (halfspaces[i].eta == -halfspaces[j].eta && sgn(halfspaces[i].kappa + halfspaces[j].kappa) <= 0)
        throw DomainError("empty or lower-dimensional feasible region");
    }

  Polygon p;
  p.name = std::move(name);
  p.hs = std::move(halfspaces);

  std::vector<Edge> edges;
  for (size_t i = 0; i < n; ++i) {
    const HalfSpace& h = p.hs[i];
    IVec d{h.eta.b, -h.eta.a};
    Pt p0 = point_on_line(h);
    Interval iv;
    for (size_t j = 0; j < n && !iv.empty; ++j) {
      if (j == i) continue;
      Int rate = dot(p.hs[j].eta, d);
      Rat base = p.hs[j].level(p0);
      if (rate == 0) {
        if (sgn(base) < 0) iv.empty = true;
        continue;
      }
      Rat t = -base / static_cast<long>(rate);
      if (rate > 0) {
        if (!iv.has_lo || t > iv.lo) iv.lo = t, iv.has_lo = true;
      } else {
        if (!iv.has_hi || t < iv.hi) iv.hi = t, iv.has_hi = true;
      }
    }
    if (!iv.empty && iv.has_lo && iv.has_hi) {
      int c = cmp(iv.lo, iv.hi);
      if (c > 0) iv.empty = true;
      if (c == 0) {
        p.hs[i].ghost = true;
        p.hs[i].touches = true;
        continue;
      }
    }
    if (iv.empty) {
      p.hs[i].ghost = true;
      continue;
    }
    Edge e;
    e.facet = static_cast<int>(i);
    e.dir = d;
    if (iv.has_lo) e.start = p0 + iv.lo * d;
    if (iv.has_hi) e.end = p0 + iv.hi * d;
    edges.push_back(std::move(e));
  }
  if (edges.empty()) throw DomainError("empty or lower-dimensional feasible region");

  // a facet whose line meets the region nowhere but whose region is empty would leave
  // edges empty; with at least one edge the region has a 2-dimensional interior
  // chain edges counterclockwise
  std::vector<Edge> ordered;
  std::vector<bool> used(edges.size(), false);
  size_t start = 0;
  for (size_t i = 0; i < edges.size(); ++i)
    if (!edges[i].start) {
      start = i;
      break;
    }
  size_t cur = start;
  while (true) {
    used[cur] = true;
    ordered.push_back(edges[cur]);
    if (!edges[cur].end) break;
    size_t next = edges.size();
    for (size_t k = 0; k < edges.size(); ++k)
      if (edges[k].start && *edges[k].start == *edges[cur].end) {
        next = k;
        break;
      }
    if (next == edges.size()) throw DomainError("polygon boundary does not close");
    if (next == start) break;
    if (used[next]) throw DomainError("polygon boundary is not simple");
    cur = next;
  }
  // parallel lines (strips, half-planes) have no vertices; keep the rest in input order
  for (size_t i = 0; i < edges.size(); ++i)
    if (!used[i]) ordered.push_back(edges[i]);

  p.edges = std::move(ordered);
  p.bounded = true;
  for (size_t i = 0; i < p.edges.size(); ++i) {
    const Edge& e = p.edges[i];
    if (!e.start || !e.end) p.bounded = false;
    if (e.end) {
      const Edge& nx = p.edges[(i + 1) % p.edges.size()];
      if (nx.start && *nx.start == *e.end) p.vertices.push_back(Vertex{*e.end, e.facet, nx.facet});
    }
  }
  return p;
}

SmoothReport smoothness(const Polygon& p) {
  SmoothReport r;
  for (const auto& v : p.vertices) {
    Int d = det(p.hs[v.in].eta, p.hs[v.out].eta);
    d = d < 0 ? -d : d;
    r.vertex_order.push_back(d);
    if (d != 1) r.smooth = false;
  }
  for (const auto& h : p.hs)
    if (!h.ghost && h.label != 1) r.smooth = false;
  return r;
}

RayExit ray_exit_unchecked(const Polygon& p, const Pt& x, const IVec& v) {
  RayExit r;
  for (size_t i = 0; i < p.hs.size(); ++i) {
    const HalfSpace& h = p.hs[i];
    if (h.ghost) continue;
    Int rate = dot(h.eta, v);
    if (rate >= 0) continue;
    Rat t = h.level(x) / static_cast<long>(-rate);
    if (!r.bounded || t < r.t) {
      r.bounded = true;
      r.t = t;
      r.facets.assign(1, static_cast<int>(i));
    } else if (t == r.t) {
      r.facets.push_back(static_cast<int>(i));
    }
  }
  if (r.bounded) r.point = x + r.t * v;
  return r;
}

RayExit ray_exit(const Polygon& p, const Pt& x, const IVec& v) {
  if (!p.contains(x, Mode::Interior)) throw DomainError("ray_exit: point " + to_string(x) + " is not interior");
  return ray_exit_unchecked(p, x, v);
}

FacetProfile closest_facet_profile(const Polygon& p, const Pt& x, bool include_ghosts) {
  std::vector<std::pair<Rat, int>> lv;
  for (size_t i = 0; i < p.hs.size(); ++i)
    if (include_ghosts || !p.hs[i].ghost) lv.emplace_back(p.hs[i].level(x), static_cast<int>(i));
  FacetProfile fp;
  if (lv.empty()) return fp;
  fp.s = lv[0].first;
  for (auto& [l, i] : lv)
    if (l < fp.s) fp.s = l;
  std::optional<Rat> s2;
  for (auto& [l, i] : lv) {
    if (l == fp.s)
      fp.e1.push_back(i);
    else if (!s2 || l < *s2)
      s2 = l;
  }
  if (s2)
    for (auto& [l, i] : lv)
      if (l == *s2) fp.e2.push_back(i);
  return fp;
}

Polygon transform_polygon(const Polygon& p, const std::array<std::array<Int, 2>, 2>& U, const Pt& t) {
  Int D = U[0][0] * U[1][1] - U[0][1] * U[1][0];
  if (D != 1 && D != -1) throw DomainError("transform_polygon: matrix is not unimodular");
  std::vector<HalfSpace> out;
  for (const auto& h : p.hs) {
    // eta' = U^{-T} eta
    IVec e{D * (U[1][1] * h.eta.a - U[1][0] * h.eta.b), D * (-U[0][1] * h.eta.a + U[0][0] * h.eta.b)};
    HalfSpace g = h;
    g.eta = e;
    g.kappa = h.kappa - dot(e, t);
    out.push_back(g);
  }
  return build_polygon(std::move(out), p.name);
}

Json to_json(const Polygon& p) {
  Json j;
  j["name"] = p.name;
  Json arr = Json::array();
  for (const auto& h : p.hs) {
    Json e;
    e["eta"] = {h.eta.a, h.eta.b};
    e["kappa"] = to_string(h.kappa);
    e["closure"] = closure_name(h.closure);
    e["label"] = h.label;
    arr.push_back(e);
  }
  j["halfspaces"] = arr;
  return j;
}

Polygon polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("halfspaces") || !j["halfspaces"].is_array())
    throw DomainError("polygon JSON needs a 'halfspaces' array");
  std::vector<HalfSpace> hs;
  for (const auto& e : j["halfspaces"]) {
    if (!e.contains("eta") || !e["eta"].is_array() || e["eta"].size() != 2)
      throw DomainError("half-space needs 'eta': [a,b]");
    IVec raw{e["eta"][0].get<Int>(), e["eta"][1].get<Int>()};
    auto [eta, g] = make_primitive(raw);
    Rat kappa = e.contains("kappa") ? (e["kappa"].is_string() ? parse_rat(e["kappa"].get<std::string>())
                                                               : Rat(static_cast<long>(e["kappa"].get<Int>())))
                                    : Rat(0);
    HalfSpace h = closed_hs(eta, kappa / static_cast<long>(g), g);
    if (e.contains("label")) h.label = e["label"].get<Int>() * g;
    if (e.contains("closure")) {
      std::string c = e["closure"].get<std::string>();
      if (c == "open")
        h.closure = Closure::Open;
      else if (c != "closed")
        throw DomainError("closure must be 'closed' or 'open', got '" + c + "'");
    }
    hs.push_back(h);
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return build_polygon(std::move(hs), name);
}

}  // namespace toric
