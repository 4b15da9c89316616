#pragma once

#include "toric/affine.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toric {

using Json = nlohmann::ordered_json;

enum class Closure { Closed, Open };

// l(x) = <eta, x> + kappa >= 0 (or > 0 when open)
struct HalfSpace {
  IVec eta;
  Rat kappa;
  Closure closure = Closure::Closed;
  Int label = 1;
  bool ghost = false;  // computed by build_polygon
  bool touches = false;  // ghost meeting the polygon in a single vertex

  Rat level(const Pt& x) const { return dot(eta, x) + kappa; }
  bool open() const { return closure == Closure::Open; }
};

HalfSpace closed_hs(IVec eta, Rat kappa, Int label = 1);
HalfSpace open_hs(IVec eta, Rat kappa);

// Edge on a supporting facet, oriented counterclockwise (interior on the left).
// A missing endpoint means the edge runs off to infinity in that direction.
struct Edge {
  int facet = -1;
  IVec dir;
  std::optional<Pt> start, end;
};

struct Vertex {
  Pt p;
  int in = -1, out = -1;  // facet entering / leaving the vertex in ccw order
};

enum class Mode { Closure, Interior, AsDeclared };

struct Polygon {
  std::string name;
  std::vector<HalfSpace> hs;
  std::vector<Edge> edges;      // ccw boundary order
  std::vector<Vertex> vertices;  // ccw boundary order
  bool bounded = true;

  size_t size() const { return hs.size(); }
  bool has_open_facets() const;
  bool contains(const Pt& x, Mode mode) const;
  // b lies on facet f with every other geometric facet strictly positive
  bool in_facet_relint(int f, const Pt& b) const;
  const Edge* edge_of(int facet) const;
  std::vector<int> geometric() const;  // non-ghost facet indices
};

Polygon build_polygon(std::vector<HalfSpace> halfspaces, std::string name = "");

struct SmoothReport {
  bool smooth = true;
  std::vector<Int> vertex_order;  // |det| per vertex, ccw order
};
SmoothReport smoothness(const Polygon& p);
inline bool is_smooth(const Polygon& p) { return smoothness(p).smooth; }

struct RayExit {
  bool bounded = false;
  Pt point;
  Rat t;
  std::vector<int> facets;  // facets attaining the exit
  bool at_vertex() const { return facets.size() >= 2; }
};

// Exit of the ray x + t v (t > 0) through the closure. x must be interior.
RayExit ray_exit(const Polygon& p, const Pt& x, const IVec& v);
// Same without the interiority check; x must lie in the closure and v point inward.
RayExit ray_exit_unchecked(const Polygon& p, const Pt& x, const IVec& v);

struct FacetProfile {
  Rat s;
  std::vector<int> e1, e2;
};
FacetProfile closest_facet_profile(const Polygon& p, const Pt& x, bool include_ghosts = true);

// x -> U x + t with U unimodular
Polygon transform_polygon(const Polygon& p, const std::array<std::array<Int, 2>, 2>& U, const Pt& t);

Json to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

std::string closure_name(Closure c);

}  // namespace toric
