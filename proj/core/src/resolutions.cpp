#include "toric/resolutions.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("support constants outside validity window: " + what);
}

void check_coprime(Int n, Int m) {
  if (!(m > n && n >= 1)) throw DomainError("need m > n >= 1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  if (std::gcd(n, m) != 1) throw DomainError("n and m must be coprime");
}

bool same_vertices(const Polygon& p, std::vector<Pt> expect) {
  if (p.vertices.size() != expect.size()) return false;
  for (const auto& v : p.vertices) {
    auto it = std::find(expect.begin(), expect.end(), v.p);
    if (it == expect.end()) return false;
    expect.erase(it);
  }
  return true;
}

Rat R(Int v) { return rat(v); }

}  // namespace

ContinuedFraction hj_expand(Int n, Int m) {
  check_coprime(n, m);
  ContinuedFraction cf;
  cf.n = n;
  cf.m = m;
  cf.remainders = {m, n};
  Int prev = m, cur = n;
  while (cur != 0) {
    Int E = (prev + cur - 1) / cur;  // ceil
    Int next = E * cur - prev;
    cf.terms.push_back(E);
    cf.remainders.push_back(next);
    prev = cur;
    cur = next;
  }
  return cf;
}

Rat hj_evaluate(const std::vector<Int>& terms) {
  if (terms.empty()) throw DomainError("hj_evaluate: empty term list");
  for (Int e : terms)
    if (e < 2) throw DomainError("hj_evaluate: term " + std::to_string(e) + " < 2");
  Rat x = R(terms.back());
  for (size_t j = terms.size() - 1; j-- > 0;) x = R(terms[j]) - 1 / x;
  return 1 / x;
}

std::vector<IVec> conormal_chain(const ContinuedFraction& cf) {
  std::vector<IVec> eta{{1, 0}, {0, 1}};
  for (Int E : cf.terms) {
    size_t j = eta.size() - 1;
    eta.push_back(E * eta[j] - eta[j - 1]);
  }
  return eta;
}

SectorDuality dual_pair(Int n, Int m) {
  check_coprime(n, m);
  if (n < 2) throw DomainError("dual_pair needs n >= 2");
  SectorDuality d;
  d.n = n;
  d.m = m;
  // n * n_tilde = 1 mod m, minimal positive
  for (Int t = 1; t < m; ++t)
    if ((n * t) % m == 1) {
      d.n_tilde = t;
      break;
    }
  d.q = (n * d.n_tilde - 1) / m;
  d.S = {{{-d.n_tilde, m}, {-d.q, n}}};
  if (m * d.q - n * d.n_tilde != -1) throw std::logic_error("dual_pair: mq - n n~ != -1");
  auto a = hj_expand(n, m).terms, b = hj_expand(d.n_tilde, m).terms;
  std::reverse(a.begin(), a.end());
  if (a != b) throw std::logic_error("dual_pair: reversed continued fraction property fails");
  return d;
}

Polygon cp2(const Rat& size) {
  require(sgn(size) > 0, "size > 0");
  return build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-1, -1}, size)}, "cp2");
}

Polygon sector(Int n, Int m) {
  check_coprime(n, m);
  return build_polygon({closed_hs({1, 0}, 0), closed_hs({-n, m}, 0)},
                       "sector_" + std::to_string(n) + "_" + std::to_string(m));
}

Polygon sector_open(Int n, Int m, const Rat& kappa) {
  check_coprime(n, m);
  require(sgn(kappa) > 0, "kappa > 0");
  return build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), open_hs({-n, m}, kappa)},
                       "sector_open_" + std::to_string(n) + "_" + std::to_string(m));
}

Polygon hirzebruch(Int m, const Rat& kappa) {
  require(m >= 0, "m >= 0");
  require(kappa > R(m), "kappa > m");
  return build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({0, -1}, 2),
                        closed_hs({-1, -m}, kappa + R(m))},
                       "hirzebruch_" + std::to_string(m));
}

Polygon resolve_sector(Int n, Int m, const std::vector<Rat>& kappa) {
  auto cf = hj_expand(n, m);
  auto eta = conormal_chain(cf);
  const size_t k = cf.terms.size();
  if (kappa.size() != k)
    throw DomainError("resolve_sector: need " + std::to_string(k) + " support constants, got " +
                      std::to_string(kappa.size()));
  std::vector<HalfSpace> hs{closed_hs(eta[0], 0)};
  for (size_t j = 1; j <= k; ++j) {
    require(sgn(kappa[j - 1]) < 0, "kappa_" + std::to_string(j) + " < 0");
    hs.push_back(closed_hs(eta[j], kappa[j - 1]));
  }
  hs.push_back(closed_hs(eta[k + 1], 0));
  Polygon p = build_polygon(std::move(hs), "resolve_sector_" + std::to_string(n) + "_" + std::to_string(m));
  require(p.edges.size() == k + 2, "the resolution has k+2 edges");
  require(p.vertices.size() == k + 1, "the resolution has k+1 vertices");
  require(is_smooth(p), "the resolution is smooth");
  return p;
}

Polygon weighted_projective(Int p, Int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw DomainError("weighted_projective: need coprime p, q >= 1");
  return build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-q, -p}, R(p * q))},
                       "P(1," + std::to_string(p) + "," + std::to_string(q) + ")");
}

Polygon p135_resolved_at_30(const Rat& k6, const Rat& k7) {
  require(R(5) < k6 && k6 < R(6), "5 < kappa6 < 6");
  require(k7 > 3 * k6 - 15, "kappa7 > 3 kappa6 - 15 (a5 right of a4)");
  require(k7 < k6 / 2, "kappa7 < kappa6/2 (a5 above a6)");
  Polygon p = build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-5, -3}, 15),
                             closed_hs({-2, -1}, k6), closed_hs({-1, 0}, k7)},
                            "p135_resolved_at_30");
  Pt a4{3 * (k6 - 5), 5 * (6 - k6)}, a5{k7, k6 - 2 * k7}, a6{k7, 0};
  require(same_vertices(p, {{0, 0}, {0, 5}, a4, a5, a6}), "vertices (0,0),(0,5),a4,a5,a6");
  return p;
}

Polygon p135_full_resolution(const Rat& k4, const Rat& k5, const Rat& k6, const Rat& k7) {
  require(k4 < R(5) && k5 < R(10) && k6 < R(6) && k7 < R(3), "kappa4<5, kappa5<10, kappa6<6, kappa7<3");
  Polygon p = build_polygon({closed_hs({1, 0}, 0), closed_hs({0, 1}, 0), closed_hs({-5, -3}, 15),
                             closed_hs({-1, -1}, k4), closed_hs({-3, -2}, k5), closed_hs({-2, -1}, k6),
                             closed_hs({-1, 0}, k7)},
                            "p135_full_resolution");
  Pt a1{0, k4}, a2{k5 - 2 * k4, 3 * k4 - k5}, a3{3 * (10 - k5), 5 * (k5 - 9)};
  Pt a4{3 * (k6 - 5), 5 * (6 - k6)}, a5{k7, k6 - 2 * k7}, a6{k7, 0};
  require(same_vertices(p, {{0, 0}, a1, a2, a3, a4, a5, a6}), "vertices (0,0),a1..a6");
  require(is_smooth(p), "the full resolution is smooth");
  return p;
}

Polygon finite_volume_a2(const Rat& k1, const Rat& k2) {
  require(sgn(k1) > 0 && k1 < R(2), "0 < kappa1 < 2");
  require(sgn(k2) > 0 && k2 < R(1), "0 < kappa2 < 1");
  require(k2 < 2 * k1, "kappa2 < 2 kappa1");
  require(k1 < 2 * k2, "kappa1 < 2 kappa2");
  Polygon p = build_polygon({closed_hs({1, 0}, 0), closed_hs({-2, 3}, 0), open_hs({0, -1}, 2),
                             closed_hs({0, 1}, -k1), closed_hs({-1, 2}, -k2)},
                            "finite_volume_a2");
  require(p.edges.size() == 5, "all five facets support edges");
  return p;
}

std::vector<ScenarioInfo> scenario_list() {
  return {
      {"cp2", "[size=6]"},
      {"sector", "n m"},
      {"sector_open", "n m kappa"},
      {"hirzebruch", "[m=3] [kappa=7/2]"},
      {"resolve_sector", "n m kappa_1 .. kappa_k  (all kappa_j < 0)"},
      {"weighted_projective", "[p=3] [q=5]"},
      {"p135_resolved_at_30", "[kappa6=29/5] [kappa7=13/5]"},
      {"p135_full_resolution", "[kappa4=49/10] [kappa5=99/10] [kappa6=59/10] [kappa7=29/10]"},
      {"finite_volume_a2", "[kappa1=3/4] [kappa2=1/2]"},
  };
}

Polygon make_scenario(const std::string& name, const std::vector<std::string>& params) {
  auto arg = [&](size_t i, const char* def) { return parse_rat(i < params.size() ? params[i] : def); };
  auto iarg = [&](size_t i, const char* def) { return to_int(arg(i, def)); };
  auto need = [&](size_t k) {
    if (params.size() < k) throw DomainError("scenario " + name + " needs " + std::to_string(k) + " parameters");
  };
  if (name == "cp2") return cp2(arg(0, "6"));
  if (name == "sector") {
    need(2);
    return sector(iarg(0, ""), iarg(1, ""));
  }
  if (name == "sector_open") {
    need(3);
    return sector_open(iarg(0, ""), iarg(1, ""), arg(2, ""));
  }
  if (name == "hirzebruch") return hirzebruch(iarg(0, "3"), arg(1, "7/2"));
  if (name == "resolve_sector") {
    need(3);
    std::vector<Rat> k;
    for (size_t i = 2; i < params.size(); ++i) k.push_back(parse_rat(params[i]));
    return resolve_sector(iarg(0, ""), iarg(1, ""), k);
  }
  if (name == "weighted_projective") return weighted_projective(iarg(0, "3"), iarg(1, "5"));
  if (name == "p135_resolved_at_30") return p135_resolved_at_30(arg(0, "29/5"), arg(1, "13/5"));
  if (name == "p135_full_resolution")
    return p135_full_resolution(arg(0, "49/10"), arg(1, "99/10"), arg(2, "59/10"), arg(3, "29/10"));
  if (name == "finite_volume_a2") return finite_volume_a2(arg(0, "3/4"), arg(1, "1/2"));
  throw DomainError("unknown scenario '" + name + "'");
}

}  // namespace toric
