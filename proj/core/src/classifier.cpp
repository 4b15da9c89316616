#include "toric/classifier.hpp"

#include "toric/lp.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace toric {

namespace {

long L(Int v) { return static_cast<long>(v); }

// Set of s with a_i + b_i s >= 0 for all added constraints.
struct Interval {
  Rat lo;
  std::optional<Rat> hi;
  bool empty = false;

  explicit Interval(Rat lo_) : lo(std::move(lo_)) {}
  void add(const Rat& a, const Rat& b) {
    if (empty) return;
    if (sgn(b) == 0) {
      if (sgn(a) < 0) empty = true;
      return;
    }
    Rat bound = -a / b;
    if (sgn(b) > 0) {
      if (bound > lo) lo = bound;
    } else if (!hi || bound < *hi) {
      hi = bound;
    }
    if (hi && *hi < lo) empty = true;
  }
  Rat pick() const { return hi ? Rat((lo + *hi) / 2) : Rat(lo + 1); }
};

// Exit parameter of x + t v over geometric facets (rate < 0), with the facets attaining it.
struct LinearExit {
  Dist t = Dist::infinity();
  bool open = false;  // some attaining facet is open
};

LinearExit linear_exit(const Polygon& p, const Pt& x, const IVec& v) {
  LinearExit ex;
  for (const auto& h : p.hs) {
    if (h.ghost) continue;
    Int rate = dot(h.eta, v);
    if (rate >= 0) continue;
    Rat t = h.level(x) / L(-rate);
    if (ex.t.inf || t < ex.t.v) {
      ex.t = Dist::of(t);
      ex.open = h.open();
    } else if (t == ex.t.v) {
      ex.open = ex.open || h.open();
    }
  }
  return ex;
}

bool usable_base(const HalfSpace& h) { return !h.ghost && !h.open() && h.label == 1; }

// A probe direction through u from a base facet: base = u - d v.
struct Through {
  int facet;
  IVec dir;
  Pt base;
  Rat d;           // d_aff(u, F)
  LinearExit ahead;  // from u along dir
  int exit_facet = -1;
};

std::vector<Through> probes_through(const Polygon& p, const Pt& u, Int H) {
  std::vector<Through> out;
  for (size_t f = 0; f < p.hs.size(); ++f) {
    const HalfSpace& h = p.hs[f];
    if (!usable_base(h)) continue;
    Rat d = h.level(u);
    for (const IVec& v : transverse_directions(h.eta, H)) {
      Pt base = u - d * v;
      if (!p.in_facet_relint(static_cast<int>(f), base)) continue;
      Through t{static_cast<int>(f), v, base, d, linear_exit(p, u, v)};
      if (t.ahead.t.finite()) {
        RayExit ex = ray_exit_unchecked(p, u, v);
        if (ex.facets.size() == 1) t.exit_facet = ex.facets[0];
      }
      out.push_back(t);
    }
  }
  return out;
}

// A symmetric probe shape: base facet, exit facet, direction, reflection.
struct QConfig {
  int fq, fq2;
  IVec v;
  AffineReflection A;
};

std::vector<QConfig> q_configs(const Polygon& p, Int H) {
  std::vector<QConfig> out;
  for (size_t a = 0; a < p.hs.size(); ++a)
    for (size_t b = 0; b < p.hs.size(); ++b) {
      if (a == b || !usable_base(p.hs[a]) || !usable_base(p.hs[b])) continue;
      const IVec &e1 = p.hs[a].eta, &e2 = p.hs[b].eta;
      std::vector<IVec> dirs;
      Int D = det(e1, e2);
      if (D != 0) {
        Int va = e2.b + e1.b, vb = -e1.a - e2.a;
        if (va % D == 0 && vb % D == 0) dirs.push_back({va / D, vb / D});
      } else if (e2 == -e1) {
        dirs = transverse_directions(e1, H);
      }
      for (const IVec& v : dirs) {
        if (height(v) > H || !is_primitive(v)) continue;
        QConfig q{static_cast<int>(a), static_cast<int>(b), v,
                  reflection_from_facets(e1, p.hs[a].kappa, e2, p.hs[b].kappa, v)};
        out.push_back(q);
      }
    }
  return out;
}

// Constraints that make x(s) = x0 + s w interior and a valid deflection point of a
// symmetric Q, all with margin eps.
void deflection_constraints(const Polygon& p, const QConfig& q, const Pt& x0, const IVec& w, const Rat& eps,
                            Interval& iv) {
  const HalfSpace& hq = p.hs[q.fq];
  const HalfSpace& hq2 = p.hs[q.fq2];
  Rat lq0 = hq.level(x0), lq2_0 = hq2.level(x0);
  Int cq = dot(hq.eta, w), cq2 = dot(hq2.eta, w);
  for (size_t j = 0; j < p.hs.size(); ++j) {
    const HalfSpace& h = p.hs[j];
    if (h.ghost) continue;
    Rat lj = h.level(x0);
    Int rj = dot(h.eta, w), tj = dot(h.eta, q.v);
    iv.add(lj - eps, Rat(L(rj)));
    // b_Q = x - l_Q(x) v_Q and e_Q = x + l_Q'(x) v_Q
    if (static_cast<int>(j) != q.fq) iv.add(lj - lq0 * L(tj) - eps, Rat(L(rj - cq * tj)));
    if (static_cast<int>(j) != q.fq2) iv.add(lj + lq2_0 * L(tj) - eps, Rat(L(rj + cq2 * tj)));
  }
}

std::optional<Json> accept(const Polygon& p, Json cert) {
  if (verify_certificate(p, cert).ok) return cert;
  return std::nullopt;
}

// Extension length: the exit distance t when it ends on a closed facet; otherwise a length
// strictly between `need` and t (or need + 1 when unbounded).
std::optional<Rat> extension_length(const LinearExit& ex, const Rat& need) {
  Rat floor0 = need > 0 ? need : Rat(0);
  if (ex.t.inf) return floor0 + 1;
  if (!ex.open) return ex.t.v;
  if (ex.t.v <= floor0) return std::nullopt;
  return (ex.t.v + floor0) / 2;
}

std::optional<Json> sep_p_branch(const Polygon& p, const Pt& u, const Through& pc, const QConfig& q,
                                 const SearchConfig& cfg) {
  const HalfSpace& hq = p.hs[q.fq];
  Int c = dot(hq.eta, pc.dir);
  // the symmetric extension is never longer than d_vP(b_P, F_Q)
  if (c < 0 && !(hq.level(pc.base) / L(-c) > 2 * pc.d)) return std::nullopt;
  IVec vp2 = q.A.apply_linear(pc.dir);
  Pt w = q.A.apply(u);
  LinearExit far = linear_exit(p, w, vp2);
  if (far.t.finite() && !(pc.d < far.t.v)) return std::nullopt;
  Interval iv(cfg.epsilon);
  if (pc.ahead.t.finite()) iv.add(pc.ahead.t.v - cfg.epsilon, Rat(-1));
  if (far.t.finite()) iv.add(far.t.v - cfg.epsilon, Rat(-1));
  deflection_constraints(p, q, u, pc.dir, cfg.epsilon, iv);
  if (iv.empty) return std::nullopt;
  Rat s = iv.pick();
  Pt x = u + s * pc.dir;
  Pt bq = x - hq.level(x) * q.v;
  try {
    Probe P = make_probe(p, pc.facet, pc.base, pc.dir, pc.d + s);
    Probe Q = make_probe(p, q.fq, bq, q.v);
    Pt x2 = q.A.apply(x);
    auto len = extension_length(linear_exit(p, x2, vp2), pc.d - s);
    if (!len) return std::nullopt;
    auto sp = build_symmetric_extension(p, P, Q, *len);
    if (!sep_displaces(sp, u)) return std::nullopt;
    return accept(p, symmetric_certificate(sp, u));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<Json> sep_p_prime_branch(const Polygon& p, const Pt& u, const QConfig& q, int fp, const IVec& vp,
                                       const SearchConfig& cfg) {
  const HalfSpace& hp = p.hs[fp];
  IVec v2 = q.A.apply_linear(vp);
  Pt w = q.A.apply(u);  // lies on P's line beyond x_PQ
  Rat dw = hp.level(w);
  if (sgn(dw) <= 0) return std::nullopt;
  LinearExit ahead = linear_exit(p, u, v2);
  if (ahead.t.finite() && !(dw < ahead.t.v)) return std::nullopt;
  Pt base = w - dw * vp;
  if (!p.in_facet_relint(fp, base)) return std::nullopt;
  // x_PQ(r) = w - r v_P
  Interval iv(cfg.epsilon);
  iv.add(dw - cfg.epsilon, Rat(-1));
  deflection_constraints(p, q, w, -vp, cfg.epsilon, iv);
  if (iv.empty) return std::nullopt;
  Rat r = iv.pick();
  Pt x = w - r * vp;
  Pt bq = x - p.hs[q.fq].level(x) * q.v;
  try {
    Probe P = make_probe(p, fp, base, vp, dw - r);
    Probe Q = make_probe(p, q.fq, bq, q.v);
    auto len = extension_length(ahead, dw);  // measured from u; P' starts r before u
    if (!len) return std::nullopt;
    auto sp = build_symmetric_extension(p, P, Q, r + *len);
    if (!sep_displaces(sp, u)) return std::nullopt;
    return accept(p, symmetric_certificate(sp, u));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// Flag LP over (s, alpha, alpha', L[, M]) for a fixed P direction through u and probe shape Q.
struct FlagLP {
  LinearProgram lp;
  int s, a, a2, len, m = -1;
};

FlagLP flag_program(const Polygon& p, const Pt& u, const Through& pc, int fq, const IVec& vq,
                    std::optional<Rat> fixed_mu, const SearchConfig& cfg) {
  const HalfSpace& hq = p.hs[fq];
  const Rat& eps = cfg.epsilon;
  Int c = dot(hq.eta, pc.dir);
  Rat lqu = hq.level(u);
  IVec g = pc.dir - c * vq;  // b_Q(s) moves along g

  FlagLP f;
  LinearProgram& lp = f.lp;
  f.s = lp.add_var(eps, cfg.max_flag_cap);
  f.a = lp.add_var(Rat(0));
  f.a2 = lp.add_var(Rat(0), cfg.max_flag_cap);
  f.len = lp.add_var(Rat(0), cfg.max_flag_cap);
  Rat cm = L(c);
  if (c != 0 && !fixed_mu) {
    f.m = lp.add_var(Rat(0));
    lp.add_le({{f.m, Rat(1)}, {f.len, Rat(-1)}}, Rat(0));
  }
  // alpha' - alpha >= sigma(s) + eps, sigma(s) = l_Q(u) + c s
  lp.add_ge({{f.a2, Rat(1)}, {f.a, Rat(-1)}, {f.s, -cm}}, lqu + eps);
  if (c < 0) {
    lp.add_le({{f.len, -cm}, {f.s, -cm}}, lqu + eps * cm);
    lp.add_le({{f.len, -cm}, {f.a2, Rat(-1)}, {f.a, Rat(1)}}, Rat(0));
  }
  for (size_t j = 0; j < p.hs.size(); ++j) {
    const HalfSpace& h = p.hs[j];
    if (h.ghost) continue;
    Rat lj = h.level(u);
    Rat rp = L(dot(h.eta, pc.dir)), rq = L(dot(h.eta, vq)), rg = L(dot(h.eta, g));
    lp.add_ge({{f.s, rp}}, eps - lj);  // x(s) interior
    Rat b0 = lj - lqu * rq;            // l_j(b_Q(s)) = b0 + rg s
    if (static_cast<int>(j) != fq) lp.add_ge({{f.s, rg}}, eps - b0);
    Rat margin = h.open() ? eps : Rat(0);
    // tips: l_j(e_F) = l_j(x_F) + L <eta_j, g> - M c rq ; l_j(e'_F) = l_j(x'_F) + L <eta_j, v_P> - M c rq
    Rat mu_tip = fixed_mu ? Rat(-*fixed_mu * cm * rq) : Rat(0);
    LinearProgram::Terms tip1{{f.s, rg}, {f.a, rq}, {f.len, rg + mu_tip}};
    LinearProgram::Terms tip2{{f.s, rg}, {f.a2, rq}, {f.len, rp + mu_tip}};
    if (f.m >= 0) {
      tip1.push_back({f.m, -cm * rq});
      tip2.push_back({f.m, -cm * rq});
    }
    lp.add_ge({{f.s, rg}, {f.a, rq}}, margin - b0);
    lp.add_ge({{f.s, rg}, {f.a2, rq}}, margin - b0);
    lp.add_ge(tip1, margin - b0);
    lp.add_ge(tip2, margin - b0);
  }
  lp.set_objective({{f.s, Rat(1)}, {f.len, Rat(1)}});
  return f;
}

std::optional<Json> try_flag(const Polygon& p, const Pt& u, const Through& pc, int fq, const IVec& vq,
                             std::optional<Rat> fixed_mu, const SearchConfig& cfg) {
  FlagLP f = flag_program(p, u, pc, fq, vq, fixed_mu, cfg);
  auto approx = f.lp.solve_approx();
  if (approx.status == LinearProgram::Status::Infeasible) return std::nullopt;
  if (approx.status == LinearProgram::Status::Optimal && approx.value <= pc.d.get_d() + 1e-9) return std::nullopt;
  auto ex = f.lp.solve();
  if (ex.status != LinearProgram::Status::Optimal || !(ex.value > pc.d)) return std::nullopt;
  const Rat &s = ex.x[f.s], &len = ex.x[f.len];
  Rat mu = fixed_mu ? *fixed_mu : Rat(0);
  if (f.m >= 0 && sgn(len) > 0) mu = ex.x[f.m] / len;
  const HalfSpace& hq = p.hs[fq];
  Pt x = u + s * pc.dir;
  Pt bq = x - hq.level(x) * vq;
  try {
    Probe P = make_probe(p, pc.facet, pc.base, pc.dir, pc.d + s);
    Probe Q = make_probe(p, fq, bq, vq);
    FlagKind kind = dot(hq.eta, pc.dir) == 0 ? FlagKind::Parallel : FlagKind::General;
    auto fp = build_flagged(p, P, Q, kind, mu, bq + ex.x[f.a] * vq, bq + ex.x[f.a2] * vq, len);
    if (!flagged_displaces(fp, u)) return std::nullopt;
    return accept(p, flagged_certificate(fp, u));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

Json to_json(const SearchConfig& c) {
  Json j;
  j["direction_height"] = c.direction_height;
  j["flag_height"] = c.flag_height;
  Json mu = Json::array();
  for (const auto& m : c.mu_samples) mu.push_back(to_string(m));
  j["mu_samples"] = mu;
  j["optimize_mu"] = c.optimize_mu;
  j["epsilon"] = to_string(c.epsilon);
  j["x_pq_samples"] = c.x_pq_samples;
  j["ghost_height"] = c.ghost_height;
  j["max_flag_cap"] = to_string(c.max_flag_cap);
  j["use_symmetric"] = c.use_symmetric;
  j["use_flags"] = c.use_flags;
  j["use_qw"] = c.use_qw;
  return j;
}

SearchConfig config_from_json(const Json& j) {
  SearchConfig c;
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  c.direction_height = j.value("direction_height", c.direction_height);
  c.flag_height = j.value("flag_height", c.flag_height);
  if (j.contains("mu_samples")) {
    c.mu_samples.clear();
    for (const auto& m : j["mu_samples"]) c.mu_samples.push_back(rat_from_json(m));
  }
  c.optimize_mu = j.value("optimize_mu", c.optimize_mu);
  if (j.contains("epsilon")) c.epsilon = rat_from_json(j["epsilon"]);
  c.x_pq_samples = j.value("x_pq_samples", c.x_pq_samples);
  c.ghost_height = j.value("ghost_height", c.ghost_height);
  if (j.contains("max_flag_cap")) c.max_flag_cap = rat_from_json(j["max_flag_cap"]);
  c.use_symmetric = j.value("use_symmetric", c.use_symmetric);
  c.use_flags = j.value("use_flags", c.use_flags);
  c.use_qw = j.value("use_qw", c.use_qw);
  if (c.direction_height < 1 || c.flag_height < 1 || c.ghost_height < 1 || sgn(c.epsilon) <= 0 ||
      sgn(c.max_flag_cap) <= 0 || c.x_pq_samples < 1)
    throw DomainError("config bounds must be positive");
  for (const auto& m : c.mu_samples)
    if (sgn(m) < 0 || m > 1) throw DomainError("mu_samples must lie in [0,1]");
  return c;
}

std::string class_name(VerdictClass c) {
  switch (c) {
    case VerdictClass::DisplaceableProbe: return "DISPLACEABLE_PROBE";
    case VerdictClass::DisplaceableSymmetricExt: return "DISPLACEABLE_SYMMETRIC_EXT";
    case VerdictClass::DisplaceableFlaggedExt: return "DISPLACEABLE_FLAGGED_EXT";
    case VerdictClass::NondispCertified: return "NONDISP_CERTIFIED";
    case VerdictClass::NondispCandidate: return "NONDISP_CANDIDATE";
    case VerdictClass::Unknown: return "UNKNOWN";
    case VerdictClass::Exterior: return "EXTERIOR";
  }
  return "UNKNOWN";
}

VerdictClass class_from_name(const std::string& s) {
  for (auto c : {VerdictClass::DisplaceableProbe, VerdictClass::DisplaceableSymmetricExt,
                 VerdictClass::DisplaceableFlaggedExt, VerdictClass::NondispCertified,
                 VerdictClass::NondispCandidate, VerdictClass::Unknown, VerdictClass::Exterior})
    if (class_name(c) == s) return c;
  throw DomainError("unknown verdict class '" + s + "'");
}

bool is_displaceable(VerdictClass c) {
  return c == VerdictClass::DisplaceableProbe || c == VerdictClass::DisplaceableSymmetricExt ||
         c == VerdictClass::DisplaceableFlaggedExt;
}

bool is_nondisplaceable(VerdictClass c) {
  return c == VerdictClass::NondispCertified || c == VerdictClass::NondispCandidate;
}

std::optional<Json> find_probe(const Polygon& p, const Pt& u, const SearchConfig& cfg) {
  for (const Through& t : probes_through(p, u, cfg.direction_height)) {
    if (t.ahead.t.finite() && !(t.d < t.ahead.t.v)) continue;
    Probe pr = make_probe(p, t.facet, t.base, t.dir);
    if (!probe_displaces(pr, u)) continue;
    if (auto c = accept(p, probe_certificate(pr, u))) return c;
  }
  return std::nullopt;
}

std::optional<Json> find_symmetric_extension(const Polygon& p, const Pt& u, const SearchConfig& cfg) {
  auto through = probes_through(p, u, cfg.direction_height);
  auto qs = q_configs(p, cfg.direction_height);
  for (const Through& t : through)
    for (const QConfig& q : qs)
      if (auto c = sep_p_branch(p, u, t, q, cfg)) return c;
  for (const QConfig& q : qs)
    for (size_t f = 0; f < p.hs.size(); ++f) {
      if (!usable_base(p.hs[f])) continue;
      for (const IVec& v : transverse_directions(p.hs[f].eta, cfg.direction_height))
        if (auto c = sep_p_prime_branch(p, u, q, static_cast<int>(f), v, cfg)) return c;
    }
  return std::nullopt;
}

std::optional<Json> find_flagged_extension(const Polygon& p, const Pt& u, const SearchConfig& cfg) {
  for (const Through& t : probes_through(p, u, cfg.flag_height)) {
    for (size_t fq = 0; fq < p.hs.size(); ++fq) {
      const HalfSpace& hq = p.hs[fq];
      if (!usable_base(hq) || static_cast<int>(fq) == t.exit_facet) continue;
      Int c = dot(hq.eta, t.dir);
      // s + l(F) <= l_Q(u)/|c| when P heads into F_Q
      if (c < 0 && !(hq.level(u) / L(-c) > t.d)) continue;
      for (const IVec& vq : transverse_directions(hq.eta, cfg.flag_height)) {
        if (vq == t.dir || vq == -t.dir) continue;
        if (cfg.optimize_mu || c == 0) {
          if (auto cert = try_flag(p, u, t, static_cast<int>(fq), vq, std::nullopt, cfg)) return cert;
        } else {
          for (const Rat& mu : cfg.mu_samples)
            if (auto cert = try_flag(p, u, t, static_cast<int>(fq), vq, mu, cfg)) return cert;
        }
      }
    }
  }
  return std::nullopt;
}

Verdict classify_point(const Polygon& p, const Pt& u, const SearchConfig& cfg) {
  if (!p.contains(u, Mode::Interior)) throw DomainError("classify: point " + to_string(u) + " is not interior");
  Verdict v;
  v.point = u;
  if (auto c = find_probe(p, u, cfg)) {
    v.cls = VerdictClass::DisplaceableProbe;
    v.certificate = *c;
    return v;
  }
  if (cfg.use_symmetric)
    if (auto c = find_symmetric_extension(p, u, cfg)) {
      v.cls = VerdictClass::DisplaceableSymmetricExt;
      v.certificate = *c;
      return v;
    }
  if (cfg.use_flags)
    if (auto c = find_flagged_extension(p, u, cfg)) {
      v.cls = VerdictClass::DisplaceableFlaggedExt;
      v.certificate = *c;
      return v;
    }
  if (cfg.use_qw)
    if (auto q = certify_nondisplaceable(p, u, {cfg.ghost_height, 2})) {
      Json cert = qw_certificate(*q);
      if (verify_certificate(p, cert).ok) {
        v.cls = q->kind == QwKind::UnitPointSolved ? VerdictClass::NondispCertified : VerdictClass::NondispCandidate;
        v.certificate = cert;
        return v;
      }
    }
  v.cls = VerdictClass::Unknown;
  return v;
}

unsigned worker_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* e = std::getenv("TORIC_PROBE_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(e, &end, 10);
    if (end != e && n > 0) return static_cast<unsigned>(n);
  }
  return hw;
}

ClassificationGrid classify_grid(const Polygon& p, const BBox& box, const Rat& resolution, const SearchConfig& cfg) {
  if (sgn(resolution) <= 0) throw DomainError("grid resolution must be positive");
  if (box.x1 < box.x0 || box.y1 < box.y0) throw DomainError("empty bounding box");
  ClassificationGrid g;
  g.polygon = p;
  g.bbox = box;
  g.resolution = resolution;
  g.config = cfg;
  g.nx = to_int(floor_rat((box.x1 - box.x0) / resolution)) + 1;
  g.ny = to_int(floor_rat((box.y1 - box.y0) / resolution)) + 1;
  g.cells.resize(g.nx * g.ny);
  for (size_t j = 0; j < g.ny; ++j)
    for (size_t i = 0; i < g.nx; ++i) {
      Verdict& v = g.cells[j * g.nx + i];
      v.point = {box.x0 + Rat(static_cast<long>(i)) * resolution, box.y0 + Rat(static_cast<long>(j)) * resolution};
      v.cls = VerdictClass::Exterior;
    }
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k; (k = next.fetch_add(1)) < g.cells.size();) {
      Verdict& v = g.cells[k];
      if (!p.contains(v.point, Mode::Interior)) continue;
      v = classify_point(p, v.point, cfg);
    }
  };
  unsigned n = std::min<size_t>(worker_threads(), std::max<size_t>(1, g.cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return g;
}

Json to_json(const ClassificationGrid& g) {
  Json j;
  j["polygon"] = to_json(g.polygon);
  j["bbox"] = {to_string(g.bbox.x0), to_string(g.bbox.y0), to_string(g.bbox.x1), to_string(g.bbox.y1)};
  j["resolution"] = to_string(g.resolution);
  j["config"] = to_json(g.config);
  j["nx"] = g.nx;
  j["ny"] = g.ny;
  Json cells = Json::array();
  for (const auto& v : g.cells) {
    Json c;
    c["point"] = to_json(v.point);
    c["class"] = class_name(v.cls);
    c["certificate"] = v.certificate;
    cells.push_back(c);
  }
  j["cells"] = cells;
  return j;
}

ClassificationGrid grid_from_json(const Json& j) {
  try {
    ClassificationGrid g;
    g.polygon = polygon_from_json(j.at("polygon"));
    const Json& b = j.at("bbox");
    g.bbox = {rat_from_json(b.at(0)), rat_from_json(b.at(1)), rat_from_json(b.at(2)), rat_from_json(b.at(3))};
    g.resolution = rat_from_json(j.at("resolution"));
    if (j.contains("config")) g.config = config_from_json(j["config"]);
    g.nx = j.value("nx", size_t(0));
    g.ny = j.value("ny", size_t(0));
    for (const auto& c : j.at("cells")) {
      Verdict v;
      v.point = pt_from_json(c.at("point"));
      v.cls = class_from_name(c.at("class").get<std::string>());
      v.certificate = c.value("certificate", Json());
      g.cells.push_back(v);
    }
    if (g.nx * g.ny != g.cells.size()) throw DomainError("grid dimensions do not match the cell count");
    return g;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed grid JSON: ") + e.what());
  }
}

AuditReport consistency_audit(const ClassificationGrid& g, bool cross_check) {
  AuditReport rep;
  std::map<std::string, size_t> counts;
  std::vector<std::string> fails(g.cells.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k; (k = next.fetch_add(1)) < g.cells.size();) {
      const Verdict& v = g.cells[k];
      std::string where = "cell " + std::to_string(k) + " at " + to_string(v.point) + " (" + class_name(v.cls) + "): ";
      bool interior = g.polygon.contains(v.point, Mode::Interior);
      if (v.cls == VerdictClass::Exterior) {
        if (interior) fails[k] = where + "interior point marked exterior";
        continue;
      }
      if (!interior) {
        fails[k] = where + "exterior point carries a verdict";
        continue;
      }
      if (v.cls == VerdictClass::Unknown) {
        if (!v.certificate.is_null()) fails[k] = where + "unknown cell carries a certificate";
        continue;
      }
      if (v.certificate.is_null()) {
        fails[k] = where + "missing certificate";
        continue;
      }
      std::string type = v.certificate.value("type", "");
      const char* want = v.cls == VerdictClass::DisplaceableProbe          ? "probe"
                         : v.cls == VerdictClass::DisplaceableSymmetricExt ? "symmetric_extension"
                         : v.cls == VerdictClass::DisplaceableFlaggedExt   ? "flagged_extension"
                                                                           : "qw";
      if (type != want) {
        fails[k] = where + "certificate type '" + type + "' does not match the class";
        continue;
      }
      if (!(pt_from_json(v.certificate.at("point")) == v.point)) {
        fails[k] = where + "certificate is for another point";
        continue;
      }
      if (is_nondisplaceable(v.cls)) {
        std::string kind = v.certificate.value("kind", "");
        bool solved = kind == "UNIT_POINT_SOLVED";
        if (solved != (v.cls == VerdictClass::NondispCertified)) {
          fails[k] = where + "qW kind '" + kind + "' does not match the class";
          continue;
        }
      }
      CheckResult r = verify_certificate(g.polygon, v.certificate);
      if (!r.ok) {
        fails[k] = where + "certificate fails verification: " + r.reason + "; certificate = " + v.certificate.dump();
        continue;
      }
      if (cross_check && is_displaceable(v.cls))
        if (auto q = search_unit_point(g.polygon, v.point, {g.config.ghost_height, 2}))
          fails[k] = where + "displaceable point also has a unit-point certificate: " + qw_certificate(*q).dump();
    }
  };
  unsigned n = std::min<size_t>(worker_threads(), std::max<size_t>(1, g.cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (size_t k = 0; k < g.cells.size(); ++k) {
    ++counts[class_name(g.cells[k].cls)];
    if (!fails[k].empty()) rep.failures.push_back(fails[k]);
    if (g.cells[k].cls != VerdictClass::Exterior) ++rep.checked;
  }
  rep.ok = rep.failures.empty();
  Rat cell = g.resolution * g.resolution;
  for (auto c : {VerdictClass::DisplaceableProbe, VerdictClass::DisplaceableSymmetricExt,
                 VerdictClass::DisplaceableFlaggedExt, VerdictClass::NondispCertified, VerdictClass::NondispCandidate,
                 VerdictClass::Unknown})
    rep.areas.push_back({class_name(c), Rat(static_cast<long>(counts[class_name(c)])) * cell});
  return rep;
}

}  // namespace toric
