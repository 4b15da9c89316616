#include "toric/probes.hpp"

#include "toric/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

// u = start + t dir with 0 < t < len (len absent means infinite)
std::optional<Rat> segment_parameter(const Pt& start, const IVec& dir, const Dist& len, const Pt& u) {
  Pt d = u - start;
  Rat t;
  if (dir.a != 0) {
    t = d.x / static_cast<long>(dir.a);
    if (d.y != t * static_cast<long>(dir.b)) return std::nullopt;
  } else {
    t = d.y / static_cast<long>(dir.b);
    if (sgn(d.x) != 0) return std::nullopt;
  }
  if (sgn(t) <= 0 || !(Dist::of(t) < len)) return std::nullopt;
  return t;
}

// alpha with x = start + alpha dir and 0 <= alpha <= len
std::optional<Rat> closed_segment_parameter(const Pt& start, const IVec& dir, const Dist& len, const Pt& x) {
  if (x == start) return Rat(0);
  Pt d = x - start;
  Rat t;
  if (dir.a != 0) {
    t = d.x / static_cast<long>(dir.a);
    if (d.y != t * static_cast<long>(dir.b)) return std::nullopt;
  } else {
    t = d.y / static_cast<long>(dir.b);
    if (sgn(d.x) != 0) return std::nullopt;
  }
  if (sgn(t) < 0 || Dist::of(t) > len) return std::nullopt;
  return t;
}

Pt vec(const IVec& v) { return Pt(v); }

Rat dotp(const IVec& eta, const Pt& w) { return dot(eta, w); }

}  // namespace

std::string kind_name(FlagKind k) { return k == FlagKind::Parallel ? "parallel" : "general"; }

std::vector<IVec> transverse_directions(const IVec& eta, Int H) {
  // v0 with <eta, v0> = 1 from the extended Euclidean algorithm, then v0 + k w
  Int a = eta.a, b = eta.b;
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r, r = tmp;
    tmp = old_s - q * s;
    old_s = s, s = tmp;
    tmp = old_t - q * t;
    old_t = t, t = tmp;
  }
  if (old_r < 0) old_r = -old_r, old_s = -old_s, old_t = -old_t;
  if (old_r != 1) throw DomainError("transverse_directions: conormal is not primitive");
  IVec v0{old_s, old_t};
  IVec w{-b, a};
  std::vector<IVec> out;
  Int span = 2 * H + std::max(height(v0), Int(1)) + 2;
  for (Int k = -span; k <= span; ++k) {
    IVec v = v0 + k * w;
    if (height(v) <= H) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [](const IVec& x, const IVec& y) {
    if (height(x) != height(y)) return height(x) < height(y);
    return x < y;
  });
  return out;
}

Probe make_probe(const Polygon& p, int facet, const Pt& base, const IVec& dir, std::optional<Rat> length) {
  if (facet < 0 || facet >= static_cast<int>(p.size())) throw DomainError("probe: facet index out of range");
  const HalfSpace& h = p.hs[facet];
  if (h.ghost) throw DomainError("probe: base facet is a ghost");
  if (h.open()) throw DomainError("probe: base on an open facet");
  if (h.label != 1) throw DomainError("probe: base facet has label " + std::to_string(h.label));
  if (!is_primitive(dir)) throw DomainError("probe: direction " + to_string(dir) + " is not primitive");
  Int tr = dot(h.eta, dir);
  if (tr != 1)
    throw DomainError("probe: <eta_F, v> = " + std::to_string(tr) + ", need 1 (transverse and inward)");
  if (!p.in_facet_relint(facet, base))
    throw DomainError("probe: base " + to_string(base) + " is not in the relative interior of facet " +
                      std::to_string(facet));
  RayExit ex = ray_exit_unchecked(p, base, dir);
  Probe pr;
  pr.facet = facet;
  pr.base = base;
  pr.dir = dir;
  Dist max_len = ex.bounded ? Dist::of(ex.t) : Dist::infinity();
  if (length) {
    if (sgn(*length) <= 0) throw DomainError("probe: length must be positive");
    if (Dist::of(*length) > max_len)
      throw DomainError("probe: length " + to_string(*length) + " exceeds exit distance " + to_string(max_len));
    pr.length = Dist::of(*length);
  } else {
    pr.length = max_len;
  }
  if (pr.length.finite()) pr.endpoint = base + pr.length.v * dir;
  return pr;
}

std::optional<Rat> probe_parameter(const Probe& pr, const Pt& u) {
  return segment_parameter(pr.base, pr.dir, pr.length, u);
}

bool probe_displaces(const Probe& pr, const Pt& u) {
  auto t = probe_parameter(pr, u);
  if (!t) throw DomainError("probe_displaces: point " + to_string(u) + " is not on the probe interior");
  if (pr.length.inf) return true;
  return *t * 2 < pr.length.v;
}

std::optional<int> is_symmetric(const Polygon& p, const Probe& pr) {
  if (!pr.endpoint) return std::nullopt;
  RayExit ex = ray_exit_unchecked(p, pr.base, pr.dir);
  if (!ex.bounded || ex.t != pr.length.v || ex.facets.size() != 1) return std::nullopt;
  int f = ex.facets[0];
  const HalfSpace& h = p.hs[f];
  if (h.open() || h.label != 1 || dot(h.eta, pr.dir) != -1) return std::nullopt;
  if (!p.in_facet_relint(f, *pr.endpoint)) return std::nullopt;
  return f;
}

SymmetricExtendedProbe build_symmetric_extension(const Polygon& p, const Probe& P, const Probe& Q,
                                                 std::optional<Rat> len_p_prime) {
  auto qx = is_symmetric(p, Q);
  if (!qx) throw DomainError("symmetric extension: Q is not a symmetric probe");
  if (!P.endpoint) throw DomainError("symmetric extension: P must be truncated at x_PQ");
  if (!probe_parameter(Q, *P.endpoint))
    throw DomainError("symmetric extension: x_PQ " + to_string(*P.endpoint) + " is not interior to Q");
  SymmetricExtendedProbe sp;
  sp.P = P;
  sp.Q = Q;
  sp.q_exit = *qx;
  sp.x_pq = *P.endpoint;
  const HalfSpace& fq = p.hs[Q.facet];
  const HalfSpace& fq2 = p.hs[*qx];
  sp.reflection = reflection_from_facets(fq.eta, fq.kappa, fq2.eta, fq2.kappa, Q.dir);
  sp.x_pq_prime = sp.reflection.apply(sp.x_pq);
  sp.v_p_prime = sp.reflection.apply_linear(P.dir);
  RayExit ex = ray_exit(p, sp.x_pq_prime, sp.v_p_prime);
  if (len_p_prime) {
    if (sgn(*len_p_prime) <= 0) throw DomainError("symmetric extension: extension immediately exits");
    if (ex.bounded && *len_p_prime > ex.t)
      throw DomainError("symmetric extension: extension length " + to_string(*len_p_prime) +
                        " exceeds exit distance " + to_string(ex.t));
    sp.len_p_prime = *len_p_prime;
  } else {
    if (!ex.bounded) throw DomainError("symmetric extension: extension is unbounded; give a length");
    for (int f : ex.facets)
      if (p.hs[f].open())
        throw DomainError("symmetric extension: extension ends on an open facet; give a shorter length");
    sp.len_p_prime = ex.t;
  }
  sp.e_p_prime = sp.x_pq_prime + sp.len_p_prime * sp.v_p_prime;
  if (!p.contains(sp.e_p_prime, Mode::AsDeclared))
    throw DomainError("symmetric extension: endpoint " + to_string(sp.e_p_prime) + " is outside the polygon");
  sp.total_length = P.length.v + sp.len_p_prime;
  // length bound by convexity; only meaningful when P heads toward F_Q
  Dist bound = dot(fq.eta, P.dir) < 0 ? directed_distance(P.base, fq.eta, fq.kappa, P.dir) : Dist::infinity();
  if (Dist::of(sp.total_length) > bound)
    throw std::logic_error("symmetric extension of length " + to_string(sp.total_length) + " exceeds d_vP(b_P, F_Q) = " +
                           to_string(bound) + " for P from " + to_string(P.base) + " along " + to_string(P.dir) +
                           ", Q from " + to_string(Q.base) + " along " + to_string(Q.dir));
  return sp;
}

bool sep_displaces(const SymmetricExtendedProbe& sp, const Pt& u) {
  if (auto t = probe_parameter(sp.P, u)) return *t * 2 < sp.total_length;
  if (auto r = segment_parameter(sp.x_pq_prime, sp.v_p_prime, Dist::of(sp.len_p_prime), u))
    return (sp.P.length.v + *r) * 2 < sp.total_length;
  throw DomainError("sep_displaces: point " + to_string(u) + " is on neither P nor P'");
}

FlaggedExtendedProbe build_flagged(const Polygon& p, const Probe& P, const Probe& Q, FlagKind kind,
                                   const Rat& mu, const Pt& x_f, const Pt& x_f_prime, const Rat& len_f) {
  if (!P.endpoint) throw DomainError("flag: P must be truncated at x_PQ");
  auto sigma = probe_parameter(Q, *P.endpoint);
  if (!sigma) throw DomainError("flag: x_PQ " + to_string(*P.endpoint) + " is not interior to Q");
  if (sgn(mu) < 0 || mu > 1) throw DomainError("flag: mu must lie in [0,1]");
  if (sgn(len_f) < 0) throw DomainError("flag: negative flag length");
  const HalfSpace& fq = p.hs[Q.facet];
  Int c = dot(fq.eta, P.dir);
  if (kind == FlagKind::Parallel && c != 0)
    throw FlagRejected("parallel kind", "<eta_Q, v_P> = " + std::to_string(c) + ", need 0");
  if (P.dir == Q.dir || P.dir == -Q.dir) throw DomainError("flag: P runs along Q");
  auto alpha = closed_segment_parameter(Q.base, Q.dir, Q.length, x_f);
  auto alpha2 = closed_segment_parameter(Q.base, Q.dir, Q.length, x_f_prime);
  if (!alpha) throw DomainError("flag: x_F " + to_string(x_f) + " is not on Q");
  if (!alpha2) throw DomainError("flag: x'_F " + to_string(x_f_prime) + " is not on Q");

  FlaggedExtendedProbe fp;
  fp.P = P;
  fp.Q = Q;
  fp.x_pq = *P.endpoint;
  fp.kind = kind;
  fp.mu = mu;
  fp.x_f = x_f;
  fp.x_f_prime = x_f_prime;
  fp.len_f = len_f;
  Rat cc = static_cast<long>(c);
  fp.v_f = vec(P.dir) - ((1 + mu) * cc) * Q.dir;
  fp.v_f_prime = vec(P.dir) - (mu * cc) * Q.dir;
  fp.e_f = x_f + len_f * fp.v_f;
  fp.e_f_prime = x_f_prime + len_f * fp.v_f_prime;

  for (const Pt* corner : {&fp.x_f, &fp.x_f_prime, &fp.e_f, &fp.e_f_prime})
    if (!p.contains(*corner, Mode::AsDeclared))
      throw FlagRejected("flag containment", "corner " + to_string(*corner) + " leaves the polygon");

  Rat gap = abs(*alpha2 - *alpha);
  if (!(*sigma < gap))
    throw FlagRejected(kFirstInequality, to_string(*sigma) + " >= " + to_string(gap));
  Dist dv = directed_distance(fp.x_pq, fq.eta, fq.kappa, P.dir);
  if (kind == FlagKind::General && !(Dist::of(len_f) < dv))
    throw FlagRejected(kSecondInequality, to_string(len_f) + " >= " + to_string(dv));
  // both boundary segments advance identically across Q; their offset along v_Q is linear
  Rat off0 = *alpha2 - *alpha;
  Rat off1 = off0 + len_f * cc;
  if (sgn(off1) != 0 && sgn(off1) != sgn(off0))
    throw FlagRejected("flag boundaries", "segments [x_F,e_F] and [x'_F,e'_F] cross");
  fp.total_length = P.length.v + len_f;
  return fp;
}

bool flagged_displaces(const FlaggedExtendedProbe& fp, const Pt& u) {
  auto t = probe_parameter(fp.P, u);
  if (!t) throw DomainError("flagged_displaces: point " + to_string(u) + " is not on P");
  return *t * 2 < fp.total_length;
}

std::optional<FlaggedExtendedProbe> maximize_flag(const Polygon& p, const Probe& P, const Probe& Q,
                                                  FlagKind kind, const Rat& mu, const FlagOptions& opt) {
  if (!P.endpoint) return std::nullopt;
  auto sigma = probe_parameter(Q, *P.endpoint);
  if (!sigma) return std::nullopt;
  const HalfSpace& fq = p.hs[Q.facet];
  Int c = dot(fq.eta, P.dir);
  if (kind == FlagKind::Parallel && c != 0) return std::nullopt;
  if (P.dir == Q.dir || P.dir == -Q.dir) return std::nullopt;
  Rat cc = static_cast<long>(c);
  Pt vf = vec(P.dir) - ((1 + mu) * cc) * Q.dir;
  Pt vf2 = vec(P.dir) - (mu * cc) * Q.dir;

  LinearProgram lp;
  int a = lp.add_var(Rat(0), opt.cap);
  int a2 = lp.add_var(Rat(0), opt.cap);
  int L = lp.add_var(Rat(0), opt.cap);
  lp.add_ge({{a2, Rat(1)}, {a, Rat(-1)}}, *sigma + opt.epsilon);
  if (c < 0) {
    lp.add_le({{L, Rat(1)}}, *sigma / static_cast<long>(-c) - opt.epsilon);
    lp.add_le({{L, Rat(static_cast<long>(-c))}, {a2, Rat(-1)}, {a, Rat(1)}}, Rat(0));
  }
  for (int j : p.geometric()) {
    const HalfSpace& h = p.hs[j];
    Rat margin = h.open() ? opt.epsilon : Rat(0);
    Rat base = h.level(Q.base);
    Rat r = static_cast<long>(dot(h.eta, Q.dir));
    // corners on Q and the two flag tips
    lp.add_ge({{a, r}}, margin - base);
    lp.add_ge({{a2, r}}, margin - base);
    lp.add_ge({{a, r}, {L, dotp(h.eta, vf)}}, margin - base);
    lp.add_ge({{a2, r}, {L, dotp(h.eta, vf2)}}, margin - base);
  }
  lp.set_objective({{L, Rat(1)}});
  auto res = lp.solve();
  if (res.status != LinearProgram::Status::Optimal) return std::nullopt;
  try {
    return build_flagged(p, P, Q, kind, mu, Q.base + res.x[a] * Q.dir, Q.base + res.x[a2] * Q.dir, res.x[L]);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace toric
