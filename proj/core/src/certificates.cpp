#include "toric/certificates.hpp"

namespace toric {

Json to_json(const Rat& r) { return to_string(r); }
Json to_json(const Pt& p) { return Json::array({to_string(p.x), to_string(p.y)}); }
Json to_json(const IVec& v) { return Json::array({v.a, v.b}); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<Int>()));
  throw DomainError("expected a rational \"p/q\", got " + j.dump());
}

Pt pt_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("expected a point [x, y], got " + j.dump());
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

IVec ivec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw DomainError("expected an integer vector [a, b], got " + j.dump());
  return {j[0].get<Int>(), j[1].get<Int>()};
}

Json to_json(const HalfSpace& h) {
  Json j;
  j["eta"] = to_json(h.eta);
  j["kappa"] = to_string(h.kappa);
  j["closure"] = closure_name(h.closure);
  return j;
}

HalfSpace halfspace_from_json(const Json& j) {
  HalfSpace h = closed_hs(ivec_from_json(j.at("eta")), rat_from_json(j.at("kappa")));
  if (j.contains("closure") && j["closure"] == "open") h.closure = Closure::Open;
  h.ghost = true;
  return h;
}

namespace {

Json probe_json(const Probe& pr) {
  Json j;
  j["facet"] = pr.facet;
  j["base"] = to_json(pr.base);
  j["dir"] = to_json(pr.dir);
  j["length"] = to_string(pr.length);
  if (pr.endpoint) j["endpoint"] = to_json(*pr.endpoint);
  return j;
}

Probe probe_from(const Polygon& p, const Json& j) {
  Dist len = parse_dist(j.at("length").get<std::string>());
  Probe pr = make_probe(p, j.at("facet").get<int>(), pt_from_json(j.at("base")), ivec_from_json(j.at("dir")),
                        len.finite() ? std::optional<Rat>(len.v) : std::nullopt);
  if (!(pr.length == len)) throw DomainError("probe length " + to_string(len) + " is not the exit distance");
  return pr;
}

Json series_json(const std::vector<Monomial>& s) {
  Json a = Json::array();
  for (const auto& m : s) a.push_back({{"coeff", to_string(m.coeff)}, {"order", to_string(m.order)}});
  return a;
}

template <class T>
void expect_eq(const T& a, const T& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string("derived field '") + what + "' does not match");
}

}  // namespace

Json probe_certificate(const Probe& pr, const Pt& u) {
  Json j;
  j["type"] = "probe";
  j["point"] = to_json(u);
  j["probe"] = probe_json(pr);
  return j;
}

Json symmetric_certificate(const SymmetricExtendedProbe& sp, const Pt& u) {
  Json j;
  j["type"] = "symmetric_extension";
  j["point"] = to_json(u);
  j["P"] = probe_json(sp.P);
  j["Q"] = probe_json(sp.Q);
  j["q_exit"] = sp.q_exit;
  j["x_pq"] = to_json(sp.x_pq);
  j["reflection"] = {{"linear", {{sp.reflection.linear[0][0], sp.reflection.linear[0][1]},
                                 {sp.reflection.linear[1][0], sp.reflection.linear[1][1]}}},
                     {"translation", to_json(sp.reflection.translation)}};
  j["x_pq_prime"] = to_json(sp.x_pq_prime);
  j["v_p_prime"] = to_json(sp.v_p_prime);
  j["len_p_prime"] = to_string(sp.len_p_prime);
  j["e_p_prime"] = to_json(sp.e_p_prime);
  j["total_length"] = to_string(sp.total_length);
  return j;
}

Json flagged_certificate(const FlaggedExtendedProbe& fp, const Pt& u) {
  Json j;
  j["type"] = "flagged_extension";
  j["point"] = to_json(u);
  j["P"] = probe_json(fp.P);
  j["Q"] = probe_json(fp.Q);
  j["kind"] = kind_name(fp.kind);
  j["mu"] = to_string(fp.mu);
  j["x_pq"] = to_json(fp.x_pq);
  j["x_f"] = to_json(fp.x_f);
  j["x_f_prime"] = to_json(fp.x_f_prime);
  j["len_f"] = to_string(fp.len_f);
  j["v_f"] = to_json(fp.v_f);
  j["v_f_prime"] = to_json(fp.v_f_prime);
  j["e_f"] = to_json(fp.e_f);
  j["e_f_prime"] = to_json(fp.e_f_prime);
  j["total_length"] = to_string(fp.total_length);
  return j;
}

Json qw_certificate(const QwCertificate& c) {
  Json j;
  j["type"] = "qw";
  j["kind"] = qw_kind_name(c.kind);
  j["point"] = to_json(c.presentation.point);
  Json g = Json::array();
  for (const auto& h : c.presentation.ghosts) g.push_back(to_json(h));
  j["ghosts"] = g;
  Json terms = Json::array();
  for (const auto& t : c.presentation.terms)
    terms.push_back({{"eta", to_json(t.eta)},
                     {"kappa", to_string(t.kappa)},
                     {"level", to_string(t.level)},
                     {"facet", t.facet},
                     {"ghost", t.ghost}});
  j["terms"] = terms;
  j["s"] = to_string(c.s);
  j["tied"] = c.tied;
  if (c.kind == QwKind::UnitPointSolved) {
    j["pivots"] = c.pivots;
    Json ea = Json::array();
    for (const auto& s : c.exp_alpha) ea.push_back(series_json(s));
    j["exp_alpha"] = ea;
    Json us = Json::array();
    for (const auto& r : c.unit_solution) us.push_back(to_string(r));
    j["unit_solution"] = us;
  } else {
    j["e1"] = c.e1;
    j["e2"] = c.e2;
    j["heuristic"] = c.heuristic;
  }
  return j;
}

QwCertificate qw_from_json(const Json& j) {
  QwCertificate c;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "UNIT_POINT_SOLVED")
    c.kind = QwKind::UnitPointSolved;
  else if (kind == "GEOMETRIC_CANDIDATE")
    c.kind = QwKind::GeometricCandidate;
  else
    throw DomainError("unknown qW certificate kind '" + kind + "'");
  c.presentation.point = pt_from_json(j.at("point"));
  for (const auto& g : j.at("ghosts")) c.presentation.ghosts.push_back(halfspace_from_json(g));
  for (const auto& t : j.at("terms"))
    c.presentation.terms.push_back({ivec_from_json(t.at("eta")), rat_from_json(t.at("kappa")),
                                    rat_from_json(t.at("level")), t.at("facet").get<int>(),
                                    t.at("ghost").get<bool>()});
  c.s = rat_from_json(j.at("s"));
  c.tied = j.at("tied").get<std::vector<int>>();
  if (c.kind == QwKind::UnitPointSolved) {
    c.pivots = j.at("pivots").get<std::vector<int>>();
    for (const auto& s : j.at("exp_alpha")) {
      std::vector<Monomial> ser;
      for (const auto& m : s) ser.push_back({rat_from_json(m.at("coeff")), rat_from_json(m.at("order"))});
      c.exp_alpha.push_back(ser);
    }
    for (const auto& r : j.at("unit_solution")) c.unit_solution.push_back(rat_from_json(r));
  } else {
    c.e1 = j.at("e1").get<std::vector<int>>();
    c.e2 = j.at("e2").get<std::vector<int>>();
    c.heuristic = j.value("heuristic", false);
  }
  return c;
}

CheckResult verify_certificate(const Polygon& p, const Json& cert) {
  try {
    std::string type = cert.at("type").get<std::string>();
    if (type == "qw") {
      QwCertificate c = qw_from_json(cert);
      std::string why;
      if (!verify_qw(p, c, &why)) return {false, why};
      return {true, "qW certificate verified"};
    }
    Pt u = pt_from_json(cert.at("point"));
    if (!p.contains(u, Mode::Interior)) return {false, "point " + to_string(u) + " is not interior"};
    if (type == "probe") {
      Probe pr = probe_from(p, cert.at("probe"));
      if (!probe_displaces(pr, u)) return {false, "point is not less than halfway along the probe"};
      return {true, "probe verified"};
    }
    if (type == "symmetric_extension") {
      Probe P = probe_from(p, cert.at("P"));
      Probe Q = probe_from(p, cert.at("Q"));
      auto sp = build_symmetric_extension(p, P, Q, rat_from_json(cert.at("len_p_prime")));
      expect_eq(sp.q_exit, cert.at("q_exit").get<int>(), "q_exit");
      expect_eq(sp.x_pq, pt_from_json(cert.at("x_pq")), "x_pq");
      expect_eq(sp.x_pq_prime, pt_from_json(cert.at("x_pq_prime")), "x_pq_prime");
      expect_eq(sp.v_p_prime, ivec_from_json(cert.at("v_p_prime")), "v_p_prime");
      expect_eq(sp.e_p_prime, pt_from_json(cert.at("e_p_prime")), "e_p_prime");
      expect_eq(sp.total_length, rat_from_json(cert.at("total_length")), "total_length");
      const Json& refl = cert.at("reflection");
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) expect_eq(sp.reflection.linear[r][c], refl.at("linear")[r][c].get<Int>(), "reflection");
      expect_eq(sp.reflection.translation, pt_from_json(refl.at("translation")), "reflection");
      if (!sep_displaces(sp, u)) return {false, "point is not less than halfway along the extended probe"};
      return {true, "symmetric extended probe verified"};
    }
    if (type == "flagged_extension") {
      Probe P = probe_from(p, cert.at("P"));
      Probe Q = probe_from(p, cert.at("Q"));
      std::string k = cert.at("kind").get<std::string>();
      if (k != "parallel" && k != "general") return {false, "unknown flag kind '" + k + "'"};
      FlagKind kind = k == "parallel" ? FlagKind::Parallel : FlagKind::General;
      auto fp = build_flagged(p, P, Q, kind, rat_from_json(cert.at("mu")), pt_from_json(cert.at("x_f")),
                              pt_from_json(cert.at("x_f_prime")), rat_from_json(cert.at("len_f")));
      expect_eq(fp.x_pq, pt_from_json(cert.at("x_pq")), "x_pq");
      expect_eq(fp.v_f, pt_from_json(cert.at("v_f")), "v_f");
      expect_eq(fp.v_f_prime, pt_from_json(cert.at("v_f_prime")), "v_f_prime");
      expect_eq(fp.e_f, pt_from_json(cert.at("e_f")), "e_f");
      expect_eq(fp.e_f_prime, pt_from_json(cert.at("e_f_prime")), "e_f_prime");
      expect_eq(fp.total_length, rat_from_json(cert.at("total_length")), "total_length");
      if (!flagged_displaces(fp, u)) return {false, "point is not less than halfway along the flagged probe"};
      return {true, "flagged extended probe verified"};
    }
    return {false, "unknown certificate type '" + type + "'"};
  } catch (const Json::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  } catch (const DomainError& e) {
    return {false, e.what()};
  } catch (const std::logic_error& e) {
    return {false, e.what()};
  }
}

}  // namespace toric
