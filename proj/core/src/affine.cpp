#include "toric/affine.hpp"

#include <cstdlib>

namespace toric {

Int gcd_int(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_primitive(const IVec& v) { return !(v.a == 0 && v.b == 0) && gcd_int(v.a, v.b) == 1; }

std::pair<IVec, Int> make_primitive(const IVec& v) {
  if (v.a == 0 && v.b == 0) throw DomainError("make_primitive: zero vector");
  Int g = gcd_int(v.a, v.b);
  return {IVec{v.a / g, v.b / g}, g};
}

bool is_integrally_transverse(const IVec& eta, const IVec& v) {
  Int d = dot(eta, v);
  return d == 1 || d == -1;
}

Rat affine_distance_to_hyperplane(const Pt& x, const IVec& eta, const Rat& kappa) {
  return abs(dot(eta, x) + kappa);
}

IVec primitive_direction(const Pt& x, const Pt& y) {
  Pt d = y - x;
  if (sgn(d.x) == 0 && sgn(d.y) == 0) throw DomainError("primitive_direction: equal points");
  // scale to integers: multiply by lcm of denominators, then strip the gcd
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), d.x.get_den_mpz_t(), d.y.get_den_mpz_t());
  mpz_class a = d.x.get_num() * (l / d.x.get_den());
  mpz_class b = d.y.get_num() * (l / d.y.get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p()) throw DomainError("direction out of range");
  return IVec{a.get_si(), b.get_si()};
}

Rat affine_distance_along_line(const Pt& x, const Pt& y) {
  if (x == y) return Rat(0);
  IVec v = primitive_direction(y, x);
  // x - y = t v with t > 0
  if (v.a != 0) return abs((x.x - y.x) / static_cast<long>(v.a));
  return abs((x.y - y.y) / static_cast<long>(v.b));
}

Dist directed_distance(const Pt& x, const IVec& eta, const Rat& kappa, const IVec& v) {
  Rat level = dot(eta, x) + kappa;
  Int rate = dot(eta, v);
  if (rate == 0) return sgn(level) == 0 ? Dist::of(Rat(0)) : Dist::infinity();
  Rat t = -level / static_cast<long>(rate);
  if (sgn(t) < 0) return Dist::infinity();
  return Dist::of(t);
}

Pt AffineReflection::apply(const Pt& x) const {
  return {static_cast<long>(linear[0][0]) * x.x + static_cast<long>(linear[0][1]) * x.y + translation.x,
          static_cast<long>(linear[1][0]) * x.x + static_cast<long>(linear[1][1]) * x.y + translation.y};
}

IVec AffineReflection::apply_linear(const IVec& v) const {
  return {linear[0][0] * v.a + linear[0][1] * v.b, linear[1][0] * v.a + linear[1][1] * v.b};
}

IVec AffineReflection::apply_dual(const IVec& eta) const {
  return {linear[0][0] * eta.a + linear[1][0] * eta.b, linear[0][1] * eta.a + linear[1][1] * eta.b};
}

bool AffineReflection::is_involution() const {
  Int a = linear[0][0], b = linear[0][1], c = linear[1][0], d = linear[1][1];
  if (!(a * a + b * c == 1 && a * b + b * d == 0 && c * a + d * c == 0 && c * b + d * d == 1))
    return false;
  // translation t must satisfy L t + t = 0
  Pt lt{static_cast<long>(a) * translation.x + static_cast<long>(b) * translation.y,
        static_cast<long>(c) * translation.x + static_cast<long>(d) * translation.y};
  return sgn(lt.x + translation.x) == 0 && sgn(lt.y + translation.y) == 0;
}

AffineReflection reflection_from_facets(const IVec& eta, const Rat& kappa, const IVec& eta_prime,
                                        const Rat& kappa_prime, const IVec& v) {
  if (dot(eta, v) != 1)
    throw DomainError("reflection_from_facets: <eta_FQ, v_Q> = " + std::to_string(dot(eta, v)) +
                      ", expected 1");
  if (dot(eta_prime, v) != -1)
    throw DomainError("reflection_from_facets: <eta_FQ', v_Q> = " +
                      std::to_string(dot(eta_prime, v)) + ", expected -1");
  IVec w = eta_prime - eta;
  AffineReflection r;
  r.linear = {{{1 + v.a * w.a, v.a * w.b}, {v.b * w.a, 1 + v.b * w.b}}};
  Rat dk = kappa_prime - kappa;
  r.translation = dk * v;
  if (r.det() != -1) throw DomainError("reflection_from_facets: determinant is not -1");
  if (r.apply_linear(v) != -v) throw DomainError("reflection_from_facets: linear part does not negate v_Q");
  if (r.apply_dual(eta) != eta_prime)
    throw DomainError("reflection_from_facets: dual action does not swap the facets");
  if (!r.is_involution()) throw DomainError("reflection_from_facets: not an involution");
  return r;
}

std::string to_string(const IVec& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

std::string to_string(const Pt& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

}  // namespace toric
