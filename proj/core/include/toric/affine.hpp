#pragma once

#include "toric/rational.hpp"

#include <array>
#include <string>
#include <utility>

namespace toric {

// Integer 2-vector: conormals live in the lattice t_Z, directions in t*_Z.
struct IVec {
  Int a = 0, b = 0;
  friend bool operator==(const IVec&, const IVec&) = default;
  friend auto operator<=>(const IVec&, const IVec&) = default;
};

// Rational 2-vector: points of t* and rational displacement vectors.
struct Pt {
  Rat x, y;
  Pt() = default;
  Pt(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit Pt(const IVec& v) : x(static_cast<long>(v.a)), y(static_cast<long>(v.b)) {}
  bool integral() const { return is_integer(x) && is_integer(y); }
  friend bool operator==(const Pt& p, const Pt& q) { return p.x == q.x && p.y == q.y; }
};

inline Pt operator+(const Pt& p, const Pt& q) { return {p.x + q.x, p.y + q.y}; }
inline Pt operator-(const Pt& p, const Pt& q) { return {p.x - q.x, p.y - q.y}; }
inline Pt operator-(const Pt& p) { return {-p.x, -p.y}; }
inline Pt operator*(const Rat& t, const Pt& p) { return {t * p.x, t * p.y}; }
inline Pt operator*(const Rat& t, const IVec& v) {
  return {t * static_cast<long>(v.a), t * static_cast<long>(v.b)};
}
inline Pt operator+(const Pt& p, const IVec& v) {
  return {p.x + static_cast<long>(v.a), p.y + static_cast<long>(v.b)};
}
inline IVec operator-(const IVec& v) { return {-v.a, -v.b}; }
inline IVec operator+(const IVec& u, const IVec& v) { return {u.a + v.a, u.b + v.b}; }
inline IVec operator-(const IVec& u, const IVec& v) { return {u.a - v.a, u.b - v.b}; }
inline IVec operator*(Int k, const IVec& v) { return {k * v.a, k * v.b}; }

inline Int dot(const IVec& eta, const IVec& v) { return eta.a * v.a + eta.b * v.b; }
inline Rat dot(const IVec& eta, const Pt& x) {
  return static_cast<long>(eta.a) * x.x + static_cast<long>(eta.b) * x.y;
}
inline Int det(const IVec& u, const IVec& v) { return u.a * v.b - u.b * v.a; }
inline Int height(const IVec& v) { return std::max(v.a < 0 ? -v.a : v.a, v.b < 0 ? -v.b : v.b); }

Int gcd_int(Int a, Int b);
bool is_primitive(const IVec& v);

// (primitive vector, positive multiplier) with multiplier * primitive = v
std::pair<IVec, Int> make_primitive(const IVec& v);

bool is_integrally_transverse(const IVec& eta, const IVec& v);

// |<eta,x> + kappa|
Rat affine_distance_to_hyperplane(const Pt& x, const IVec& eta, const Rat& kappa);

// |t| where x - y = t v with v primitive integral; 0 when x == y
Rat affine_distance_along_line(const Pt& x, const Pt& y);

// Primitive integral direction of y - x (y != x).
IVec primitive_direction(const Pt& x, const Pt& y);

// Parameter t >= 0 at which x + t v meets {<eta,.> + kappa = 0}, or +inf.
Dist directed_distance(const Pt& x, const IVec& eta, const Rat& kappa, const IVec& v);

// A(x) = L x + t with L an integer matrix.
struct AffineReflection {
  std::array<std::array<Int, 2>, 2> linear{};
  Pt translation;

  Pt apply(const Pt& x) const;
  IVec apply_linear(const IVec& v) const;
  // transpose action on conormals
  IVec apply_dual(const IVec& eta) const;
  Int det() const { return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]; }
  bool is_involution() const;
};

// A_Q(x) = x + <eta' - eta, x> v + (kappa' - kappa) v. Requires <eta,v> = 1, <eta',v> = -1.
AffineReflection reflection_from_facets(const IVec& eta, const Rat& kappa, const IVec& eta_prime,
                                        const Rat& kappa_prime, const IVec& v);

std::string to_string(const IVec& v);
std::string to_string(const Pt& p);

}  // namespace toric
