#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

// Exact rationals. mpq_class keeps values canonical (reduced, positive denominator)
// after every arithmetic operation.
using Rat = mpq_class;
using Int = long long;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_rat(std::string_view s);
std::string to_string(const Rat& r);

inline Rat rat(Int p, Int q = 1) {
  if (q == 0) throw DomainError("zero denominator");
  Rat r(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

inline Rat div(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) throw DomainError("division by zero");
  return a / b;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor/ceil of a rational, as a rational with denominator 1
Rat floor_rat(const Rat& r);
Rat ceil_rat(const Rat& r);
Int to_int(const Rat& r);  // throws unless integral and in range

// A distance: a nonnegative rational or +infinity. Infinity compares above every rational.
struct Dist {
  bool inf = false;
  Rat v;

  static Dist infinity() { return Dist{true, Rat(0)}; }
  static Dist of(const Rat& r) { return Dist{false, r}; }
  bool finite() const { return !inf; }
  const Rat& value() const {
    if (inf) throw DomainError("infinite distance has no rational value");
    return v;
  }
};

std::strong_ordering operator<=>(const Dist& a, const Dist& b);
bool operator==(const Dist& a, const Dist& b);
std::strong_ordering operator<=>(const Dist& a, const Rat& b);
bool operator==(const Dist& a, const Rat& b);

std::string to_string(const Dist& d);
Dist parse_dist(std::string_view s);

std::ostream& operator<<(std::ostream& os, const Dist& d);

}  // namespace toric
