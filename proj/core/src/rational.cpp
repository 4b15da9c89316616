#include "toric/rational.hpp"

#include <cctype>
#include <limits>

namespace toric {

namespace {

bool valid_int_text(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_int(std::string_view s) {
  if (!valid_int_text(s)) throw DomainError("malformed rational: '" + std::string(s) + "'");
  std::string t(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(t, 10);
}

}  // namespace

Rat parse_rat(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  mpz_class p = parse_int(s.substr(0, slash));
  std::string_view qs = s.substr(slash + 1);
  if (!qs.empty() && qs[0] == '-') throw DomainError("malformed rational: negative denominator");
  mpz_class q = parse_int(qs);
  if (q == 0) throw DomainError("division by zero in rational '" + std::string(s) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat floor_rat(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

Rat ceil_rat(const Rat& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

Int to_int(const Rat& r) {
  if (r.get_den() != 1) throw DomainError("expected an integer, got " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw DomainError("integer out of range: " + to_string(r));
  return r.get_num().get_si();
}

std::strong_ordering operator<=>(const Dist& a, const Dist& b) {
  if (a.inf || b.inf) {
    if (a.inf && b.inf) return std::strong_ordering::equal;
    return a.inf ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.v, b.v);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Dist& a, const Dist& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Dist& a, const Rat& b) { return a <=> Dist::of(b); }
bool operator==(const Dist& a, const Rat& b) { return !a.inf && a.v == b; }

std::string to_string(const Dist& d) { return d.inf ? "inf" : to_string(d.v); }

Dist parse_dist(std::string_view s) {
  if (s == "inf") return Dist::infinity();
  return Dist::of(parse_rat(s));
}

std::ostream& operator<<(std::ostream& os, const Dist& d) { return os << to_string(d); }

}  // namespace toric
