#pragma once

#include "toric/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// A probe runs from a base point on a closed facet in an integrally transverse inward
// direction. length may be infinite when the ray never leaves an unbounded polygon.
struct Probe {
  int facet = -1;
  Pt base;
  IVec dir;
  Dist length;
  std::optional<Pt> endpoint;  // absent iff length is infinite

  Pt at(const Rat& t) const { return base + t * dir; }
};

// Builds a probe of maximal length, or of the given length when it fits.
Probe make_probe(const Polygon& p, int facet, const Pt& base, const IVec& dir,
                 std::optional<Rat> length = std::nullopt);

// Parameter t with u = base + t dir, if u lies on the open probe segment.
std::optional<Rat> probe_parameter(const Probe& pr, const Pt& u);

// u less than halfway along the probe. Throws if u is not on the probe's interior.
bool probe_displaces(const Probe& pr, const Pt& u);

// Exit facet when the probe ends in the relative interior of a closed facet F' with
// <eta_F', v> = -1.
std::optional<int> is_symmetric(const Polygon& p, const Probe& pr);

struct SymmetricExtendedProbe {
  Probe P, Q;
  int q_exit = -1;
  Pt x_pq;
  AffineReflection reflection;
  Pt x_pq_prime;
  IVec v_p_prime;
  Rat len_p_prime;
  Pt e_p_prime;
  Rat total_length;
};

// P must be truncated so that its endpoint lies in the interior of Q. Without an explicit
// length the extension runs to the boundary; that fails if it ends on an open facet.
SymmetricExtendedProbe build_symmetric_extension(const Polygon& p, const Probe& P, const Probe& Q,
                                                 std::optional<Rat> len_p_prime = std::nullopt);

bool sep_displaces(const SymmetricExtendedProbe& sp, const Pt& u);

enum class FlagKind { Parallel, General };
std::string kind_name(FlagKind k);

struct FlaggedExtendedProbe {
  Probe P, Q;
  Pt x_pq;
  FlagKind kind = FlagKind::General;
  Rat mu;
  Pt x_f, x_f_prime;
  Rat len_f;
  Pt e_f, e_f_prime;
  Pt v_f, v_f_prime;
  Rat total_length;
};

// Rejection of a flag construction; `inequality` names the violated condition.
struct FlagRejected : DomainError {
  std::string inequality;
  FlagRejected(std::string which, const std::string& msg)
      : DomainError(which + ": " + msg), inequality(std::move(which)) {}
};

inline constexpr const char* kFirstInequality = "first flag inequality d_aff(x_PQ,F_Q) < d_aff(x_F,x'_F)";
inline constexpr const char* kSecondInequality = "second flag inequality l(F) < d_vP(x_PQ,F_Q)";

FlaggedExtendedProbe build_flagged(const Polygon& p, const Probe& P, const Probe& Q, FlagKind kind,
                                   const Rat& mu, const Pt& x_f, const Pt& x_f_prime, const Rat& len_f);

// u on the interior of P and d_aff(u, F_P) < l(FP)/2. Throws if u is not on P.
bool flagged_displaces(const FlaggedExtendedProbe& fp, const Pt& u);

struct FlagOptions {
  Rat epsilon = rat(1, 1000);
  Rat cap = 100;  // bound on flag length and offsets in unbounded polygons
};

// Longest flag for a fixed truncated P and deflector Q, as an exact LP in (alpha, alpha', l_F).
std::optional<FlaggedExtendedProbe> maximize_flag(const Polygon& p, const Probe& P, const Probe& Q,
                                                  FlagKind kind, const Rat& mu,
                                                  const FlagOptions& opt = {});

// Primitive v with <eta, v> = 1 and height <= H, by increasing height.
std::vector<IVec> transverse_directions(const IVec& eta, Int H);

}  // namespace toric
