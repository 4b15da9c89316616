#pragma once

#include "toric/probes.hpp"
#include "toric/qw.hpp"

#include <string>

namespace toric {

Json to_json(const Rat& r);
Json to_json(const Pt& p);
Json to_json(const IVec& v);
Rat rat_from_json(const Json& j);
Pt pt_from_json(const Json& j);
IVec ivec_from_json(const Json& j);
Json to_json(const HalfSpace& h);
HalfSpace halfspace_from_json(const Json& j);

// Certificates carry the point they displace. Rebuilding goes through the same validated
// constructors, so a tampered field either fails construction or a comparison.
Json probe_certificate(const Probe& pr, const Pt& u);
Json symmetric_certificate(const SymmetricExtendedProbe& sp, const Pt& u);
Json flagged_certificate(const FlaggedExtendedProbe& fp, const Pt& u);
Json qw_certificate(const QwCertificate& c);
QwCertificate qw_from_json(const Json& j);

struct CheckResult {
  bool ok = false;
  std::string reason;
};

CheckResult verify_certificate(const Polygon& p, const Json& cert);

}  // namespace toric
