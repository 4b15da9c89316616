#pragma once

#include "toric/certificates.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

struct SearchConfig {
  Int direction_height = 10;  // probe and symmetric-extension directions
  Int flag_height = 3;        // directions of P and Q inside the flag search
  std::vector<Rat> mu_samples{0, rat(1, 4), rat(1, 2), rat(3, 4), 1};  // fixed-mu flag search only
  bool optimize_mu = true;    // treat mu as an LP variable instead of sampling
  Rat epsilon = rat(1, 1000);
  int x_pq_samples = 64;      // unused by the exact interval search, kept for config compatibility
  Int ghost_height = 4;
  Rat max_flag_cap = 100;
  bool use_symmetric = true;
  bool use_flags = true;
  bool use_qw = true;
};

Json to_json(const SearchConfig& c);
SearchConfig config_from_json(const Json& j);  // missing fields keep defaults

enum class VerdictClass {
  DisplaceableProbe,
  DisplaceableSymmetricExt,
  DisplaceableFlaggedExt,
  NondispCertified,
  NondispCandidate,
  Unknown,
  Exterior,
};
std::string class_name(VerdictClass c);
VerdictClass class_from_name(const std::string& s);
bool is_displaceable(VerdictClass c);
bool is_nondisplaceable(VerdictClass c);

struct Verdict {
  Pt point;
  VerdictClass cls = VerdictClass::Unknown;
  Json certificate;  // null when absent
};

// Individual searches; each returns a certificate that already passed verify_certificate.
std::optional<Json> find_probe(const Polygon& p, const Pt& u, const SearchConfig& cfg);
std::optional<Json> find_symmetric_extension(const Polygon& p, const Pt& u, const SearchConfig& cfg);
std::optional<Json> find_flagged_extension(const Polygon& p, const Pt& u, const SearchConfig& cfg);

Verdict classify_point(const Polygon& p, const Pt& u, const SearchConfig& cfg = {});

struct BBox {
  Rat x0, y0, x1, y1;
};

struct ClassificationGrid {
  Polygon polygon;
  BBox bbox;
  Rat resolution;
  SearchConfig config;
  std::vector<Verdict> cells;  // row-major from (x0, y0), x fastest
  size_t nx = 0, ny = 0;
};

// Worker count from TORIC_PROBE_THREADS (0 or unset = hardware concurrency).
unsigned worker_threads();

ClassificationGrid classify_grid(const Polygon& p, const BBox& box, const Rat& resolution,
                                 const SearchConfig& cfg = {});

Json to_json(const ClassificationGrid& g);
ClassificationGrid grid_from_json(const Json& j);

struct AuditReport {
  bool ok = true;
  std::vector<std::string> failures;  // one line per offending cell
  std::vector<std::pair<std::string, Rat>> areas;  // class -> cell count * resolution^2
  size_t checked = 0;
};

// Re-verifies every certificate, checks class/certificate agreement and, with cross_check,
// that no displaceable cell admits a unit-point certificate.
AuditReport consistency_audit(const ClassificationGrid& g, bool cross_check = true);

}  // namespace toric
