#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperseries/hypertree.hpp"
#include "hyperseries/series.hpp"

namespace hyperseries {

inline constexpr int kUnboundedMagnitude = 1 << 20;

// Downward-closed box {t_deg <= t_max, magnitude <= magnitude_max} on which a
// computed series is known to equal the untruncated one.
struct ExactRegion {
  int t_max = 0;
  int magnitude_max = 0;

  bool covers(const ExactRegion& other) const {
    return t_max >= other.t_max && magnitude_max >= other.magnitude_max;
  }
  friend bool operator==(const ExactRegion&, const ExactRegion&) = default;
};

struct Mismatch {
  Monomial monomial;
  Rational lhs;
  Rational rhs;
};

struct IdentityCheck {
  std::string name;
  std::string statement;
  bool pass = false;
  // Region actually compared, and whether it covers the requested one.
  ExactRegion compared{};
  bool covers_requested = false;
  // pass/fail per t-order 0..requested.t_max
  std::vector<bool> order_pass;
  std::optional<Mismatch> first_mismatch;
};

struct IdentityReport {
  ExactRegion requested{};
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  const IdentityCheck* find(const std::string& name) const;
};

struct IdentityOptions {
  int t_max = 6;
  int magnitude_max = 6;
  // Largest j for the connected u_j recurrence.
  int connected_j_max = 5;
};

// Context with enough headroom for verify_identities to cover the requested
// region: one extra t-order and magnitude grown by connected_j_max - 1
// (derivatives in u_j consume j - 1 magnitude).
TruncationContext identity_context(const IdentityOptions& options, int max_edge_size);

// Checks the generating-function identities for C, T and R as exact series
// equalities on the requested region. P must come from run_pipeline (or be
// edited from one, for fault injection).
IdentityReport verify_identities(const PipelineResult& P, const IdentityOptions& options);

// Compares two series on a region; the building block of every check.
IdentityCheck compare_on_region(std::string name, std::string statement, const Series& lhs,
                                const Series& rhs, const ExactRegion& exact,
                                const ExactRegion& requested);

}  // namespace hyperseries
