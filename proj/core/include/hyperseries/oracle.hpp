#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperseries/hypergraph.hpp"
#include "hyperseries/series.hpp"

namespace hyperseries {

struct OracleLimits {
  int n_max = 6;
  // Maximum number of labeled hypergraphs generated by a single request.
  std::uint64_t budget = 10'000'000;
};

// Raised instead of sampling when a request would exceed the work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigInt required, std::uint64_t budget);
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

// prod_i C(n, i)^lambda_i, the number of labeled hypergraphs on [n] with the
// given profile.
BigInt assignment_count(int n, const EdgeProfile& profile);

// Every labeled hypergraph on [n] with the profile, exactly once: each of the
// lambda_i labeled i-edges independently picks an i-subset. Order is
// lexicographic in (edge slot, subset rank) with the first slot slowest, and
// depends only on (n, profile).
void for_each_hypergraph(int n, const EdgeProfile& profile, const OracleLimits& limits,
                         const std::function<void(const Hypergraph&)>& visit);
std::vector<Hypergraph> enumerate(int n, const EdgeProfile& profile,
                                  const OracleLimits& limits = {});

struct ProfileCounts {
  BigInt all = 0;
  BigInt connected = 0;
  BigInt hypertree = 0;
  friend bool operator==(const ProfileCounts&, const ProfileCounts&) = default;
};

ProfileCounts count_profile(int n, const EdgeProfile& profile, const OracleLimits& limits = {});

// Every profile with edge sizes in [2, min(n, max_edge)] and magnitude at
// most magnitude_max, in ascending EdgeProfile order.
std::vector<EdgeProfile> profiles_up_to(int n, int magnitude_max, int max_edge);

// (n, profile) -> counts.
using CountTable = std::map<std::pair<int, EdgeProfile>, ProfileCounts>;

// Counts every profile of profiles_up_to(n, magnitude_max, max_edge). The
// budget applies to the total.
CountTable count_table(int n, int magnitude_max, int max_edge, const OracleLimits& limits = {});

struct OraclePolynomials {
  Series connected;  // C_n = sum (#connected) u^lambda / lambda!
  Series hypertree;  // T_n = sum (#hypertrees) u^lambda / lambda!
};

// Polynomials in u over ctx (t-free terms); ctx.magnitude_max bounds the
// profiles and its alphabet bounds the edge sizes. Throws std::logic_error
// if the hypertree polynomial differs from the magnitude-(n-1) part of the
// connected one.
OraclePolynomials oracle_polynomials(int n, const TruncationContext& ctx,
                                     const OracleLimits& limits = {});

struct LemmaReport {
  std::uint64_t connected_checked = 0;
  std::uint64_t hypertrees = 0;
  // Connected hypergraphs violating: magnitude >= n - 1, equality iff hypertree.
  std::vector<Hypergraph> magnitude_counterexamples;
  // Hypertrees with two edges sharing more than one vertex.
  std::vector<Hypergraph> edge_pair_counterexamples;
  bool ok() const { return magnitude_counterexamples.empty() && edge_pair_counterexamples.empty(); }
};

// Scans every connected hypergraph on [n] with magnitude <= magnitude_max.
LemmaReport check_lemma(int n, int magnitude_max, const OracleLimits& limits = {});

}  // namespace hyperseries
