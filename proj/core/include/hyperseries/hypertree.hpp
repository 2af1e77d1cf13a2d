#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperseries/combinatorics.hpp"
#include "hyperseries/hypergraph.hpp"
#include "hyperseries/series.hpp"

namespace hyperseries {

// Connected-hypergraph EGF, its leading (hypertree) part, and the
// vertex-rooted hypertree EGF, all over one context.
struct PipelineResult {
  Series C;
  Series T;
  Series R;
  TruncationContext context;
};

// C = log( sum_{k=0}^{K} t^k/k! exp( sum_i C(k, i) u_i ) ). Each summand
// carries t^k, so K = ctx.t_max already gives every retained coefficient;
// K < t_max is rejected.
Series compute_C(const TruncationContext& ctx, int K);
Series compute_C(const TruncationContext& ctx);

// Terms of C with magnitude = t_deg - 1. Requires magnitude_max >= t_max - 1.
Series compute_T(const Series& C);
// R = t dT/dt.
Series compute_R(const Series& T);
PipelineResult run_pipeline(const TruncationContext& ctx);

// R = t exp( sum_{j>=1} u_{j+1} R^j / j! ), iterated exactly t_max times from
// R = t and then checked for stability.
Series solve_R_fixed_point(const TruncationContext& ctx);
// T = R - sum_{j>=2} (j - 1) u_j R^j / j!.
Series T_from_R(const Series& R);

// [t^n/n!] R as a polynomial in u by Lagrange inversion:
//   sum over partitions of n-1 of multinomial(n-1; parts) prod_i (n u_{i+1})^{a_i} / a_i!
// where a_i counts the parts of size i.
Series lagrange_rooted_polynomial(int n, const TruncationContext& ctx);

// Coefficients of u^lambda in [t^n/n!] R and [t^n/n!] T.
struct HypertreeCount {
  BigInt rooted = 0;
  BigInt unrooted = 0;
  friend bool operator==(const HypertreeCount&, const HypertreeCount&) = default;
};

// Single-partition evaluation of the Lagrange formula. The rooted-to-
// unrooted division by n is asserted exact. Zero off magnitude n - 1.
HypertreeCount count_by_profile(int n, const EdgeProfile& profile);

// Rooted hypertrees on [n] with k edges: n^k S(n-1, k); zero outside
// 1 <= k <= n-1 (except n = 1, k = 0, the bare root).
BigInt rooted_count_by_edges(int n, int k, const StirlingTable& stirling);
BigInt rooted_count_by_edges(int n, int k);
// sum_k n^k S(n-1, k)
BigInt total_rooted(int n);

// u_j -> 1 for every j, realised by summing coefficients per t-order.
struct AllOnes {
  Series T;  // t-only series
  Series R;
};
AllOnes specialize_all_ones(const PipelineResult& P);

struct TableRow {
  int n;
  Series polynomial;  // [t^n/n!] T, t-free
  std::string text;   // "u4 + 12u2u3 + 16u2^3"
};

// Rows n = 1..max_n computed through compute_C -> compute_T.
std::vector<TableRow> hypertree_table(int max_n, int max_edge_size);

// Renders a t-free polynomial in u with integers or p/q coefficients. Terms
// are ordered by edge count, then by edge sizes largest first; factors by
// ascending index.
std::string format_u_polynomial(const Series& polynomial);
// Inverse of format_u_polynomial that also accepts factors in any order,
// repeated factors and "u_i" spellings, e.g. "u5 + 150u3u2^2 - 3/2u_2".
// Throws std::invalid_argument on malformed text or on u_i with i < 2.
Series parse_u_polynomial(std::string_view text, const TruncationContext& ctx);

}  // namespace hyperseries
