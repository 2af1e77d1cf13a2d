#include "hyperseries/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hyperseries {

BudgetExceeded::BudgetExceeded(BigInt required, std::uint64_t budget)
    : std::runtime_error("oracle: request needs " + required.get_str() +
                         " hypergraphs, budget is " + std::to_string(budget)),
      required_(std::move(required)) {}

BigInt assignment_count(int n, const EdgeProfile& profile) {
  BigInt total = 1;
  for (int i = 2; i <= kMaxEdgeSize; ++i) {
    BigInt c = binomial(n, i);
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(profile.count(i)));
    total *= p;
  }
  return total;
}

namespace {

void check_request(int n, const OracleLimits& limits) {
  if (n < 1) throw std::invalid_argument("oracle: n must be at least 1");
  if (n > limits.n_max || n > kMaxVertices) {
    throw std::invalid_argument("oracle: n = " + std::to_string(n) + " exceeds n_max = " +
                                std::to_string(limits.n_max));
  }
}

void check_budget(const BigInt& required, const OracleLimits& limits) {
  if (required > BigInt(std::to_string(limits.budget))) throw BudgetExceeded(required, limits.budget);
}

std::vector<EdgeSet> subsets_of_size(int n, int size) {
  std::vector<EdgeSet> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) == size) out.push_back(static_cast<EdgeSet>(s));
  }
  return out;
}

}  // namespace

void for_each_hypergraph(int n, const EdgeProfile& profile, const OracleLimits& limits,
                         const std::function<void(const Hypergraph&)>& visit) {
  check_request(n, limits);
  check_budget(assignment_count(n, profile), limits);

  // One slot per labeled edge, grouped by size.
  std::vector<std::vector<EdgeSet>> choices;
  for (int i = 2; i <= kMaxEdgeSize; ++i) {
    if (profile.count(i) == 0) continue;
    if (i > n) return;  // no i-subsets of [n]
    const auto subsets = subsets_of_size(n, i);
    for (int j = 0; j < profile.count(i); ++j) choices.push_back(subsets);
  }

  std::vector<std::size_t> index(choices.size(), 0);
  std::vector<EdgeSet> edges(choices.size());
  while (true) {
    for (std::size_t s = 0; s < choices.size(); ++s) edges[s] = choices[s][index[s]];
    visit(Hypergraph(n, edges));
    std::size_t s = choices.size();
    while (s > 0) {
      --s;
      if (++index[s] < choices[s].size()) break;
      index[s] = 0;
      if (s == 0) return;
    }
    if (choices.empty()) return;
  }
}

std::vector<Hypergraph> enumerate(int n, const EdgeProfile& profile, const OracleLimits& limits) {
  std::vector<Hypergraph> out;
  for_each_hypergraph(n, profile, limits, [&](const Hypergraph& h) { out.push_back(h); });
  return out;
}

ProfileCounts count_profile(int n, const EdgeProfile& profile, const OracleLimits& limits) {
  ProfileCounts counts;
  std::uint64_t all = 0, connected = 0, trees = 0;
  for_each_hypergraph(n, profile, limits, [&](const Hypergraph& h) {
    ++all;
    if (!is_connected(h)) return;
    ++connected;
    if (is_hypertree(h)) ++trees;
  });
  counts.all = BigInt(std::to_string(all));
  counts.connected = BigInt(std::to_string(connected));
  counts.hypertree = BigInt(std::to_string(trees));
  return counts;
}

std::vector<EdgeProfile> profiles_up_to(int n, int magnitude_max, int max_edge) {
  const int top = std::min({n, max_edge, kMaxEdgeSize});
  std::vector<EdgeProfile> out;
  EdgeProfile current;
  // Depth-first over edge sizes 2..top, bounded by the remaining magnitude.
  std::function<void(int, int)> extend = [&](int size, int remaining) {
    if (size > top) {
      out.push_back(current);
      return;
    }
    for (int c = 0; c * (size - 1) <= remaining; ++c) {
      current.set(size, c);
      extend(size + 1, remaining - c * (size - 1));
    }
    current.set(size, 0);
  };
  if (top >= 2) {
    extend(2, magnitude_max);
  } else {
    out.push_back(current);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CountTable count_table(int n, int magnitude_max, int max_edge, const OracleLimits& limits) {
  check_request(n, limits);
  const auto profiles = profiles_up_to(n, magnitude_max, max_edge);
  BigInt total = 0;
  for (const auto& p : profiles) total += assignment_count(n, p);
  check_budget(total, limits);
  CountTable table;
  for (const auto& p : profiles) table.emplace(std::make_pair(n, p), count_profile(n, p, limits));
  return table;
}

OraclePolynomials oracle_polynomials(int n, const TruncationContext& ctx, const OracleLimits& limits) {
  const CountTable table = count_table(n, ctx.magnitude_max, ctx.alphabet.max_edge_size, limits);
  SeriesBuilder connected(ctx);
  SeriesBuilder trees(ctx);
  SeriesBuilder leading(ctx);
  for (const auto& [key, counts] : table) {
    const EdgeProfile& p = key.second;
    const Monomial m = p.to_monomial();
    const BigInt lambda_factorial = p.factorial();
    connected.add(m, Rational(counts.connected, lambda_factorial));
    trees.add(m, Rational(counts.hypertree, lambda_factorial));
  }
  OraclePolynomials out{std::move(connected).build(), std::move(trees).build()};
  const Series filtered = grade_filter(out.connected, [n](int, int magnitude) { return magnitude == n - 1; });
  if (!(filtered == out.hypertree)) {
    throw std::logic_error("oracle: hypertree polynomial differs from the minimal-magnitude part on n = " +
                           std::to_string(n));
  }
  return out;
}

LemmaReport check_lemma(int n, int magnitude_max, const OracleLimits& limits) {
  check_request(n, limits);
  const auto profiles = profiles_up_to(n, magnitude_max, kMaxEdgeSize);
  BigInt total = 0;
  for (const auto& p : profiles) total += assignment_count(n, p);
  check_budget(total, limits);

  LemmaReport report;
  for (const auto& p : profiles) {
    for_each_hypergraph(n, p, limits, [&](const Hypergraph& h) {
      if (!is_connected(h)) return;
      ++report.connected_checked;
      const int magnitude = edge_magnitude(h);
      const bool tree = is_hypertree(h);
      if (tree) ++report.hypertrees;
      if (magnitude < n - 1 || (magnitude == n - 1) != tree) {
        report.magnitude_counterexamples.push_back(h);
      }
      if (tree) {
        const auto& edges = h.edges();
        for (std::size_t a = 0; a < edges.size(); ++a) {
          for (std::size_t b = a + 1; b < edges.size(); ++b) {
            if (std::popcount(edges[a] & edges[b]) > 1) {
              report.edge_pair_counterexamples.push_back(h);
              return;
            }
          }
        }
      }
    });
  }
  return report;
}

}  // namespace hyperseries
