#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hyperseries/monomial.hpp"
#include "hyperseries/rational.hpp"

namespace hyperseries {

// lambda_i = number of i-edges, i = 2 .. kMaxEdgeSize.
class EdgeProfile {
 public:
  EdgeProfile() = default;
  // Pairs (edge size, count).
  EdgeProfile(std::initializer_list<std::pair<int, int>> entries);

  int count(int edge_size) const;
  EdgeProfile& set(int edge_size, int count);

  // sum (i - 1) lambda_i
  int magnitude() const;
  int edge_count() const;
  int max_edge() const;
  bool empty() const { return edge_count() == 0; }
  // prod lambda_i!
  BigInt factorial() const;

  // u^lambda
  Monomial to_monomial() const;
  static EdgeProfile from_monomial(const Monomial& m);

  // Parses "u2=2,u3=1" (comma or whitespace separated; "" is the empty profile).
  static EdgeProfile parse(std::string_view text);
  // "u2=2,u3=1"; "" when empty.
  std::string to_string() const;

  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
  friend auto operator<=>(const EdgeProfile&, const EdgeProfile&) = default;

 private:
  std::array<int, kMaxEdgeSize + 1> counts_{};
};

// Vertices 1..n; each edge is a bitmask with bit (v - 1) for vertex v.
using EdgeSet = std::uint32_t;
inline constexpr int kMaxVertices = 32;

// Labeled hypergraph. Edges are kept grouped by size (stable), so the
// position of an edge within its size class is its label. Duplicate edges are
// allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<EdgeSet> edges);
  // Vertex lists, 1-based.
  static Hypergraph from_lists(int n, const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return n_; }
  const std::vector<EdgeSet>& edges() const { return edges_; }
  std::vector<std::vector<int>> edge_lists() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  std::vector<EdgeSet> edges_;
};

EdgeProfile weight(const Hypergraph& h);
int edge_magnitude(const Hypergraph& h);

// Path-connectivity; false for n = 0.
bool is_connected(const Hypergraph& h);
// Connected and the vertex/edge incidence graph has no cycle.
bool is_hypertree(const Hypergraph& h);

// Text fixture format: first line n, then one edge per line as
// space-separated vertices. Blank lines and lines starting with '#' are
// ignored.
Hypergraph parse_hypergraph(std::string_view text);
std::string to_text(const Hypergraph& h);

}  // namespace hyperseries
