#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyperseries/hypergraph.hpp"
#include "hyperseries/oracle.hpp"

using namespace hyperseries;

namespace {

Hypergraph sample_hypergraph() {
  return Hypergraph::from_lists(5, {{1, 2}, {1, 2}, {3, 5}, {4, 5}, {1, 3, 4}, {1, 3, 4}, {3, 4, 5}});
}

// Cycle search straight from the walk definition: distinct edges, distinct
// vertices except the endpoints, at least two edges.
bool extend_cycle(const Hypergraph& h, int start, int at, unsigned used_edges, unsigned used_vertices,
                  int length) {
  const auto& edges = h.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (used_edges & (1u << e)) continue;
    if (!(edges[e] >> (at - 1) & 1u)) continue;
    for (int v = 1; v <= h.vertex_count(); ++v) {
      if (v == at || !(edges[e] >> (v - 1) & 1u)) continue;
      if (v == start && length + 1 >= 2) return true;
      if (used_vertices & (1u << (v - 1))) continue;
      if (extend_cycle(h, start, v, used_edges | (1u << e), used_vertices | (1u << (v - 1)), length + 1)) {
        return true;
      }
    }
  }
  return false;
}

bool has_cycle(const Hypergraph& h) {
  for (int v = 1; v <= h.vertex_count(); ++v) {
    if (extend_cycle(h, v, v, 0, 1u << (v - 1), 0)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("sample hypergraph with repeated edges") {
  const Hypergraph h = sample_hypergraph();
  CHECK(weight(h) == EdgeProfile{{2, 4}, {3, 3}});
  CHECK(weight(h).to_string() == "u2=4,u3=3");
  CHECK(edge_magnitude(h) == 10);
  CHECK(is_connected(h));
  CHECK_FALSE(is_hypertree(h));
  CHECK(has_cycle(h));
}

TEST_CASE("sample fixture parses to the same hypergraph") {
  std::ifstream in(HYPERSERIES_FIXTURE_DIR "/sample_hypergraph.txt");
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  const Hypergraph h = parse_hypergraph(buf.str());
  CHECK(h == sample_hypergraph());
  CHECK(parse_hypergraph(to_text(h)) == h);
}

TEST_CASE("small weights and magnitudes") {
  const Hypergraph lone(1, {});
  CHECK(weight(lone).empty());
  CHECK(edge_magnitude(lone) == 0);
  CHECK(is_connected(lone));
  CHECK(is_hypertree(lone));
  const Hypergraph tri = Hypergraph::from_lists(3, {{1, 2, 3}});
  CHECK(weight(tri).count(3) == 1);
  CHECK(edge_magnitude(tri) == 2);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(Hypergraph::from_lists(3, {{1, 2}})));
  CHECK_FALSE(is_connected(Hypergraph::from_lists(3, {{1, 2}, {1, 2}})));
  CHECK(is_connected(Hypergraph::from_lists(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_connected(Hypergraph(0, {})));
}

TEST_CASE("hypertree test") {
  CHECK(is_hypertree(Hypergraph::from_lists(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_hypertree(Hypergraph::from_lists(2, {{1, 2}, {1, 2}})));
  CHECK_FALSE(is_hypertree(Hypergraph::from_lists(3, {{1, 2}, {2, 3}, {1, 3}})));
  CHECK_FALSE(is_hypertree(Hypergraph::from_lists(4, {{1, 2, 3}, {2, 3, 4}})));
  CHECK(is_hypertree(Hypergraph::from_lists(5, {{1, 2, 3}, {3, 4, 5}})));
  CHECK_FALSE(is_hypertree(Hypergraph::from_lists(4, {{1, 2}})));
}

TEST_CASE("incidence acyclicity agrees with the walk definition of a cycle") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& profile : profiles_up_to(n, 4, n)) {
      if (profile.edge_count() > 5) continue;
      for_each_hypergraph(n, profile, {}, [&](const Hypergraph& h) {
        CHECK(is_hypertree(h) == (is_connected(h) && !has_cycle(h)));
      });
    }
  }
}

TEST_CASE("edge profile parsing") {
  CHECK(EdgeProfile::parse("u2=2,u3=1") == EdgeProfile{{2, 2}, {3, 1}});
  CHECK(EdgeProfile::parse("u3=1 u2=2") == EdgeProfile{{2, 2}, {3, 1}});
  CHECK(EdgeProfile::parse("").empty());
  CHECK(EdgeProfile{{2, 2}, {3, 1}}.magnitude() == 4);
  CHECK(EdgeProfile{{2, 2}, {3, 3}}.factorial() == 12);
  CHECK_THROWS_AS(EdgeProfile::parse("u1=2"), std::invalid_argument);
  CHECK_THROWS_AS(EdgeProfile::parse("u2"), std::invalid_argument);
  CHECK_THROWS_AS(EdgeProfile::parse("v2=1"), std::invalid_argument);
  const EdgeProfile p{{2, 1}, {4, 2}};
  CHECK(EdgeProfile::parse(p.to_string()) == p);
  CHECK(EdgeProfile::from_monomial(p.to_monomial()) == p);
}

TEST_CASE("invalid hypergraphs are rejected") {
  CHECK_THROWS_AS(Hypergraph::from_lists(3, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_lists(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("2\n1 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph(""), std::invalid_argument);
}
