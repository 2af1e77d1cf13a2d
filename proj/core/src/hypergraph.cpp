#include "hyperseries/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperseries {

EdgeProfile::EdgeProfile(std::initializer_list<std::pair<int, int>> entries) {
  for (const auto& [size, count] : entries) set(size, this->count(size) + count);
}

int EdgeProfile::count(int edge_size) const {
  if (edge_size < 2 || edge_size > kMaxEdgeSize) return 0;
  return counts_[static_cast<std::size_t>(edge_size)];
}

EdgeProfile& EdgeProfile::set(int edge_size, int count) {
  if (edge_size < 2 || edge_size > kMaxEdgeSize) {
    throw std::invalid_argument("EdgeProfile: edge size " + std::to_string(edge_size) +
                                " outside [2, " + std::to_string(kMaxEdgeSize) + "]");
  }
  if (count < 0) throw std::invalid_argument("EdgeProfile: negative edge count");
  counts_[static_cast<std::size_t>(edge_size)] = count;
  return *this;
}

int EdgeProfile::magnitude() const {
  int total = 0;
  for (int i = 2; i <= kMaxEdgeSize; ++i) total += (i - 1) * count(i);
  return total;
}

int EdgeProfile::edge_count() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

int EdgeProfile::max_edge() const {
  for (int i = kMaxEdgeSize; i >= 2; --i) {
    if (count(i) != 0) return i;
  }
  return 0;
}

BigInt EdgeProfile::factorial() const {
  BigInt r = 1;
  for (int i = 2; i <= kMaxEdgeSize; ++i) r *= hyperseries::factorial(static_cast<unsigned>(count(i)));
  return r;
}

Monomial EdgeProfile::to_monomial() const {
  Monomial m;
  for (int i = 2; i <= kMaxEdgeSize; ++i) m.set(Variable::u(i), count(i));
  return m;
}

EdgeProfile EdgeProfile::from_monomial(const Monomial& m) {
  EdgeProfile p;
  for (int i = 2; i <= kMaxEdgeSize; ++i) p.set(i, m.u_deg(i));
  return p;
}

EdgeProfile EdgeProfile::parse(std::string_view text) {
  EdgeProfile p;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (item.size() < 4 || item[0] != 'u' || eq == std::string::npos) {
      throw std::invalid_argument("EdgeProfile: expected uI=COUNT, got '" + item + "'");
    }
    int size = 0;
    int count = 0;
    try {
      std::size_t used = 0;
      size = std::stoi(item.substr(1, eq - 1), &used);
      if (used != eq - 1) throw std::invalid_argument("size");
      count = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("count");
    } catch (const std::exception&) {
      throw std::invalid_argument("EdgeProfile: malformed entry '" + item + "'");
    }
    if (size < 2) {
      throw std::invalid_argument("EdgeProfile: edges must have at least two vertices ('" + item + "')");
    }
    p.set(size, p.count(size) + count);
  }
  return p;
}

std::string EdgeProfile::to_string() const {
  std::string s;
  for (int i = 2; i <= kMaxEdgeSize; ++i) {
    if (count(i) == 0) continue;
    if (!s.empty()) s += ',';
    s += "u" + std::to_string(i) + "=" + std::to_string(count(i));
  }
  return s;
}

Hypergraph::Hypergraph(int n, std::vector<EdgeSet> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("Hypergraph: vertex count outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  const EdgeSet all = n == kMaxVertices ? ~EdgeSet{0} : ((EdgeSet{1} << n) - 1);
  for (EdgeSet e : edges_) {
    if ((e & ~all) != 0) throw std::invalid_argument("Hypergraph: edge uses a vertex outside [n]");
    if (std::popcount(e) < 2) throw std::invalid_argument("Hypergraph: edges need at least two vertices");
  }
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](EdgeSet a, EdgeSet b) { return std::popcount(a) < std::popcount(b); });
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<EdgeSet> masks;
  for (const auto& list : edges) {
    EdgeSet mask = 0;
    for (int v : list) {
      if (v < 1 || v > n) throw std::invalid_argument("Hypergraph: vertex " + std::to_string(v) + " outside [n]");
      if (mask & (EdgeSet{1} << (v - 1))) throw std::invalid_argument("Hypergraph: repeated vertex in edge");
      mask |= EdgeSet{1} << (v - 1);
    }
    masks.push_back(mask);
  }
  return Hypergraph(n, std::move(masks));
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  for (EdgeSet e : edges_) {
    std::vector<int> list;
    for (int v = 1; v <= n_; ++v) {
      if (e & (EdgeSet{1} << (v - 1))) list.push_back(v);
    }
    out.push_back(std::move(list));
  }
  return out;
}

EdgeProfile weight(const Hypergraph& h) {
  EdgeProfile p;
  for (EdgeSet e : h.edges()) {
    const int size = std::popcount(e);
    p.set(size, p.count(size) + 1);
  }
  return p;
}

int edge_magnitude(const Hypergraph& h) {
  int total = 0;
  for (EdgeSet e : h.edges()) total += std::popcount(e) - 1;
  return total;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  // False when a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool is_connected(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n == 0) return false;
  // Grow the component of vertex 1 until no edge extends it.
  EdgeSet reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (EdgeSet e : h.edges()) {
      if ((e & reached) != 0 && (e & ~reached) != 0) {
        reached |= e;
        grew = true;
      }
    }
  }
  return std::popcount(reached) == n;
}

bool is_hypertree(const Hypergraph& h) {
  if (!is_connected(h)) return false;
  const int n = h.vertex_count();
  const auto& edges = h.edges();
  // Nodes 0..n-1 are vertices, n + j is edge j.
  DisjointSets sets(n + static_cast<int>(edges.size()));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    for (int v = 0; v < n; ++v) {
      if ((edges[j] & (EdgeSet{1} << v)) == 0) continue;
      if (!sets.unite(v, n + static_cast<int>(j))) return false;
    }
  }
  return true;
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<int> values;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || used == 0) {
        throw std::invalid_argument("hypergraph text: malformed token '" + tok + "'");
      }
      values.push_back(v);
    }
    if (n < 0) {
      if (values.size() != 1) throw std::invalid_argument("hypergraph text: first line must hold n");
      n = values[0];
    } else {
      edges.push_back(std::move(values));
    }
  }
  if (n < 0) throw std::invalid_argument("hypergraph text: missing vertex count");
  return Hypergraph::from_lists(n, edges);
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.vertex_count() << '\n';
  for (const auto& list : h.edge_lists()) {
    for (std::size_t i = 0; i < list.size(); ++i) os << (i ? " " : "") << list[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace hyperseries
