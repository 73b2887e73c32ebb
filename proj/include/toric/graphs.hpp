#pragma once

// Simple graphs, their incidence configurations and the graph-specific
// length and saturation criteria.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/configuration.hpp"
#include "toric/errors.hpp"
#include "toric/gf.hpp"
#include "toric/zlat.hpp"

namespace toric {

/// Vertices 0..n-1; edges stored 0-based with i < j.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n) {
    if (edges.empty()) fail(ErrorCode::InvalidArgument, "graph needs at least one edge");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges) {
      if (a >= n || b >= n)
        fail(ErrorCode::InvalidArgument, "edge endpoint outside vertex range");
      if (a == b) fail(ErrorCode::InvalidArgument, "loops are not allowed");
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second)
        fail(ErrorCode::InvalidArgument, "duplicate edge {" + std::to_string(a + 1) + "," +
                                             std::to_string(b + 1) + "}");
      edges_.push_back({a, b});
    }
  }

  std::size_t n() const { return n_; }
  std::size_t s() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  static Graph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
  }
  static Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
  }
  static Graph path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
  }
  /// Vertex-disjoint union, vertices of `b` shifted after those of `a`.
  static Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges_;
    for (auto [i, j] : b.edges_) e.push_back({i + a.n_, j + a.n_});
    return Graph(a.n_ + b.n_, e);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// {e_i + e_j : {i,j} an edge}, in edge order.
inline PointConfiguration incidence_configuration(const Graph& g) {
  std::vector<IntVec> v;
  for (auto [a, b] : g.edges()) {
    IntVec x(g.n(), 0);
    x[a] = x[b] = 1;
    v.push_back(std::move(x));
  }
  return PointConfiguration(g.n(), std::move(v));
}

struct GraphClass {
  std::size_t components = 0;
  std::size_t c0 = 0;  // bipartite components (isolated vertices included)
  std::size_t c1 = 0;  // non-bipartite components
  bool connected() const { return components == 1; }
  bool bipartite() const { return c1 == 0; }
};

/// Breadth-first 2-coloring in vertex order.
inline GraphClass classify(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.n());
  for (auto [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  GraphClass c;
  std::vector<int> color(g.n(), -1);
  for (std::size_t start = 0; start < g.n(); ++start) {
    if (color[start] >= 0) continue;
    ++c.components;
    bool odd = false;
    std::queue<std::size_t> queue;
    queue.push(start);
    color[start] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      for (auto w : adj[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          odd = true;
        }
      }
    }
    (odd ? c.c1 : c.c0)++;
  }
  return c;
}

/// Z^n / ZA ≅ Z^{c0} x Z_2^{c1}, checked against the Smith form.
inline bool structure_theorem_check(const Graph& g) {
  const auto cls = classify(g);
  const auto A = incidence_configuration(g);
  if (quotient_free_rank(A.vectors(), g.n()) != cls.c0) return false;
  const auto tors = torsion_invariants(A.vectors(), g.n());
  if (tors.size() != cls.c1) return false;
  return std::all_of(tors.begin(), tors.end(), [](const BigInt& d) { return d == 2; });
}

/// |X| for connected graphs: (q-1)^{n-1} non-bipartite, (q-1)^{n-2} bipartite.
inline std::optional<std::uint64_t> expected_length(const Graph& g, std::uint64_t q) {
  const auto cls = classify(g);
  if (!cls.connected()) return std::nullopt;
  const std::size_t e = cls.bipartite() ? g.n() - 2 : g.n() - 1;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= (q - 1);
  return r;
}

/// Saturation route equals I(X) iff c1 <= 1, or char K = 2.
inline bool graph_saturation_equality(const Graph& g, const FiniteField& f) {
  return classify(g).c1 <= 1 || f.p() == 2;
}

}  // namespace toric
