#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spex {

inline constexpr int kMaxVertices = 1024;

/// Undirected simple graph on vertices 0..n-1, adjacency stored as bit-packed
/// 64-bit rows. Values are cheap to copy at desk scale and safe to share
/// between threads once built; add_edge/remove_edge are for single-owner
/// construction code.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::length_error("Graph: vertex count out of range [0," +
                              std::to_string(kMaxVertices) + "]");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  int vertex_count() const { return n_; }
  int row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[idx(u) + (v >> 6)] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    bits_[idx(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[idx(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    bits_[idx(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[idx(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += popcount(bits_[idx(v) + w]);
    return d;
  }

  long long edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  int max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int m = n_;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
  }

  const std::uint64_t* row(int v) const {
    check_vertex(v);
    return bits_.data() + idx(v);
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
  }

  template <typename F>
  void for_each_neighbor(int v, F&& f) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bitsw = r[w];
      while (bitsw) {
        int b = ctz(bitsw);
        f(w * 64 + b);
        bitsw &= bitsw - 1;
      }
    }
  }

  /// Visits each edge once with u < v.
  template <typename F>
  void for_each_edge(F&& f) const {
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int v) {
        if (v > u) f(u, v);
      });
  }

  bool is_connected() const { return component_count() <= 1; }

  int component_count() const {
    if (n_ == 0) return 0;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      ++comps;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for_each_neighbor(v, [&](int u) {
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        });
      }
    }
    return comps;
  }

  bool operator==(const Graph& other) const = default;

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  static int popcount(std::uint64_t x) { return __builtin_popcountll(x); }
  static int ctz(std::uint64_t x) { return __builtin_ctzll(x); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("Graph: vertex id " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n_));
  }
  std::size_t idx(int v) const { return static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Class sizes of the balanced r-way split of n: (n mod r) classes of
/// ceil(n/r) followed by the rest of floor(n/r).
std::vector<int> turan_parts(int n, int r);

/// Complete multipartite graph; vertices of each class are consecutive,
/// classes laid out in the order given.
Graph complete_multipartite(std::span<const int> parts);
Graph complete_multipartite(const std::vector<int>& parts);

/// Balanced complete r-partite graph on n vertices.
Graph turan_graph(int n, int r);

/// Disjoint union of g and h plus all cross edges; g's vertices come first.
Graph join(const Graph& g, const Graph& h);

/// k vertex-disjoint copies of g; copy i occupies ids [i*|g|, (i+1)*|g|).
Graph disjoint_copies(const Graph& g, int k);

/// Join of a (k-1)-clique with the balanced r-partite graph on n-k+1
/// vertices; the k-1 dominating vertices take ids 0..k-2.
Graph clique_join_turan(int n, int k, int r);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
};

/// Induced subgraph on V(g) minus the given vertices, re-indexed contiguously.
InducedSubgraph delete_vertices(const Graph& g, std::span<const int> to_delete);

struct Matching {
  std::vector<std::pair<int, int>> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

/// Exact maximum matching by branch and bound with a greedy lower bound.
Matching max_matching(const Graph& g);

struct PartitionLabeling {
  int r = 0;
  std::vector<int> label;       // per-vertex class index in [0, r)
  std::vector<int> class_sizes;

  void validate(int n) const;
};

/// Natural labeling of a complete multipartite layout (class i consecutive).
PartitionLabeling multipartite_labeling(std::span<const int> parts);

/// Number of edges whose endpoints carry different labels.
long long crossing_edges(const Graph& g, const PartitionLabeling& p);

}  // namespace spex
