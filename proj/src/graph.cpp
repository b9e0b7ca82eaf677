#include "spex/graph.hpp"

#include <algorithm>
#include <numeric>

namespace spex {

std::vector<int> turan_parts(int n, int r) {
  if (r < 1) throw std::invalid_argument("turan_parts: r must be >= 1");
  if (n < 0) throw std::invalid_argument("turan_parts: n must be >= 0");
  std::vector<int> parts(r);
  int q = n / r, rem = n % r;
  for (int i = 0; i < r; ++i) parts[i] = q + (i < rem ? 1 : 0);
  return parts;
}

Graph complete_multipartite(std::span<const int> parts) {
  long long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("complete_multipartite: negative class size");
    total += p;
  }
  if (total > kMaxVertices)
    throw std::length_error("complete_multipartite: capacity exceeded");
  Graph g(static_cast<int>(total));
  int offset_i = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int offset_j = offset_i + parts[i];
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = offset_i; u < offset_i + parts[i]; ++u)
        for (int v = offset_j; v < offset_j + parts[j]; ++v) g.add_edge(u, v);
      offset_j += parts[j];
    }
    offset_i += parts[i];
  }
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  return complete_multipartite(std::span<const int>(parts));
}

Graph turan_graph(int n, int r) {
  return complete_multipartite(turan_parts(n, r));
}

Graph join(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng + nh > kMaxVertices) throw std::length_error("join: capacity exceeded");
  Graph out(ng + nh);
  g.for_each_edge([&](int u, int v) { out.add_edge(u, v); });
  h.for_each_edge([&](int u, int v) { out.add_edge(ng + u, ng + v); });
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  return out;
}

Graph disjoint_copies(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("disjoint_copies: k must be >= 0");
  long long total = static_cast<long long>(g.vertex_count()) * k;
  if (total > kMaxVertices)
    throw std::length_error("disjoint_copies: capacity exceeded");
  Graph out(static_cast<int>(total));
  for (int i = 0; i < k; ++i) {
    int base = i * g.vertex_count();
    g.for_each_edge([&](int u, int v) { out.add_edge(base + u, base + v); });
  }
  return out;
}

Graph clique_join_turan(int n, int k, int r) {
  if (k < 1) throw std::invalid_argument("clique_join_turan: k must be >= 1");
  if (n < k - 1) throw std::invalid_argument("clique_join_turan: n must be >= k-1");
  return join(Graph::complete(k - 1), turan_graph(n - k + 1, r));
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const int> to_delete) {
  int n = g.vertex_count();
  std::vector<char> drop(n, 0);
  for (int v : to_delete) {
    if (v < 0 || v >= n)
      throw std::out_of_range("delete_vertices: vertex id out of range");
    drop[v] = 1;
  }
  InducedSubgraph out;
  out.old_to_new.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!drop[v]) out.old_to_new[v] = next++;
  out.graph = Graph(next);
  g.for_each_edge([&](int u, int v) {
    if (!drop[u] && !drop[v]) out.graph.add_edge(out.old_to_new[u], out.old_to_new[v]);
  });
  return out;
}

namespace {

struct MatchingSearch {
  const Graph* g;
  int n;
  std::vector<char> avail;
  std::vector<std::pair<int, int>> current, best;

  void run() {
    // Greedy maximal matching seeds the incumbent.
    std::vector<char> used(n, 0);
    g->for_each_edge([&](int u, int v) {
      if (!used[u] && !used[v]) {
        used[u] = used[v] = 1;
        best.emplace_back(u, v);
      }
    });
    avail.assign(n, 1);
    dfs();
  }

  void dfs() {
    int v = -1;
    for (int i = 0; i < n; ++i) {
      if (!avail[i]) continue;
      bool has_nb = false;
      g->for_each_neighbor(i, [&](int u) { has_nb = has_nb || avail[u]; });
      if (has_nb) {
        v = i;
        break;
      }
    }
    if (v < 0) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int live = 0;
    for (int i = 0; i < n; ++i) live += avail[i];
    if (current.size() + live / 2 <= best.size()) return;

    avail[v] = 0;
    std::vector<int> nbs;
    g->for_each_neighbor(v, [&](int u) {
      if (avail[u]) nbs.push_back(u);
    });
    for (int u : nbs) {
      avail[u] = 0;
      current.emplace_back(v, u);
      dfs();
      current.pop_back();
      avail[u] = 1;
    }
    dfs();  // v left unmatched
    avail[v] = 1;
  }
};

}  // namespace

Matching max_matching(const Graph& g) {
  MatchingSearch s;
  s.g = &g;
  s.n = g.vertex_count();
  s.run();
  return Matching{std::move(s.best)};
}

void PartitionLabeling::validate(int n) const {
  if (r < 1) throw std::invalid_argument("PartitionLabeling: r must be >= 1");
  if (static_cast<int>(label.size()) != n)
    throw std::invalid_argument("PartitionLabeling: label size mismatch");
  for (int l : label)
    if (l < 0 || l >= r)
      throw std::out_of_range("PartitionLabeling: label out of range");
  if (!class_sizes.empty()) {
    if (static_cast<int>(class_sizes.size()) != r)
      throw std::invalid_argument("PartitionLabeling: class_sizes size mismatch");
    long long sum = std::accumulate(class_sizes.begin(), class_sizes.end(), 0LL);
    if (sum != n) throw std::invalid_argument("PartitionLabeling: class_sizes must sum to n");
  }
}

PartitionLabeling multipartite_labeling(std::span<const int> parts) {
  PartitionLabeling p;
  p.r = static_cast<int>(parts.size());
  p.class_sizes.assign(parts.begin(), parts.end());
  for (int i = 0; i < p.r; ++i)
    for (int j = 0; j < parts[i]; ++j) p.label.push_back(i);
  return p;
}

long long crossing_edges(const Graph& g, const PartitionLabeling& p) {
  p.validate(g.vertex_count());
  long long crossing = 0;
  g.for_each_edge([&](int u, int v) {
    if (p.label[u] != p.label[v]) ++crossing;
  });
  return crossing;
}

}  // namespace spex
