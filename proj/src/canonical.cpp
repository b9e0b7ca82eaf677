#include "spex/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace spex {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smaller id as representative
  }
};

// Ordered partition of the vertex set. Cells keep their relative order under
// refinement, which is what makes the leaf certificates label-invariant.
using Cells = std::vector<std::vector<int>>;

struct CanonSearch {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};
  std::string best_cert;
  std::vector<int> best_lab;
  bool have_best = false;
  std::string first_cert;
  std::vector<int> first_lab;
  bool have_first = false;
  UnionFind orbits{0};
  std::vector<std::vector<int>> generators;
  long long aut_found = 0;

  explicit CanonSearch(const Graph& g) : orbits(g.vertex_count()) {
    n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      adj[v] = 0;
      g.for_each_neighbor(v, [&](int u) { adj[v] |= std::uint64_t{1} << u; });
    }
  }

  // Equitable refinement: split cells by neighbor counts against every cell
  // until stable. Split order depends only on cell order and counts, so the
  // result is isomorphism-invariant.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint64_t> masks(cells.size(), 0);
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (int v : cells[i]) masks[i] |= std::uint64_t{1} << v;
      for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (cells[ci].size() < 2) continue;
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cells[ci].size());
        for (int v : cells[ci]) {
          std::vector<int> key(cells.size());
          for (std::size_t s = 0; s < cells.size(); ++s)
            key[s] = Graph::popcount(adj[v] & masks[s]);
          keyed.emplace_back(std::move(key), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        bool uniform = true;
        for (std::size_t i = 1; i < keyed.size(); ++i)
          if (keyed[i].first != keyed[0].first) {
            uniform = false;
            break;
          }
        if (uniform) continue;
        Cells split;
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<int> cell;
            for (std::size_t j = start; j < i; ++j) cell.push_back(keyed[j].second);
            std::sort(cell.begin(), cell.end());
            split.push_back(std::move(cell));
            start = i;
          }
        }
        Cells next;
        next.reserve(cells.size() + split.size() - 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i == ci)
            for (auto& c : split) next.push_back(std::move(c));
          else
            next.push_back(std::move(cells[i]));
        }
        cells = std::move(next);
        changed = true;
      }
    }
  }

  std::string certificate(const std::vector<int>& lab, std::vector<int>& inv) const {
    inv.assign(n, 0);
    for (int v = 0; v < n; ++v) inv[lab[v]] = v;
    std::string cert;
    cert.reserve(2 + (n * (n - 1) / 2 + 7) / 8);
    cert.push_back(static_cast<char>(n & 0xff));
    cert.push_back(static_cast<char>((n >> 8) & 0xff));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int bit = (adj[inv[i]] >> inv[j]) & 1;
        acc = (acc << 1) | bit;
        if (++nbits == 8) {
          cert.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    if (nbits) cert.push_back(static_cast<char>(acc << (8 - nbits)));
    return cert;
  }

  void record_automorphism(const std::vector<int>& lab_a, const std::vector<int>& lab_b) {
    // sigma maps each vertex of leaf a to the vertex of leaf b occupying the
    // same canonical position.
    std::vector<int> inv_b(n), sigma(n);
    for (int v = 0; v < n; ++v) inv_b[lab_b[v]] = v;
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      sigma[v] = inv_b[lab_a[v]];
      identity = identity && sigma[v] == v;
      orbits.unite(v, sigma[v]);
    }
    if (!identity) generators.push_back(std::move(sigma));
    ++aut_found;
  }

  // Merges into uf the generators found since the last call that fix every
  // prefix vertex pointwise; candidates equivalent under the resulting
  // subgroup lead to subtrees that are relabelings of explored ones.
  void absorb_stabilizer_generators(const std::vector<int>& prefix, UnionFind& uf,
                                    std::size_t& applied) const {
    for (; applied < generators.size(); ++applied) {
      const auto& sigma = generators[applied];
      bool fixes = true;
      for (int p : prefix)
        if (sigma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) uf.unite(v, sigma[v]);
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> lab(n);
    for (std::size_t i = 0; i < cells.size(); ++i) lab[cells[i][0]] = static_cast<int>(i);
    std::vector<int> inv;
    std::string cert = certificate(lab, inv);
    if (!have_first) {
      first_cert = cert;
      first_lab = lab;
      have_first = true;
      best_cert = cert;
      best_lab = lab;
      have_best = true;
      return;
    }
    if (cert == first_cert) record_automorphism(first_lab, lab);
    if (cert < best_cert) {
      best_cert = cert;
      best_lab = lab;
    } else if (cert == best_cert && cert != first_cert) {
      record_automorphism(best_lab, lab);
    }
  }

  void dfs(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    int target = -1;
    std::size_t target_size = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() < 2) continue;
      if (target < 0 || cells[i].size() < target_size) {
        target = static_cast<int>(i);
        target_size = cells[i].size();
      }
    }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    UnionFind stab(n);
    std::size_t gens_applied = 0;
    for (int v : cells[target]) {
      // Prune candidates equivalent to an already-explored sibling under
      // automorphisms fixing the individualized prefix; sibling subtrees
      // keep discovering generators, so the orbit structure is refreshed
      // incrementally.
      if (!tried.empty()) {
        absorb_stabilizer_generators(prefix, stab, gens_applied);
        bool skip = false;
        for (int u : tried)
          if (stab.find(u) == stab.find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[i])
            if (u != v) rest.push_back(u);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      prefix.push_back(v);
      dfs(std::move(child), prefix);
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalResult canonical_full(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxCanonicalVertices)
    throw std::length_error("canonical_full: capacity is 64 vertices");
  CanonicalResult out;
  if (n == 0) {
    out.form = std::string("\0\0", 2);
    return out;
  }
  CanonSearch search(g);
  Cells root(1);
  root[0].resize(n);
  for (int i = 0; i < n; ++i) root[0][i] = i;
  std::vector<int> prefix;
  search.dfs(std::move(root), prefix);
  out.form = search.best_cert;
  out.labeling = search.best_lab;
  out.orbit.resize(n);
  for (int v = 0; v < n; ++v) out.orbit[v] = search.orbits.find(v);
  out.automorphism_count_hint = search.aut_found;
  return out;
}

std::string canonical_form(const Graph& g) { return canonical_full(g).form; }

bool isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::string form_to_hex(const std::string& form) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(form.size() * 2);
  for (unsigned char c : form) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace spex
