#include "spex/cliques.hpp"

#include <algorithm>
#include <unordered_set>

#include "spex/vertex_set.hpp"

namespace spex {

namespace {

// Lexicographic fixed-size clique DFS over a candidate mask, with per-depth
// scratch sets to keep the hot loop allocation-free. The callback gets each
// clique as a sorted vertex list; returning false aborts.
struct CliqueDfs {
  const Graph* g;
  int size;
  std::vector<VertexSet> level;  // candidate scratch per depth
  std::vector<int> current;

  CliqueDfs(const Graph& graph, int s) : g(&graph), size(s) {
    level.assign(s + 1, VertexSet(graph.vertex_count()));
  }

  template <typename Cb>
  bool run(const VertexSet& candidates, Cb&& cb) {
    level[0] = candidates;
    current.clear();
    return walk(0, cb);
  }

  template <typename Cb>
  bool walk(int depth, Cb&& cb) {
    if (depth == size) return cb(current);
    const VertexSet& candidates = level[depth];
    int need = size - depth;
    int remaining = candidates.count();
    int v = candidates.first_at_least(0);
    while (v >= 0 && remaining >= need) {
      VertexSet& next = level[depth + 1];
      next = candidates;
      next.and_row(g->row(v));
      // only extend above v to keep the output lexicographic
      next.clear_below(v + 1);
      current.push_back(v);
      if (!walk(depth + 1, cb)) {
        current.pop_back();
        return false;
      }
      current.pop_back();
      --remaining;
      v = candidates.first_at_least(v + 1);
    }
    return true;
  }
};

template <typename Cb>
bool clique_dfs(const Graph& g, int size, const VertexSet& candidates, Cb&& cb) {
  CliqueDfs dfs(g, size);
  return dfs.run(candidates, cb);
}

std::optional<std::vector<int>> first_clique_in(const Graph& g, int size,
                                                const VertexSet& candidates) {
  std::optional<std::vector<int>> out;
  clique_dfs(g, size, candidates, [&](const std::vector<int>& c) {
    out = c;
    return false;
  });
  return out;
}

}  // namespace

CliqueEnumeration enumerate_cliques(const Graph& g, int size, long long cap) {
  if (size < 1) throw std::invalid_argument("enumerate_cliques: size must be >= 1");
  if (cap < 1) throw std::invalid_argument("enumerate_cliques: cap must be >= 1");
  CliqueEnumeration out;
  clique_dfs(g, size, VertexSet::all(g.vertex_count()),
             [&](const std::vector<int>& c) {
               out.cliques.push_back(c);
               if (static_cast<long long>(out.cliques.size()) >= cap) {
                 out.truncated = true;
                 return false;
               }
               return true;
             });
  return out;
}

namespace {

// Greedy hitting set over a clique list: every packed clique spends one
// hitter, so hitting sets both bound packings and tell the greedy passes
// which cliques burn scarce vertices.
std::vector<char> greedy_hitters(int n, const std::vector<std::vector<int>>& cliques) {
  std::vector<char> is_hitter(n, 0), hit(cliques.size(), 0);
  std::size_t remaining = cliques.size();
  while (remaining > 0) {
    std::vector<int> freq(n, 0);
    for (std::size_t i = 0; i < cliques.size(); ++i)
      if (!hit[i])
        for (int v : cliques[i]) ++freq[v];
    int best_v = 0;
    for (int v = 1; v < n; ++v)
      if (freq[v] > freq[best_v]) best_v = v;
    is_hitter[best_v] = 1;
    for (std::size_t i = 0; i < cliques.size(); ++i)
      if (!hit[i]) {
        bool touches = false;
        for (int v : cliques[i]) touches = touches || v == best_v;
        if (touches) {
          hit[i] = 1;
          --remaining;
        }
      }
  }
  return is_hitter;
}

// Stable-sorts cliques so the ones avoiding hitting-set vertices come first;
// a lexicographic greedy otherwise burns several scarce vertices on its first
// picks and misses easy packings.
void sort_by_hitting_load(int n, std::vector<std::vector<int>>& cliques) {
  std::vector<char> is_hitter = greedy_hitters(n, cliques);
  std::vector<int> load(cliques.size(), 0);
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (int v : cliques[i]) load[i] += is_hitter[v];
  std::vector<int> order(cliques.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return load[a] < load[b]; });
  std::vector<std::vector<int>> sorted;
  sorted.reserve(cliques.size());
  for (int i : order) sorted.push_back(std::move(cliques[i]));
  cliques = std::move(sorted);
}

// Exact branch-and-bound set packing over a fixed base clique list, reusable
// across queries that add a small delta list and/or exclude base cliques
// through one edge or one vertex. Clique ids: [0, delta) then base.
class PackingEngine {
 public:
  void build(const Graph& g, int clique_size, std::vector<std::vector<int>> base) {
    n_ = g.vertex_count();
    words_ = (n_ + 63) / 64;
    clique_size_ = clique_size;
    base_verts_ = std::move(base);
    base_masks_.assign(base_verts_.size() * words_, 0);
    std::vector<int> counts(n_ + 1, 0);
    for (std::size_t i = 0; i < base_verts_.size(); ++i)
      for (int v : base_verts_[i]) {
        base_masks_[i * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        ++counts[v + 1];
      }
    csr_start_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) csr_start_[v + 1] = csr_start_[v] + counts[v + 1];
    csr_data_.assign(csr_start_[n_], 0);
    std::vector<int> cursor(csr_start_.begin(), csr_start_.end() - 1);
    for (std::size_t i = 0; i < base_verts_.size(); ++i)
      for (int v : base_verts_[i]) csr_data_[cursor[v]++] = static_cast<int>(i);
    rank_.resize(n_);
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int da = g.degree(a), db = g.degree(b);
      return da != db ? da > db : a < b;
    });
    for (int i = 0; i < n_; ++i) rank_[order[i]] = i;
  }

  std::optional<std::vector<std::vector<int>>> solve(
      int k, const std::vector<std::vector<int>>& delta, int excl_u = -1,
      int excl_v = -1) const {
    if (static_cast<long long>(k) * clique_size_ > n_) return std::nullopt;
    Run run{*this, k, delta, excl_u, excl_v};
    run.delta_masks.assign(delta.size() * words_, 0);
    for (std::size_t i = 0; i < delta.size(); ++i)
      for (int v : delta[i])
        run.delta_masks[i * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    run.search(VertexSet::all(n_), 0);
    return std::move(run.found);
  }

 private:
  struct Run {
    const PackingEngine& e;
    int k;
    const std::vector<std::vector<int>>& delta;
    int excl_u, excl_v;
    std::vector<std::uint64_t> delta_masks;
    std::vector<int> chain;
    std::optional<std::vector<std::vector<int>>> found;
    std::unordered_set<std::string> dead;
    static constexpr std::size_t kMemoCap = 1 << 22;

    int delta_count() const { return static_cast<int>(delta.size()); }
    int total() const { return delta_count() + static_cast<int>(e.base_verts_.size()); }

    const std::vector<int>& verts(int id) const {
      return id < delta_count() ? delta[id] : e.base_verts_[id - delta_count()];
    }
    const std::uint64_t* mask(int id) const {
      return id < delta_count()
                 ? &delta_masks[std::size_t(id) * e.words_]
                 : &e.base_masks_[std::size_t(id - delta_count()) * e.words_];
    }

    bool excluded(int id) const {
      if (id < delta_count() || excl_u < 0) return false;  // delta is pre-filtered
      const std::uint64_t* m = mask(id);
      bool has_u = (m[excl_u >> 6] >> (excl_u & 63)) & 1u;
      if (excl_v < 0) return has_u;
      bool has_v = (m[excl_v >> 6] >> (excl_v & 63)) & 1u;
      return has_u && has_v;
    }

    bool fits(const VertexSet& avail, int id) const {
      const std::uint64_t* m = mask(id);
      const std::uint64_t* a = avail.words().data();
      for (int w = 0; w < e.words_; ++w)
        if (m[w] & ~a[w]) return false;
      return true;
    }

    std::string key(const VertexSet& avail, int taken) const {
      std::string s(reinterpret_cast<const char*>(avail.words().data()),
                    avail.words().size() * sizeof(std::uint64_t));
      s.push_back(static_cast<char>(taken));
      return s;
    }

    void record(const std::vector<int>& ids) {
      std::vector<std::vector<int>> packing;
      for (int id : ids) packing.push_back(verts(id));
      found = std::move(packing);
    }

    void search(const VertexSet& avail, int taken) {
      if (found) return;
      if (taken == k) {
        record(chain);
        return;
      }
      int need = k - taken;
      if (avail.count() < need * e.clique_size_) return;

      // One pass over the clique list: greedy disjoint completion (an early
      // exit when it succeeds) while collecting the alive cliques.
      std::vector<int> alive;
      {
        VertexSet pool = avail;
        std::vector<int> picks;
        for (int id = 0; id < total(); ++id) {
          if (excluded(id) || !fits(avail, id)) continue;
          alive.push_back(id);
          if (static_cast<int>(picks.size()) < need && fits(pool, id)) {
            picks.push_back(id);
            pool.and_not_raw(mask(id));
          }
        }
        if (static_cast<int>(picks.size()) == need) {
          std::vector<int> ids = chain;
          ids.insert(ids.end(), picks.begin(), picks.end());
          record(ids);
          return;
        }
      }
      if (static_cast<int>(alive.size()) < need) return;

      std::string memo_key = key(avail, taken);
      if (dead.contains(memo_key)) return;

      // Any hitting set of the alive cliques bounds the packing: disjoint
      // cliques must use distinct hitters. Greedy gives a valid (not
      // minimum) hitting set, which already decides structured instances.
      std::vector<int> hitters;
      {
        std::vector<char> hit(alive.size(), 0);
        std::size_t remaining = alive.size();
        while (remaining > 0 && static_cast<int>(hitters.size()) <= need) {
          std::vector<int> freq(e.n_, 0);
          for (std::size_t i = 0; i < alive.size(); ++i)
            if (!hit[i])
              for (int v : verts(alive[i])) ++freq[v];
          int best_v = 0;
          for (int v = 1; v < e.n_; ++v)
            if (freq[v] > freq[best_v]) best_v = v;
          hitters.push_back(best_v);
          for (std::size_t i = 0; i < alive.size(); ++i)
            if (!hit[i]) {
              const std::uint64_t* m = mask(alive[i]);
              if ((m[best_v >> 6] >> (best_v & 63)) & 1u) {
                hit[i] = 1;
                --remaining;
              }
            }
        }
        if (remaining == 0 && static_cast<int>(hitters.size()) < need) {
          if (dead.size() < kMemoCap) dead.insert(memo_key);
          return;
        }
        if (remaining > 0) hitters.clear();  // hitting set larger than need + 1
      }

      if (static_cast<int>(hitters.size()) == need) {
        // Tight case: `need` disjoint cliques against a hitting set of size
        // `need` use exactly one hitter each and every hitter is used. Only
        // cliques meeting the hitting set once can be packed; branch on the
        // hitter with the fewest of them. No discard branch exists here.
        std::vector<char> in_h(e.n_, 0);
        for (int h : hitters) in_h[h] = 1;
        std::vector<std::vector<int>> exclusive(hitters.size());
        for (int id : alive) {
          int count = 0, which = -1;
          for (int v : verts(id))
            if (in_h[v]) {
              ++count;
              which = v;
            }
          if (count == 1)
            for (std::size_t hi = 0; hi < hitters.size(); ++hi)
              if (hitters[hi] == which) exclusive[hi].push_back(id);
        }
        std::size_t pick = 0;
        for (std::size_t hi = 1; hi < hitters.size(); ++hi)
          if (exclusive[hi].size() < exclusive[pick].size()) pick = hi;
        if (exclusive[pick].empty()) {
          if (dead.size() < kMemoCap) dead.insert(memo_key);
          return;
        }
        for (int id : exclusive[pick]) {
          VertexSet next = avail;
          next.and_not_raw(mask(id));
          chain.push_back(id);
          search(next, taken + 1);
          chain.pop_back();
          if (found) return;
        }
        if (dead.size() < kMemoCap) dead.insert(memo_key);
        return;
      }

      // Branch on the best-ranked available vertex that still lies in a
      // clique: one of its cliques joins the packing or the vertex is unused.
      int branch_v = -1;
      for (int id : alive)
        for (int v : verts(id))
          if (branch_v < 0 || e.rank_[v] < e.rank_[branch_v]) branch_v = v;

      for (int id = 0; id < delta_count(); ++id) {
        if (!mask_has(mask(id), branch_v) || !fits(avail, id)) continue;
        VertexSet next = avail;
        next.and_not_raw(mask(id));
        chain.push_back(id);
        search(next, taken + 1);
        chain.pop_back();
        if (found) return;
      }
      for (int di = e.csr_start_[branch_v]; di < e.csr_start_[branch_v + 1]; ++di) {
        int id = e.csr_data_[di] + delta_count();
        if (excluded(id) || !fits(avail, id)) continue;
        VertexSet next = avail;
        next.and_not_raw(mask(id));
        chain.push_back(id);
        search(next, taken + 1);
        chain.pop_back();
        if (found) return;
      }
      VertexSet next = avail;
      next.reset(branch_v);
      search(next, taken);
      if (found) return;

      if (dead.size() < kMemoCap) dead.insert(memo_key);
    }

    static bool mask_has(const std::uint64_t* m, int v) {
      return (m[v >> 6] >> (v & 63)) & 1u;
    }
  };

  int n_ = 0, words_ = 0, clique_size_ = 0;
  std::vector<std::vector<int>> base_verts_;
  std::vector<std::uint64_t> base_masks_;
  std::vector<int> csr_start_, csr_data_;
  std::vector<int> rank_;
};

// Streaming fallback for graphs whose clique list blows past the cap: the
// same vertex branching, with cliques through the branch vertex enumerated
// on demand instead of materialized.
struct StreamingPackingSearch {
  const Graph* g = nullptr;
  int n = 0, k = 0, clique_size = 0;
  std::vector<int> rank;
  std::vector<std::vector<int>> chain;
  std::optional<std::vector<std::vector<int>>> found;

  void search(VertexSet avail, int taken) {
    if (found) return;
    if (taken == k) {
      found = chain;
      return;
    }
    if (avail.count() < (k - taken) * clique_size) return;

    // Scan available vertices in rank order. One that extends to no clique
    // inside avail can never join a packing, so it is dropped outright; the
    // first that does extend becomes the branch vertex.
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
      if (avail.test(v)) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return rank[a] < rank[b]; });
    int branch_v = -1;
    for (int v : order) {
      VertexSet cand = avail;
      cand.and_row(g->row(v));
      if (first_clique_in(*g, clique_size - 1, cand)) {
        branch_v = v;
        break;
      }
      avail.reset(v);
    }
    if (branch_v < 0) return;
    if (avail.count() < (k - taken) * clique_size) return;

    VertexSet cand = avail;
    cand.and_row(g->row(branch_v));
    clique_dfs(*g, clique_size - 1, cand, [&](const std::vector<int>& rest) {
      std::vector<int> clique;
      clique.push_back(branch_v);
      clique.insert(clique.end(), rest.begin(), rest.end());
      std::sort(clique.begin(), clique.end());
      VertexSet next = avail;
      for (int v : clique) next.reset(v);
      chain.push_back(clique);
      search(next, taken + 1);
      chain.pop_back();
      return !found;
    });
    if (found) return;
    VertexSet next = avail;
    next.reset(branch_v);
    search(next, taken);
  }
};

std::vector<int> degree_ranks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order(n), rank(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da > db : a < b;
  });
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  return rank;
}

std::optional<CliquePacking> wrap_packing(
    std::optional<std::vector<std::vector<int>>>&& found, int r) {
  if (!found) return std::nullopt;
  CliquePacking packing;
  packing.r = r;
  packing.cliques = std::move(*found);
  return packing;
}

// Cliques of g+ab through both a and b: {a,b} plus an (r-1)-clique in the
// common neighborhood.
std::vector<std::vector<int>> added_edge_cliques(const Graph& variant, int a, int b,
                                                 int r) {
  std::vector<std::vector<int>> out;
  if (r == 1) {
    out.push_back({std::min(a, b), std::max(a, b)});
    return out;
  }
  VertexSet common = VertexSet::all(variant.vertex_count());
  common.and_row(variant.row(a));
  common.and_row(variant.row(b));
  clique_dfs(variant, r - 1, common, [&](const std::vector<int>& rest) {
    std::vector<int> clique = {a, b};
    clique.insert(clique.end(), rest.begin(), rest.end());
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return true;
  });
  return out;
}

}  // namespace

struct DeltaPackingOracleImpl {
  PackingEngine engine;
  std::vector<char> base_hitters;
  // cache for the repeated swap queries against one added edge
  mutable int cached_a = -1, cached_b = -1;
  mutable std::vector<std::vector<int>> cached_delta;

  // Greedy passes scan low-load cliques first; delta cliques need the same
  // treatment or the lexicographic head of the delta burns every hitter.
  void sort_delta(std::vector<std::vector<int>>& delta) const {
    if (base_hitters.empty()) return;
    std::vector<int> load(delta.size(), 0);
    for (std::size_t i = 0; i < delta.size(); ++i)
      for (int v : delta[i]) load[i] += base_hitters[v];
    std::vector<int> order(delta.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return load[a] < load[b]; });
    std::vector<std::vector<int>> sorted;
    sorted.reserve(delta.size());
    for (int i : order) sorted.push_back(std::move(delta[i]));
    delta = std::move(sorted);
  }
};

std::optional<CliquePacking> find_disjoint_packing(const Graph& g, int k, int r) {
  if (k < 1) throw std::invalid_argument("find_disjoint_packing: k must be >= 1");
  if (r < 1) throw std::invalid_argument("find_disjoint_packing: r must be >= 1");
  int clique_size = r + 1;
  if (static_cast<long long>(k) * clique_size > g.vertex_count()) return std::nullopt;

  CliqueEnumeration enumerated = enumerate_cliques(g, clique_size);
  if (!enumerated.truncated) {
    if (static_cast<long long>(enumerated.cliques.size()) < k) return std::nullopt;
    sort_by_hitting_load(g.vertex_count(), enumerated.cliques);
    PackingEngine engine;
    engine.build(g, clique_size, std::move(enumerated.cliques));
    return wrap_packing(engine.solve(k, {}), r);
  }
  StreamingPackingSearch search;
  search.g = &g;
  search.n = g.vertex_count();
  search.k = k;
  search.clique_size = clique_size;
  search.rank = degree_ranks(g);
  search.search(VertexSet::all(search.n), 0);
  return wrap_packing(std::move(search.found), r);
}

FreenessVerdict is_free(const Graph& g, int k, int r) {
  FreenessVerdict verdict;
  auto packing = find_disjoint_packing(g, k, r);
  verdict.free = !packing.has_value();
  verdict.witness = std::move(packing);
  return verdict;
}

bool validate_packing(const Graph& g, const CliquePacking& packing, int k) {
  if (static_cast<int>(packing.cliques.size()) != k) return false;
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& clique : packing.cliques) {
    if (static_cast<int>(clique.size()) != packing.r + 1) return false;
    for (int v : clique) {
      if (v < 0 || v >= g.vertex_count()) return false;
      if (used[v]) return false;
      used[v] = 1;
    }
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (!g.has_edge(clique[i], clique[j])) return false;
  }
  return true;
}

std::vector<std::vector<int>> cliques_through_edge(const Graph& g, int u, int v,
                                                   int r, int want) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("cliques_through_edge: uv is not an edge");
  if (want < 1) throw std::invalid_argument("cliques_through_edge: want must be >= 1");
  if (r < 1) throw std::invalid_argument("cliques_through_edge: r must be >= 1");
  std::vector<std::vector<int>> out;
  if (r == 1) {
    out.push_back({std::min(u, v), std::max(u, v)});
    return out;
  }
  VertexSet avail = VertexSet::all(g.vertex_count());
  avail.reset(u);
  avail.reset(v);
  while (static_cast<int>(out.size()) < want) {
    VertexSet cand = avail;
    cand.and_row(g.row(u));
    cand.and_row(g.row(v));
    auto rest = first_clique_in(g, r - 1, cand);
    if (!rest) break;
    std::vector<int> clique = {u, v};
    clique.insert(clique.end(), rest->begin(), rest->end());
    std::sort(clique.begin(), clique.end());
    for (int w : *rest) avail.reset(w);
    out.push_back(std::move(clique));
  }
  return out;
}

std::vector<std::vector<int>> cliques_through_vertex(const Graph& g, int u,
                                                     int r, int want) {
  if (u < 0 || u >= g.vertex_count())
    throw std::out_of_range("cliques_through_vertex: vertex out of range");
  if (want < 1) throw std::invalid_argument("cliques_through_vertex: want must be >= 1");
  if (r < 1) throw std::invalid_argument("cliques_through_vertex: r must be >= 1");
  std::vector<std::vector<int>> out;
  VertexSet avail = VertexSet::all(g.vertex_count());
  avail.reset(u);
  while (static_cast<int>(out.size()) < want) {
    VertexSet cand = avail;
    cand.and_row(g.row(u));
    auto rest = first_clique_in(g, r, cand);
    if (!rest) break;
    std::vector<int> clique = {u};
    clique.insert(clique.end(), rest->begin(), rest->end());
    std::sort(clique.begin(), clique.end());
    for (int w : *rest) avail.reset(w);
    out.push_back(std::move(clique));
  }
  return out;
}

DeltaPackingOracle::DeltaPackingOracle(Graph g, int k, int r)
    : g_(std::move(g)), k_(k), r_(r) {
  if (k < 1 || r < 1)
    throw std::invalid_argument("DeltaPackingOracle: k, r must be >= 1");
  CliqueEnumeration enumerated = enumerate_cliques(g_, r_ + 1);
  truncated_ = enumerated.truncated;
  if (!truncated_) {
    base_ = std::move(enumerated.cliques);
    impl_ = std::make_shared<DeltaPackingOracleImpl>();
    impl_->base_hitters = greedy_hitters(g_.vertex_count(), base_);
    sort_by_hitting_load(g_.vertex_count(), base_);
    impl_->engine.build(g_, r_ + 1, base_);
  }
}

const std::vector<std::vector<int>>& DeltaPackingOracle::edge_delta(int a,
                                                                    int b) const {
  if (impl_->cached_a != a || impl_->cached_b != b) {
    Graph variant = g_;
    variant.add_edge(a, b);
    impl_->cached_delta = added_edge_cliques(variant, a, b, r_);
    impl_->sort_delta(impl_->cached_delta);
    impl_->cached_a = a;
    impl_->cached_b = b;
  }
  return impl_->cached_delta;
}

std::optional<CliquePacking> DeltaPackingOracle::with_added_edge(int a, int b) const {
  if (truncated_) {
    Graph variant = g_;
    variant.add_edge(a, b);
    return find_disjoint_packing(variant, k_, r_);
  }
  return wrap_packing(impl_->engine.solve(k_, edge_delta(a, b)), r_);
}

std::optional<CliquePacking> DeltaPackingOracle::with_swap(int a, int b, int u,
                                                           int v) const {
  if (truncated_) {
    Graph variant = g_;
    variant.add_edge(a, b);
    variant.remove_edge(u, v);
    return find_disjoint_packing(variant, k_, r_);
  }
  const auto& full_delta = edge_delta(a, b);
  std::vector<std::vector<int>> delta;
  delta.reserve(full_delta.size());
  for (const auto& clique : full_delta) {
    bool cu = false, cv = false;
    for (int w : clique) {
      cu = cu || w == u;
      cv = cv || w == v;
    }
    if (!(cu && cv)) delta.push_back(clique);
  }
  return wrap_packing(impl_->engine.solve(k_, delta, u, v), r_);
}

std::optional<CliquePacking> DeltaPackingOracle::with_modified_vertex(
    const Graph& variant, int vertex) const {
  if (truncated_) return find_disjoint_packing(variant, k_, r_);
  std::vector<std::vector<int>> delta;
  VertexSet nbhd = VertexSet::all(variant.vertex_count());
  nbhd.and_row(variant.row(vertex));
  clique_dfs(variant, r_, nbhd, [&](const std::vector<int>& rest) {
    std::vector<int> clique = {vertex};
    clique.insert(clique.end(), rest.begin(), rest.end());
    std::sort(clique.begin(), clique.end());
    delta.push_back(std::move(clique));
    return true;
  });
  impl_->sort_delta(delta);
  return wrap_packing(impl_->engine.solve(k_, delta, vertex), r_);
}

}  // namespace spex
