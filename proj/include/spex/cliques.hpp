#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

inline constexpr long long kDefaultCliqueCap = 10'000'000;

/// Certificate of k pairwise vertex-disjoint (r+1)-cliques.
struct CliquePacking {
  int r = 0;
  std::vector<std::vector<int>> cliques;  // each sorted ascending
};

struct CliqueEnumeration {
  std::vector<std::vector<int>> cliques;  // lexicographic by sorted ids
  bool truncated = false;
};

/// All vertex sets of the given size inducing complete subgraphs, in
/// lexicographic order; stops (flagged) after cap sets.
CliqueEnumeration enumerate_cliques(const Graph& g, int size,
                                    long long cap = kDefaultCliqueCap);

/// Exact search for k vertex-disjoint (r+1)-cliques. Returns the
/// deterministic first packing found, or nullopt if none exists.
std::optional<CliquePacking> find_disjoint_packing(const Graph& g, int k, int r);

struct FreenessVerdict {
  bool free = false;
  std::optional<CliquePacking> witness;  // present iff not free
};

/// Verdict plus certificate; consistent with find_disjoint_packing.
FreenessVerdict is_free(const Graph& g, int k, int r);

/// Independent validity check for a packing certificate (distinct code path
/// from the searcher): k cliques of r+1 vertices each, complete, disjoint.
bool validate_packing(const Graph& g, const CliquePacking& packing, int k);

/// Up to want (r+1)-cliques containing edge uv and pairwise sharing only
/// {u,v}, by greedy disjoint extension; fewer are returned when greedy runs
/// out.
std::vector<std::vector<int>> cliques_through_edge(const Graph& g, int u, int v,
                                                   int r, int want);

/// Up to want (r+1)-cliques containing u and pairwise sharing only {u}.
std::vector<std::vector<int>> cliques_through_vertex(const Graph& g, int u,
                                                     int r, int want);

struct DeltaPackingOracleImpl;

/// Answers packing queries for single-edge and single-vertex variants of a
/// reference graph without re-enumerating its cliques each time: the base
/// clique list and its search structures are built once, queries add a small
/// delta enumeration and an exclusion filter. Falls back to the from-scratch
/// search when the base enumeration was truncated. Not safe for concurrent
/// queries on one instance (it caches the last added-edge delta).
class DeltaPackingOracle {
 public:
  DeltaPackingOracle(Graph g, int k, int r);

  /// Packing in g + ab (ab must not be an edge of g).
  std::optional<CliquePacking> with_added_edge(int a, int b) const;
  /// Packing in g + ab - uv.
  std::optional<CliquePacking> with_swap(int a, int b, int u, int v) const;
  /// Packing in a variant whose adjacency differs from g only at `vertex`.
  std::optional<CliquePacking> with_modified_vertex(const Graph& variant,
                                                    int vertex) const;

 private:
  const std::vector<std::vector<int>>& edge_delta(int a, int b) const;
  Graph g_;
  int k_ = 0, r_ = 0;
  bool truncated_ = false;
  std::vector<std::vector<int>> base_;  // hitting-load order
  std::shared_ptr<DeltaPackingOracleImpl> impl_;
};

}  // namespace spex
