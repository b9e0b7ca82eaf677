#pragma once

#include <span>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// Exact edge count of the balanced r-partite graph on n vertices.
long long turan_edges(long long n, int r);

struct ExValue {
  long long value = 0;
  /// The closed form is the Turan number only for n >= k(r+1); below that
  /// the value is still returned as a reference line with this flag down.
  bool regime_ok = true;
};

/// e(T_{n-k+1,r}) + (k-1)(n-k+1) + C(k-1,2), the edge count of the extremal
/// family, equal to the Turan number of k disjoint (r+1)-cliques at large n.
ExValue ex_disjoint_cliques(long long n, int k, int r);

/// Max edges over graphs with matching number <= nu and max degree <= delta:
/// delta*nu + floor(delta/2) * floor(nu / ceil(delta/2)).
long long chvatal_hanson(long long nu, long long delta);

struct ChOracleResult {
  long long max_edges = 0;
  Graph witness;           // a maximizer on <= n_max vertices
  long long classes_scanned = 0;
};

/// Independent verifier: exhaustive maximum over all graphs on <= n_max
/// vertices (up to isomorphism, with degree/matching pruning) subject to
/// matching number <= nu and max degree <= delta. Exact for its n_max; a
/// lower bound for the unbounded extremal function when the maximizer does
/// not fit.
ChOracleResult chvatal_hanson_oracle(int nu, int delta, int n_max);

/// Sum of sizes minus (m-1) * union_size; may be negative (vacuous bound).
long long intersection_bound(std::span<const long long> sizes, long long union_size);

}  // namespace spex
