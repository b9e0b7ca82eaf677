#pragma once

#include <functional>

#include "spex/graph.hpp"

namespace spex {

inline constexpr int kMaxEnumerationVertices = 10;

/// Streams exactly one representative per isomorphism class of graphs on n
/// vertices, in a deterministic order, via canonical augmentation: a child
/// built by appending a vertex survives only if the appended vertex sits in
/// the automorphism orbit of the child's canonical deletion vertex.
/// Refuses n > 10.
void enumerate_nonisomorphic(int n, const std::function<void(const Graph&)>& emit);

/// Same generation tree with a hereditary prune: keep_subtree is evaluated
/// on every intermediate graph (all vertex counts up to n); returning false
/// drops the graph and everything grown from it. The predicate must be
/// closed under induced subgraphs for the enumeration to stay exhaustive.
void enumerate_nonisomorphic_pruned(
    int n, const std::function<bool(const Graph&)>& keep_subtree,
    const std::function<void(const Graph&)>& emit);

}  // namespace spex
