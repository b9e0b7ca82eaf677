#pragma once

#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

inline constexpr int kMaxCanonicalVertices = 64;

struct CanonicalResult {
  /// Labeling-invariant byte encoding; equal forms <=> isomorphic graphs.
  std::string form;
  /// labeling[v] = position of v in the canonical ordering.
  std::vector<int> labeling;
  /// orbit[v] = smallest vertex id in v's automorphism orbit.
  std::vector<int> orbit;
  long long automorphism_count_hint = 0;  // generators found, not group order
};

/// Canonical form via iterated refinement plus individualization
/// backtracking. Requires n <= 64.
CanonicalResult canonical_full(const Graph& g);

std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

/// Hex rendering of a canonical form, for report payloads.
std::string form_to_hex(const std::string& form);

}  // namespace spex
