#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// The small constants driving the W/L vertex classes. The k-free structural
/// constraints (positivity, epsilon <= theta^2, epsilon2 < epsilon1 and the
/// low-degree-class feasibility quadratic being negative) are enforced; the
/// k-dependent theta ceiling is reported as a margin because desk-scale
/// experiments routinely run outside the asymptotic regime.
struct AuditParams {
  double epsilon = 0.0;
  double theta = 0.0;
  double epsilon1 = 0.0;
  double epsilon2 = 0.0;

  /// Largest schedule satisfying every constraint with a safety factor:
  /// theta = 0.9/(20 k r^4 (r+1)), eps1 = 0.9 theta, eps2 = 0.81 theta,
  /// epsilon = 0.36 theta^2.
  static AuditParams defaults(int k, int r);

  void validate(int r) const;  // throws on structural violations
  double theta_ceiling(int k, int r) const;
  double quadratic_margin(int r) const;  // epsilon - e1 e2 + (r-1)/(2r) e2^2
};

struct MaxCrossingResult {
  PartitionLabeling labeling;
  long long crossing = 0;
  bool certified_global = false;  // all labelings exhausted
  int restarts_used = 0;
  std::uint64_t seed = 0;
};

/// Partition into r classes locally maximal for crossing edges under
/// single-vertex relabeling; exhausted exactly when r^n is small enough,
/// otherwise greedy ascent from seeded random starts (flagged heuristic).
MaxCrossingResult max_crossing_partition(const Graph& g, int r, std::uint64_t seed,
                                         int restarts = 16);

struct WLClassification {
  std::vector<int> w_vertices;  // d restricted to own class >= 2 theta n
  std::vector<int> l_vertices;  // total degree <= (1 - 1/r - eps1) n
  double w_threshold = 0.0;     // 2 theta n
  double l_threshold = 0.0;     // (1 - 1/r - eps1) n
  double w_bound_margin = 0.0;  // theta n - |W|
  double l_bound_margin = 0.0;  // eps2 n - |L|
  bool w_within_bound = false;
  bool l_within_bound = false;
  /// vertices violating the max-crossing consequence d_{V_i}(v) <= d(v)/r
  std::vector<int> crossing_local_violations;
};

WLClassification classify_w_l(const Graph& g, const PartitionLabeling& p,
                              const AuditParams& params);

struct StructureClauses {
  std::vector<int> dominating;  // D = {v : d(v) = n-1}
  std::vector<int> part_sizes;  // complement components of G minus D
  bool dominating_count_ok = false;
  bool remainder_multipartite = false;
  bool part_count_ok = false;
  bool balanced = false;
  bool pass = false;
  std::string failing_clause;  // first failing clause name, empty if pass
};

/// Hard structural verdict: is g exactly K_{k-1} joined with a balanced
/// complete r-partite graph?
StructureClauses audit_extremal_structure(const Graph& g, int k, int r);

struct PartConclusions {
  std::vector<bool> part_independent_outside_w;  // V_i minus W independent?
  std::vector<int> w_degrees;                    // degree of each W vertex
  std::vector<bool> w_dominating;                // d(u) == n-1 per W vertex
};

/// Conclusions the extremal structure argument draws for a concrete
/// partition and W set: each class is independent once W is removed, and
/// every W vertex dominates the whole graph.
PartConclusions audit_part_conclusions(const Graph& g, const PartitionLabeling& p,
                                       const std::vector<int>& w_vertices);

/// quotient_rho after moving one vertex from part i to part j, minus before.
/// Requires parts[i] >= parts[j] + 2.
double balancing_gain(int k, int r, const std::vector<int>& parts, int i, int j);

}  // namespace spex
