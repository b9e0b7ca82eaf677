#pragma once

#include <Eigen/Core>
#include <optional>
#include <span>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

inline constexpr double kDefaultTol = 1e-10;

struct SpectralResult {
  double rho = 0.0;
  Eigen::VectorXd vector;  // positive for connected inputs, max entry = 1
  double residual = 0.0;   // inf-norm of A*x - rho*x at the returned vector
  int iterations = 0;
  bool converged = false;
};

/// Largest adjacency eigenvalue by power iteration on A+I (the unit shift
/// keeps bipartite +/-rho oscillation from stalling); the reported value is
/// the shifted eigenvalue minus one. Deterministic all-ones start.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTol);

/// Warm-started variant for single-edge perturbations of a graph whose
/// Perron vector is already known. Falls back to the all-ones start if the
/// warm vector does not fit.
SpectralResult spectral_radius(const Graph& g, double tol, const Eigen::VectorXd& warm_start);

/// Same iteration restricted to connected graphs, where the limit is the
/// strictly positive Perron vector.
SpectralResult perron_vector(const Graph& g, double tol = kDefaultTol);

/// y = A x for the bit-packed adjacency.
void adjacency_multiply(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y);

/// Dense adjacency matrix (test oracles, profile checks).
Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Spectral radius of the join of a (k-1)-clique with the complete
/// multipartite graph on the given parts, to machine precision, via the
/// (r+1)x(r+1) equitable-partition quotient matrix (r x r when k = 1).
double quotient_rho(int k, int r, std::span<const int> parts);
double quotient_rho(int k, int r, const std::vector<int>& parts);

/// (r-1)n/r + 2(k-1)/r - (1/n)((k-1)(r+k-1)/r + r/2).
double rho_lower_bound(long long n, int k, int r);

struct ProfileReport {
  double rho = 0.0;
  /// max |x_v - 1| over dominating vertices after join-normalization
  double dominating_spread = 0.0;
  /// min over dominating x_v minus max over non-dominating x_v (>= -tol wanted)
  double dominating_margin = 0.0;
  /// max over parts i and v in part i of |x_v - (rho+1)/(rho+n_i)|
  double part_profile_deviation = 0.0;
  /// smallest Perron entry in max-normalized scale
  double min_entry = 0.0;
  /// 1 - 1/(r-1) for r >= 3, else 0 (vacuous)
  double entry_lower_bound = 0.0;
  bool pass = false;
};

/// Checks the Perron-vector shape of the extremal family: dominating entries
/// maximal and equal, part-i entries equal to (rho+1)/(rho+n_i) after
/// join-normalization, and the global entry lower bound for r >= 3.
/// role_of_vertex: part index in [0,r) or r for dominating vertices.
ProfileReport eigenvector_profile_check(const Graph& g, int k,
                                        std::span<const int> parts,
                                        std::span<const int> role_of_vertex,
                                        double tol);

/// Role map matching the vertex layout of clique_join_turan(n,k,r).
std::vector<int> family_roles(int n, int k, int r);

}  // namespace spex
