#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

enum class Objective { kSpectral, kEdges };
enum class ConjectureMatch { kYes, kNo, kTie };

std::string to_string(Objective o);
std::string to_string(ConjectureMatch m);

struct SearchWinner {
  Graph graph;
  double rho = 0.0;
  long long edges = 0;
  std::string canonical_hex;  // empty beyond the canonical capacity
  std::string graph6;
};

struct SearchReport {
  int n = 0, k = 0, r = 0;
  std::string mode;  // "exhaustive" | "local" | "universe"
  Objective objective = Objective::kSpectral;
  double best_rho = 0.0;
  long long best_edges = 0;
  std::vector<SearchWinner> winners;  // everything inside the tie window
  bool tie = false;
  ConjectureMatch matches_conjecture = ConjectureMatch::kNo;
  long long classes_scanned = 0;
  long long candidates_tested = 0;
  long long free_candidates = 0;
  bool winner_free_verified = false;
  double winner_rho_recheck_dev = 0.0;
  long long ex_formula = 0;  // edge mode cross-check
  bool ex_formula_regime_ok = false;
  bool formula_mismatch = false;
  std::uint64_t seed = 0;
  int restarts = 0;
  long long moves_applied = 0;
  long long improving_moves_at_start = -1;  // zero-move checks
  std::vector<std::string> notes;
};

/// Spectral comparisons use this window: values closer than this are ties,
/// resolved by edge count and then canonical form, and flagged.
inline constexpr double kRhoTieWindow = 1e-9;

/// Full scan over isomorphism classes at n <= 10, filtered by freeness,
/// maximizing the objective.
SearchReport exhaustive_extremal(int n, int k, int r, Objective objective);

/// Same scan over an externally supplied universe of graphs (e.g. a graph6
/// stream from a third-party generator); graphs are taken as-is.
SearchReport exhaustive_extremal_universe(
    const std::function<void(const std::function<void(const Graph&)>&)>& universe,
    int n, int k, int r, Objective objective);

struct LocalSearchOptions {
  int n = 0, k = 1, r = 1;
  int restarts = 20;
  std::uint64_t seed = 1;
  /// When set, restart 0 climbs from this graph (it must be free).
  std::optional<Graph> start;
  int jobs = 1;
};

/// Steepest-ascent hill climbing over single edge additions, with edge swaps
/// and vertex re-homing probed on plateaus; deterministic given the seed.
SearchReport local_search_extremal(const LocalSearchOptions& options);

/// Scans the full move set of the climber at g without applying anything and
/// reports how many strictly improving, freeness-preserving moves exist.
long long count_improving_moves(const Graph& g, int k, int r);

/// The result of applying the climber's steepest improving move at g, when
/// one exists. A returned graph is free with strictly larger spectral radius,
/// i.e. a certificate that g is not the spectral maximizer on its order.
std::optional<Graph> improving_neighbor(const Graph& g, int k, int r);

/// True when g is (isomorphic to) the k,r extremal family member on its
/// vertex count: canonical comparison up to 64 vertices, exact structural
/// signature (k-1 dominating vertices over a balanced complete r-partite
/// remainder) beyond.
bool matches_extremal_family(const Graph& g, int k, int r);

struct CrossoverRow {
  int n = 0;
  std::string mode;
  std::string winner_graph6;
  double best_rho = 0.0;
  ConjectureMatch matches = ConjectureMatch::kNo;
};

struct CrossoverReport {
  int k = 0, r = 0, n_from = 0, n_to = 0;
  std::vector<CrossoverRow> rows;
  /// smallest n in range from which every verdict stays "yes"; -1 if none
  int empirical_threshold = -1;
  bool heuristic_beyond_exhaustive = false;
  std::uint64_t seed = 0;
};

CrossoverReport crossover_scan(int k, int r, int n_from, int n_to,
                               std::uint64_t seed = 1, int restarts = 8);

}  // namespace spex
