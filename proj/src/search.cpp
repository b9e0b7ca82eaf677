#include "spex/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "spex/audit.hpp"
#include "spex/canonical.hpp"
#include "spex/cliques.hpp"
#include "spex/enumerate.hpp"
#include "spex/formulas.hpp"
#include "spex/graph6.hpp"
#include "spex/spectral.hpp"

namespace spex {

std::string to_string(Objective o) {
  return o == Objective::kSpectral ? "spectral" : "edges";
}

std::string to_string(ConjectureMatch m) {
  switch (m) {
    case ConjectureMatch::kYes: return "yes";
    case ConjectureMatch::kNo: return "no";
    default: return "tie";
  }
}

bool matches_extremal_family(const Graph& g, int k, int r) {
  int n = g.vertex_count();
  if (n < k - 1) return false;
  if (n <= kMaxCanonicalVertices)
    return isomorphic(g, clique_join_turan(n, k, r));
  return audit_extremal_structure(g, k, r).pass;
}

namespace {

struct ScanState {
  int n = 0, k = 0, r = 0;
  Objective objective = Objective::kSpectral;
  long long classes_scanned = 0;
  long long candidates_tested = 0;
  long long free_candidates = 0;
  struct Entry {
    Graph graph;
    double rho;
    long long edges;
  };
  std::vector<Entry> winners;
  double best_rho = 0.0;
  long long best_edges = -1;

  void visit(const Graph& g) {
    ++classes_scanned;
    long long e = g.edge_count();
    if (objective == Objective::kSpectral) {
      // rho^2 <= trace(A^2) = 2e, so sparse classes cannot reach the window
      if (!winners.empty() && std::sqrt(2.0 * e) < best_rho - kRhoTieWindow) return;
      ++candidates_tested;
      if (!is_free(g, k, r).free) return;
      ++free_candidates;
      double rho = spectral_radius(g).rho;
      if (winners.empty() || rho > best_rho + kRhoTieWindow) {
        winners.clear();
        winners.push_back({g, rho, e});
        best_rho = rho;
      } else if (rho >= best_rho - kRhoTieWindow) {
        winners.push_back({g, rho, e});
        if (rho > best_rho) {
          best_rho = rho;
          std::erase_if(winners,
                        [&](const Entry& w) { return w.rho < best_rho - kRhoTieWindow; });
        }
      }
    } else {
      if (best_edges >= 0 && e < best_edges) return;
      ++candidates_tested;
      if (!is_free(g, k, r).free) return;
      ++free_candidates;
      if (e > best_edges) {
        winners.clear();
        best_edges = e;
        winners.push_back({g, 0.0, e});
      } else {
        winners.push_back({g, 0.0, e});
      }
    }
  }
};

SearchWinner make_winner(const ScanState::Entry& entry) {
  SearchWinner w;
  w.graph = entry.graph;
  w.rho = entry.rho;
  w.edges = entry.edges;
  if (entry.graph.vertex_count() <= kMaxCanonicalVertices)
    w.canonical_hex = form_to_hex(canonical_form(entry.graph));
  w.graph6 = graph6_encode(entry.graph);
  return w;
}

SearchReport finish_scan(ScanState&& state, const std::string& mode) {
  SearchReport rep;
  rep.n = state.n;
  rep.k = state.k;
  rep.r = state.r;
  rep.mode = mode;
  rep.objective = state.objective;
  rep.classes_scanned = state.classes_scanned;
  rep.candidates_tested = state.candidates_tested;
  rep.free_candidates = state.free_candidates;

  if (state.winners.empty()) {
    rep.notes.push_back("no free graph found in the scanned universe");
    return rep;
  }
  // tie policy: objective value window, then edge count, then canonical form
  std::vector<SearchWinner> winners;
  winners.reserve(state.winners.size());
  for (const auto& entry : state.winners) winners.push_back(make_winner(entry));
  std::stable_sort(winners.begin(), winners.end(),
                   [&](const SearchWinner& a, const SearchWinner& b) {
                     if (a.edges != b.edges) return a.edges > b.edges;
                     return a.canonical_hex < b.canonical_hex;
                   });
  rep.winners = std::move(winners);
  rep.tie = rep.winners.size() > 1;
  const SearchWinner& primary = rep.winners.front();
  rep.best_edges = primary.edges;
  rep.best_rho = state.objective == Objective::kSpectral ? state.best_rho : 0.0;

  // re-validate the primary winner with fresh calls
  rep.winner_free_verified = is_free(primary.graph, state.k, state.r).free;
  if (state.objective == Objective::kSpectral) {
    double again = spectral_radius(primary.graph).rho;
    rep.winner_rho_recheck_dev = std::abs(again - primary.rho);
  }

  if (rep.tie)
    rep.matches_conjecture = ConjectureMatch::kTie;
  else
    rep.matches_conjecture = matches_extremal_family(primary.graph, state.k, state.r)
                                 ? ConjectureMatch::kYes
                                 : ConjectureMatch::kNo;

  if (state.objective == Objective::kEdges) {
    ExValue ex = ex_disjoint_cliques(state.n, state.k, state.r);
    rep.ex_formula = ex.value;
    rep.ex_formula_regime_ok = ex.regime_ok;
    rep.formula_mismatch = rep.best_edges != ex.value;
    if (rep.formula_mismatch)
      rep.notes.push_back("scan maximum disagrees with the closed-form value" +
                          std::string(ex.regime_ok ? "" : " (below formula regime)"));
  }
  return rep;
}

}  // namespace

SearchReport exhaustive_extremal(int n, int k, int r, Objective objective) {
  if (k < 1 || r < 1)
    throw std::invalid_argument("exhaustive_extremal: k, r must be >= 1");
  ScanState state;
  state.n = n;
  state.k = k;
  state.r = r;
  state.objective = objective;
  enumerate_nonisomorphic(n, [&](const Graph& g) { state.visit(g); });
  return finish_scan(std::move(state), "exhaustive");
}

SearchReport exhaustive_extremal_universe(
    const std::function<void(const std::function<void(const Graph&)>&)>& universe,
    int n, int k, int r, Objective objective) {
  if (k < 1 || r < 1)
    throw std::invalid_argument("exhaustive_extremal_universe: k, r must be >= 1");
  ScanState state;
  state.n = n;
  state.k = k;
  state.r = r;
  state.objective = objective;
  universe([&](const Graph& g) {
    if (g.vertex_count() != n)
      throw std::invalid_argument("universe graph has wrong vertex count");
    state.visit(g);
  });
  SearchReport rep = finish_scan(std::move(state), "universe");
  rep.notes.push_back("universe supplied externally; graphs scanned as-is");
  return rep;
}

// ---------------------------------------------------------------------------
// local search

namespace {

struct Move {
  enum Kind { kNone, kAdd, kSwap, kRehome } kind = kNone;
  int a = -1, b = -1;  // added edge, or rehomed (vertex, model)
  int u = -1, v = -1;  // removed edge for swaps
  double gain = 0.0;
};

Graph apply_rehome(const Graph& g, int vertex, int model) {
  Graph out = g;
  for (int w : g.neighbors(vertex)) out.remove_edge(vertex, w);
  for (int w : g.neighbors(model))
    if (w != vertex) out.add_edge(vertex, w);
  return out;
}

struct Climber {
  int k, r;
  double tie = kRhoTieWindow;
  long long moves = 0;
  long long evals = 0;

  // Scans the move set at g; returns the steepest strictly improving move.
  // Passing improving_count keeps it scanning to count every improving move.
  Move best_move(Graph& g, double rho, const Eigen::VectorXd& warm,
                 long long* improving_count = nullptr) {
    int n = g.vertex_count();
    Move best;
    auto consider = [&](Move m) {
      if (m.gain <= tie) return;  // gains inside the tie window are plateaus
      if (improving_count) ++*improving_count;
      if (best.kind == Move::kNone || m.gain > best.gain) best = m;
    };

    DeltaPackingOracle oracle(g, k, r);

    // Edge additions, steepest first (single deletions never raise the
    // spectral radius, so they are not scanned as standalone moves). The
    // packings of infeasible additions are kept: they drive the swap stage.
    std::vector<std::pair<std::pair<int, int>, CliquePacking>> blocked;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (g.has_edge(a, b)) continue;
        auto packing = oracle.with_added_edge(a, b);
        if (packing) {
          blocked.push_back({{a, b}, std::move(*packing)});
          continue;
        }
        g.add_edge(a, b);
        ++evals;
        double rho2 = spectral_radius(g, kDefaultTol, warm).rho;
        g.remove_edge(a, b);
        consider({Move::kAdd, a, b, -1, -1, rho2 - rho});
      }
    if (best.kind != Move::kNone && !improving_count) return best;

    // Plateau moves: edge swaps and vertex re-homing (the balancing
    // perturbation of the extremal family is the latter). Candidates are
    // probed in decreasing order of their Rayleigh gain bound
    // x'(A'-A)x / x'x, which is a certified lower bound on the actual gain,
    // and the first improving one is taken; the exhaustive exact scan only
    // happens on terminal plateaus (and in counting mode).
    Eigen::VectorXd ax;
    adjacency_multiply(g, warm, ax);
    double xtx = warm.squaredNorm();
    std::vector<Move> candidates;

    // Swaps: add a missing edge, delete one existing edge. For a fixed added
    // edge the deletion must hit every packing of the augmented graph, so
    // only edges of the found packing can yield a free result.
    for (const auto& [edge, packing] : blocked) {
      auto [a, b] = edge;
      for (const auto& clique : packing.cliques)
        for (std::size_t i = 0; i < clique.size(); ++i)
          for (std::size_t j = i + 1; j < clique.size(); ++j) {
            int u = clique[i], v = clique[j];
            if ((u == a && v == b) || (u == b && v == a)) continue;
            if (!g.has_edge(u, v)) continue;  // the added edge ab itself
            double bound = 2.0 * (warm[a] * warm[b] - warm[u] * warm[v]) / xtx;
            candidates.push_back({Move::kSwap, a, b, u, v, bound});
          }
    }
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        double target = ax[u] - (g.has_edge(u, v) ? warm[v] : 0.0);
        double bound = 2.0 * warm[v] * (target - ax[v]) / xtx;
        candidates.push_back({Move::kRehome, v, u, -1, -1, bound});
      }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Move& a, const Move& b) { return a.gain > b.gain; });

    for (const Move& cand : candidates) {
      if (cand.kind == Move::kSwap) {
        if (oracle.with_swap(cand.a, cand.b, cand.u, cand.v)) continue;
        g.add_edge(cand.a, cand.b);
        g.remove_edge(cand.u, cand.v);
        ++evals;
        double rho2 = spectral_radius(g, kDefaultTol, warm).rho;
        g.add_edge(cand.u, cand.v);
        g.remove_edge(cand.a, cand.b);
        consider({Move::kSwap, cand.a, cand.b, cand.u, cand.v, rho2 - rho});
      } else {
        Graph moved = apply_rehome(g, cand.a, cand.b);
        if (moved == g) continue;
        if (oracle.with_modified_vertex(moved, cand.a)) continue;
        ++evals;
        double rho2 = spectral_radius(moved, kDefaultTol, warm).rho;
        consider({Move::kRehome, cand.a, cand.b, -1, -1, rho2 - rho});
      }
      if (best.kind != Move::kNone && !improving_count) return best;
    }
    return best;
  }

  void climb(Graph& g) {
    while (true) {
      SpectralResult sr = spectral_radius(g);
      Move m = best_move(g, sr.rho, sr.vector);
      if (m.kind == Move::kNone) return;
      switch (m.kind) {
        case Move::kAdd:
          g.add_edge(m.a, m.b);
          break;
        case Move::kSwap:
          g.add_edge(m.a, m.b);
          g.remove_edge(m.u, m.v);
          break;
        case Move::kRehome:
          g = apply_rehome(g, m.a, m.b);
          break;
        default:
          return;
      }
      ++moves;
    }
  }
};

Graph random_free_graph(int n, int k, int r, std::mt19937_64& rng) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() & 1) g.add_edge(a, b);
  while (true) {
    auto packing = find_disjoint_packing(g, k, r);
    if (!packing) break;
    // break the certificate with one random deletion inside it
    const auto& clique = packing->cliques[rng() % packing->cliques.size()];
    std::size_t i = rng() % clique.size();
    std::size_t j = rng() % (clique.size() - 1);
    if (j >= i) ++j;
    g.remove_edge(clique[i], clique[j]);
  }
  return g;
}

Graph perturbed_extremal(int n, int k, int r, std::mt19937_64& rng) {
  Graph g = clique_join_turan(n, k, r);
  std::vector<std::pair<int, int>> edges;
  g.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
  int removals = 1 + static_cast<int>(rng() % std::max(1, n / 3));
  for (int i = 0; i < removals && !edges.empty(); ++i) {
    std::size_t pick = rng() % edges.size();
    g.remove_edge(edges[pick].first, edges[pick].second);
    edges.erase(edges.begin() + pick);
  }
  return g;
}

struct RestartOutcome {
  Graph graph;
  double rho = 0.0;
  long long moves = 0;
};

RestartOutcome run_restart(const LocalSearchOptions& options, int restart) {
  std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * (restart + 1));
  Graph g;
  if (options.start && restart == 0)
    g = *options.start;
  else if (restart % 2 == 1)
    g = perturbed_extremal(options.n, options.k, options.r, rng);
  else
    g = random_free_graph(options.n, options.k, options.r, rng);
  Climber climber{options.k, options.r};
  climber.climb(g);
  RestartOutcome out;
  out.rho = spectral_radius(g).rho;
  out.graph = std::move(g);
  out.moves = climber.moves;
  return out;
}

}  // namespace

long long count_improving_moves(const Graph& g, int k, int r) {
  SpectralResult sr = spectral_radius(g);
  Climber climber{k, r};
  long long improving = 0;
  Graph scratch = g;
  climber.best_move(scratch, sr.rho, sr.vector, &improving);
  return improving;
}

std::optional<Graph> improving_neighbor(const Graph& g, int k, int r) {
  SpectralResult sr = spectral_radius(g);
  Climber climber{k, r};
  Graph scratch = g;
  Move m = climber.best_move(scratch, sr.rho, sr.vector);
  switch (m.kind) {
    case Move::kAdd:
      scratch.add_edge(m.a, m.b);
      return scratch;
    case Move::kSwap:
      scratch.add_edge(m.a, m.b);
      scratch.remove_edge(m.u, m.v);
      return scratch;
    case Move::kRehome:
      return apply_rehome(scratch, m.a, m.b);
    default:
      return std::nullopt;
  }
}

SearchReport local_search_extremal(const LocalSearchOptions& options) {
  if (options.n < 1 || options.n > 500)
    throw std::invalid_argument("local_search_extremal: n must be in [1,500]");
  if (options.k < 1 || options.r < 1)
    throw std::invalid_argument("local_search_extremal: k, r must be >= 1");
  if (options.restarts < 1)
    throw std::invalid_argument("local_search_extremal: restarts must be >= 1");
  if (options.start && options.start->vertex_count() != options.n)
    throw std::invalid_argument("local_search_extremal: start graph has wrong order");
  if (options.start && !is_free(*options.start, options.k, options.r).free)
    throw std::invalid_argument("local_search_extremal: start graph is not free");

  std::vector<RestartOutcome> outcomes(options.restarts);
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (int i = 0; i < options.restarts; ++i) outcomes[i] = run_restart(options, i);
  } else {
    std::vector<std::future<RestartOutcome>> futures;
    futures.reserve(options.restarts);
    for (int i = 0; i < options.restarts; ++i)
      futures.push_back(std::async(std::launch::async, run_restart, options, i));
    for (int i = 0; i < options.restarts; ++i) outcomes[i] = futures[i].get();
  }

  // deterministic reduction in restart order
  int best = 0;
  for (int i = 1; i < options.restarts; ++i) {
    const auto& cand = outcomes[i];
    const auto& inc = outcomes[best];
    if (cand.rho > inc.rho + kRhoTieWindow) {
      best = i;
    } else if (cand.rho >= inc.rho - kRhoTieWindow) {
      long long ce = cand.graph.edge_count(), ie = inc.graph.edge_count();
      if (ce > ie) best = i;
      // equal objective and edges: keep the earlier restart
    }
  }

  SearchReport rep;
  rep.n = options.n;
  rep.k = options.k;
  rep.r = options.r;
  rep.mode = "local";
  rep.objective = Objective::kSpectral;
  rep.seed = options.seed;
  rep.restarts = options.restarts;
  const RestartOutcome& winner = outcomes[best];
  SearchWinner sw;
  sw.graph = winner.graph;
  sw.rho = winner.rho;
  sw.edges = winner.graph.edge_count();
  if (options.n <= kMaxCanonicalVertices)
    sw.canonical_hex = form_to_hex(canonical_form(winner.graph));
  sw.graph6 = graph6_encode(winner.graph);
  rep.best_rho = winner.rho;
  rep.best_edges = sw.edges;
  rep.winners.push_back(std::move(sw));
  for (const auto& o : outcomes) rep.moves_applied += o.moves;
  rep.winner_free_verified = is_free(winner.graph, options.k, options.r).free;
  rep.winner_rho_recheck_dev = std::abs(spectral_radius(winner.graph).rho - winner.rho);
  rep.matches_conjecture =
      matches_extremal_family(winner.graph, options.k, options.r)
          ? ConjectureMatch::kYes
          : ConjectureMatch::kNo;
  rep.notes.push_back("hill climbing is a heuristic; the winner is a local record");
  return rep;
}

CrossoverReport crossover_scan(int k, int r, int n_from, int n_to,
                               std::uint64_t seed, int restarts) {
  if (k < 1 || r < 1)
    throw std::invalid_argument("crossover_scan: k, r must be >= 1");
  if (n_from < 1 || n_to < n_from)
    throw std::invalid_argument("crossover_scan: bad n range");
  CrossoverReport rep;
  rep.k = k;
  rep.r = r;
  rep.n_from = n_from;
  rep.n_to = n_to;
  rep.seed = seed;
  for (int n = n_from; n <= n_to; ++n) {
    CrossoverRow row;
    row.n = n;
    if (n <= kMaxEnumerationVertices) {
      SearchReport s = exhaustive_extremal(n, k, r, Objective::kSpectral);
      row.mode = "exhaustive";
      row.best_rho = s.best_rho;
      row.winner_graph6 = s.winners.empty() ? "" : s.winners.front().graph6;
      row.matches = s.matches_conjecture;
    } else {
      LocalSearchOptions opt;
      opt.n = n;
      opt.k = k;
      opt.r = r;
      opt.restarts = restarts;
      opt.seed = seed + n;
      SearchReport s = local_search_extremal(opt);
      row.mode = "local";
      row.best_rho = s.best_rho;
      row.winner_graph6 = s.winners.empty() ? "" : s.winners.front().graph6;
      row.matches = s.matches_conjecture;
      rep.heuristic_beyond_exhaustive = true;
    }
    // below k(r+1) vertices freeness is vacuous and the theorem says nothing
    if (n < static_cast<long long>(k) * (r + 1)) row.matches = ConjectureMatch::kNo;
    rep.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    bool all_yes = true;
    for (std::size_t j = i; j < rep.rows.size(); ++j)
      if (rep.rows[j].matches != ConjectureMatch::kYes) {
        all_yes = false;
        break;
      }
    if (all_yes) {
      rep.empirical_threshold = rep.rows[i].n;
      break;
    }
  }
  return rep;
}

}  // namespace spex
