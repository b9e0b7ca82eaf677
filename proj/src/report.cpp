#include "spex/report.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace spex {

using nlohmann::ordered_json;

std::string double_str(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ordered_json make_envelope(const std::string& command, const ordered_json& args,
                           std::uint64_t seed, const ordered_json& payload) {
  ordered_json env;
  env["tool"] = "spex";
  env["version"] = kToolVersion;
  env["command"] = command;
  env["args"] = args;
  env["seed"] = seed;
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  env["generated_at"] = stamp;
  env["payload"] = payload;
  return env;
}

ordered_json spectral_to_json(const SpectralResult& r, bool include_vector) {
  ordered_json j;
  j["rho"] = double_str(r.rho);
  j["residual"] = double_str(r.residual);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  if (include_vector) {
    ordered_json vec = ordered_json::array();
    for (Eigen::Index i = 0; i < r.vector.size(); ++i)
      vec.push_back(double_str(r.vector[i]));
    j["vector"] = vec;
  }
  return j;
}

ordered_json search_report_to_json(const SearchReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["r"] = r.r;
  j["mode"] = r.mode;
  j["objective"] = to_string(r.objective);
  j["best_rho"] = double_str(r.best_rho);
  j["best_edges"] = r.best_edges;
  ordered_json winners = ordered_json::array();
  for (const auto& w : r.winners) {
    ordered_json jw;
    jw["graph6"] = w.graph6;
    jw["rho"] = double_str(w.rho);
    jw["edges"] = w.edges;
    jw["canonical"] = w.canonical_hex;
    winners.push_back(jw);
  }
  j["winners"] = winners;
  j["tie"] = r.tie;
  j["matches_conjecture"] = to_string(r.matches_conjecture);
  j["classes_scanned"] = r.classes_scanned;
  j["candidates_tested"] = r.candidates_tested;
  j["free_candidates"] = r.free_candidates;
  j["winner_free_verified"] = r.winner_free_verified;
  j["winner_rho_recheck_dev"] = double_str(r.winner_rho_recheck_dev);
  if (r.objective == Objective::kEdges) {
    j["ex_formula"] = r.ex_formula;
    j["ex_formula_regime_ok"] = r.ex_formula_regime_ok;
    j["formula_mismatch"] = r.formula_mismatch;
  }
  if (r.mode == "local") {
    j["seed"] = r.seed;
    j["restarts"] = r.restarts;
    j["moves_applied"] = r.moves_applied;
  }
  if (r.improving_moves_at_start >= 0)
    j["improving_moves_at_start"] = r.improving_moves_at_start;
  j["notes"] = r.notes;
  return j;
}

ordered_json crossover_to_json(const CrossoverReport& r) {
  ordered_json j;
  j["k"] = r.k;
  j["r"] = r.r;
  j["n_from"] = r.n_from;
  j["n_to"] = r.n_to;
  j["seed"] = r.seed;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json jr;
    jr["n"] = row.n;
    jr["mode"] = row.mode;
    jr["winner_graph6"] = row.winner_graph6;
    jr["best_rho"] = double_str(row.best_rho);
    jr["matches_conjecture"] = to_string(row.matches);
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["empirical_threshold"] = r.empirical_threshold;
  j["heuristic_beyond_exhaustive"] = r.heuristic_beyond_exhaustive;
  j["note"] =
      "threshold is empirical evidence only; the theorem's n0 is not effective";
  return j;
}

ordered_json wl_to_json(const WLClassification& r) {
  ordered_json j;
  j["w_vertices"] = r.w_vertices;
  j["l_vertices"] = r.l_vertices;
  j["w_threshold"] = double_str(r.w_threshold);
  j["l_threshold"] = double_str(r.l_threshold);
  j["w_bound_margin"] = double_str(r.w_bound_margin);
  j["l_bound_margin"] = double_str(r.l_bound_margin);
  j["w_within_bound"] = r.w_within_bound;
  j["l_within_bound"] = r.l_within_bound;
  j["crossing_local_violations"] = r.crossing_local_violations;
  return j;
}

ordered_json structure_to_json(const StructureClauses& r) {
  ordered_json j;
  j["dominating"] = r.dominating;
  j["part_sizes"] = r.part_sizes;
  j["dominating_count_ok"] = r.dominating_count_ok;
  j["remainder_multipartite"] = r.remainder_multipartite;
  j["part_count_ok"] = r.part_count_ok;
  j["balanced"] = r.balanced;
  j["pass"] = r.pass;
  j["failing_clause"] = r.failing_clause;
  return j;
}

ordered_json audit_params_to_json(const AuditParams& p, int k, int r) {
  ordered_json j;
  j["epsilon"] = double_str(p.epsilon);
  j["theta"] = double_str(p.theta);
  j["epsilon1"] = double_str(p.epsilon1);
  j["epsilon2"] = double_str(p.epsilon2);
  j["theta_ceiling"] = double_str(p.theta_ceiling(k, r));
  j["theta_within_asymptotic_regime"] = p.theta < p.theta_ceiling(k, r);
  j["l_feasibility_quadratic"] = double_str(p.quadratic_margin(r));
  return j;
}

std::string search_report_to_csv(const SearchReport& r) {
  std::string csv =
      "n,k,r,mode,objective,best_rho,best_edges,tie,matches_conjecture,"
      "classes_scanned,winner_graph6\n";
  csv += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.r) +
         "," + r.mode + "," + to_string(r.objective) + "," + double_str(r.best_rho) +
         "," + std::to_string(r.best_edges) + "," + (r.tie ? "1" : "0") + "," +
         to_string(r.matches_conjecture) + "," + std::to_string(r.classes_scanned) +
         "," + (r.winners.empty() ? "" : r.winners.front().graph6) + "\n";
  return csv;
}

std::string crossover_to_csv(const CrossoverReport& r) {
  std::string csv = "n,mode,best_rho,matches_conjecture,winner_graph6\n";
  for (const auto& row : r.rows)
    csv += std::to_string(row.n) + "," + row.mode + "," + double_str(row.best_rho) +
           "," + to_string(row.matches) + "," + row.winner_graph6 + "\n";
  return csv;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace spex
