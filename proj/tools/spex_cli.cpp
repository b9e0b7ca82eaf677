#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spex/cliques.hpp"
#include "spex/formulas.hpp"
#include "spex/graph6.hpp"
#include "spex/report.hpp"
#include "spex/search.hpp"

using nlohmann::ordered_json;

namespace {

struct Common {
  int n = -1, k = -1, r = -1;
  std::uint64_t seed = 1;
  double tol = spex::kDefaultTol;
  std::string out;
  std::string format = "json";
  std::string graph6_file;
  int jobs = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "vertex count");
  cmd->add_option("--k", c.k, "number of forbidden disjoint cliques");
  cmd->add_option("--r", c.r, "clique order parameter (cliques have r+1 vertices)");
  cmd->add_option("--seed", c.seed, "RNG seed");
  cmd->add_option("--tol", c.tol, "spectral tolerance");
  cmd->add_option("--out", c.out, "output file (atomic write); stdout if absent");
  cmd->add_option("--format", c.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--graph6", c.graph6_file, "file with a graph6 line ('-' = stdin)");
  cmd->add_option("--jobs", c.jobs, "worker parallelism for restart batches");
}

void apply_env(Common& c, bool tol_set, bool jobs_set) {
  if (!tol_set)
    if (const char* e = std::getenv("SPEX_TOL")) c.tol = std::strtod(e, nullptr);
  if (!jobs_set)
    if (const char* e = std::getenv("SPEX_JOBS")) c.jobs = std::atoi(e);
}

spex::Graph load_graph(const Common& c) {
  if (!c.graph6_file.empty()) {
    std::string line;
    if (c.graph6_file == "-") {
      if (!std::getline(std::cin, line))
        throw std::invalid_argument("no graph6 line on stdin");
    } else {
      std::ifstream in(c.graph6_file);
      if (!in) throw std::invalid_argument("cannot open " + c.graph6_file);
      if (!std::getline(in, line))
        throw std::invalid_argument("no graph6 line in " + c.graph6_file);
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
      line.pop_back();
    return spex::graph6_decode(line);
  }
  if (c.n < 0 || c.k < 1 || c.r < 1)
    throw std::invalid_argument("need --graph6 or all of --n --k --r");
  return spex::clique_join_turan(c.n, c.k, c.r);
}

void deliver(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text << "\n";
  else
    spex::write_atomic(c.out, text + "\n");
}

void deliver_report(const Common& c, const std::string& command,
                    const ordered_json& args, const ordered_json& payload,
                    const std::string& csv = "") {
  if (c.format == "csv" && !csv.empty()) {
    deliver(c, csv);
    return;
  }
  deliver(c, spex::make_envelope(command, args, c.seed, payload).dump(2));
}

ordered_json args_json(const Common& c) {
  ordered_json a;
  if (c.n >= 0) a["n"] = c.n;
  if (c.k >= 0) a["k"] = c.k;
  if (c.r >= 0) a["r"] = c.r;
  a["tol"] = spex::double_str(c.tol);
  if (!c.graph6_file.empty()) a["graph6"] = c.graph6_file;
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spex: spectral extremal graph workbench for clique packings"};
  app.require_subcommand(1);

  Common c;
  bool assert_match = false, assert_free = false, assert_pass = false;
  std::string objective = "spectral";
  int restarts = 20;
  int n_from = -1, n_to = -1;
  int nu_max = 3, delta_max = 4, oracle_n_max = 0;
  std::string universe_file;
  double theta = 0, epsilon = 0, eps1 = 0, eps2 = 0;

  auto* construct = app.add_subcommand(
      "construct", "emit the graph6 of the conjectured extremal graph");
  Common cc = c;
  add_common(construct, cc);

  auto* rho = app.add_subcommand("rho", "spectral radius and Perron vector");
  Common cr = c;
  add_common(rho, cr);

  auto* free_cmd = app.add_subcommand("free", "clique-packing freeness verdict");
  Common cf = c;
  add_common(free_cmd, cf);
  free_cmd->add_flag("--assert-free", assert_free,
                     "exit 1 when a packing exists");

  auto* ex_cmd = app.add_subcommand("ex", "extremal edge-count table");
  Common ce = c;
  add_common(ex_cmd, ce);
  ex_cmd->add_option("--n-from", n_from, "first n");
  ex_cmd->add_option("--n-to", n_to, "last n");

  auto* f_cmd = app.add_subcommand("f", "max edges under matching/degree caps");
  Common cfn = c;
  add_common(f_cmd, cfn);
  f_cmd->add_option("--nu-max", nu_max, "largest matching bound");
  f_cmd->add_option("--delta-max", delta_max, "largest degree bound");
  f_cmd->add_option("--oracle-n-max", oracle_n_max,
                    "when > 0, add the exhaustive oracle column up to this order");

  auto* se = app.add_subcommand("search-exhaustive",
                                "full scan over isomorphism classes");
  Common cse = c;
  add_common(se, cse);
  se->add_option("--objective", objective, "spectral|edges")
      ->check(CLI::IsMember({"spectral", "edges"}));
  se->add_option("--universe", universe_file,
                 "graph6 file replacing the internal enumerator");
  se->add_flag("--assert-match", assert_match,
               "exit 1 unless the winner matches the conjectured graph");

  auto* sl = app.add_subcommand("search-local", "hill-climbing search");
  Common csl = c;
  add_common(sl, csl);
  sl->add_option("--restarts", restarts, "number of climbs");
  sl->add_flag("--assert-match", assert_match,
               "exit 1 unless the winner matches the conjectured graph");

  auto* cross = app.add_subcommand("crossover", "per-n verdict table");
  Common ccr = c;
  add_common(cross, ccr);
  cross->add_option("--n-from", n_from, "first n")->required();
  cross->add_option("--n-to", n_to, "last n")->required();
  cross->add_option("--restarts", restarts, "climbs per heuristic row");

  auto* audit_cmd = app.add_subcommand("audit", "proof-machinery audit report");
  Common ca = c;
  add_common(audit_cmd, ca);
  audit_cmd->add_option("--theta", theta, "override theta");
  audit_cmd->add_option("--epsilon", epsilon, "override epsilon");
  audit_cmd->add_option("--eps1", eps1, "override epsilon1");
  audit_cmd->add_option("--eps2", eps2, "override epsilon2");
  audit_cmd->add_flag("--assert-pass", assert_pass,
                      "exit 1 unless the structural audit passes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      Common& cmn = cc;
      apply_env(cmn, construct->count("--tol") > 0, construct->count("--jobs") > 0);
      if (cmn.n < 0 || cmn.k < 1 || cmn.r < 1)
        throw std::invalid_argument("construct needs --n --k --r");
      spex::Graph g = spex::clique_join_turan(cmn.n, cmn.k, cmn.r);
      std::string line = spex::graph6_encode(g);
      if (cmn.format == "json") {
        ordered_json payload;
        payload["graph6"] = line;
        payload["n"] = cmn.n;
        payload["k"] = cmn.k;
        payload["r"] = cmn.r;
        payload["edges"] = g.edge_count();
        payload["parts"] = spex::turan_parts(cmn.n - cmn.k + 1, cmn.r);
        deliver_report(cmn, "construct", args_json(cmn), payload);
      } else {
        deliver(cmn, line);
      }
    } else if (rho->parsed()) {
      Common& cmn = cr;
      apply_env(cmn, rho->count("--tol") > 0, rho->count("--jobs") > 0);
      spex::Graph g = load_graph(cmn);
      spex::SpectralResult res = spex::spectral_radius(g, cmn.tol);
      ordered_json payload = spex::spectral_to_json(res, true);
      payload["graph6"] = spex::graph6_encode(g);
      deliver_report(cmn, "rho", args_json(cmn), payload);
    } else if (free_cmd->parsed()) {
      Common& cmn = cf;
      apply_env(cmn, free_cmd->count("--tol") > 0, free_cmd->count("--jobs") > 0);
      if (cmn.k < 1 || cmn.r < 1) throw std::invalid_argument("free needs --k --r");
      spex::Graph g = load_graph(cmn);
      spex::FreenessVerdict verdict = spex::is_free(g, cmn.k, cmn.r);
      ordered_json payload;
      payload["free"] = verdict.free;
      payload["k"] = cmn.k;
      payload["r"] = cmn.r;
      payload["graph6"] = spex::graph6_encode(g);
      if (verdict.witness) {
        ordered_json cliques = ordered_json::array();
        for (const auto& clique : verdict.witness->cliques) cliques.push_back(clique);
        payload["packing"] = cliques;
        payload["packing_valid"] =
            spex::validate_packing(g, *verdict.witness, cmn.k);
      }
      deliver_report(cmn, "free", args_json(cmn), payload);
      if (assert_free && !verdict.free) return 1;
    } else if (ex_cmd->parsed()) {
      Common& cmn = ce;
      apply_env(cmn, ex_cmd->count("--tol") > 0, ex_cmd->count("--jobs") > 0);
      if (cmn.k < 1 || cmn.r < 1) throw std::invalid_argument("ex needs --k --r");
      if (n_from < 0) n_from = cmn.k * (cmn.r + 1);
      if (n_to < n_from) n_to = cmn.n >= n_from ? cmn.n : n_from;
      ordered_json rows = ordered_json::array();
      std::string csv = "n,k,r,ex,regime_ok\n";
      for (int n = n_from; n <= n_to; ++n) {
        spex::ExValue v = spex::ex_disjoint_cliques(n, cmn.k, cmn.r);
        ordered_json row;
        row["n"] = n;
        row["ex"] = v.value;
        row["regime_ok"] = v.regime_ok;
        rows.push_back(row);
        csv += std::to_string(n) + "," + std::to_string(cmn.k) + "," +
               std::to_string(cmn.r) + "," + std::to_string(v.value) + "," +
               (v.regime_ok ? "1" : "0") + "\n";
      }
      ordered_json payload;
      payload["k"] = cmn.k;
      payload["r"] = cmn.r;
      payload["rows"] = rows;
      deliver_report(cmn, "ex", args_json(cmn), payload, csv);
    } else if (f_cmd->parsed()) {
      Common& cmn = cfn;
      apply_env(cmn, f_cmd->count("--tol") > 0, f_cmd->count("--jobs") > 0);
      ordered_json rows = ordered_json::array();
      std::string csv = "nu,delta,f";
      if (oracle_n_max > 0) csv += ",oracle,oracle_attains";
      csv += "\n";
      for (int nu = 1; nu <= nu_max; ++nu)
        for (int delta = 1; delta <= delta_max; ++delta) {
          long long f = spex::chvatal_hanson(nu, delta);
          ordered_json row;
          row["nu"] = nu;
          row["delta"] = delta;
          row["f"] = f;
          csv += std::to_string(nu) + "," + std::to_string(delta) + "," +
                 std::to_string(f);
          if (oracle_n_max > 0) {
            spex::ChOracleResult oracle =
                spex::chvatal_hanson_oracle(nu, delta, oracle_n_max);
            row["oracle"] = oracle.max_edges;
            row["oracle_attains_formula"] = oracle.max_edges == f;
            row["oracle_witness_graph6"] = spex::graph6_encode(oracle.witness);
            csv += "," + std::to_string(oracle.max_edges) + "," +
                   (oracle.max_edges == f ? "1" : "0");
          }
          rows.push_back(row);
          csv += "\n";
        }
      ordered_json payload;
      payload["rows"] = rows;
      deliver_report(cmn, "f", args_json(cmn), payload, csv);
    } else if (se->parsed()) {
      Common& cmn = cse;
      apply_env(cmn, se->count("--tol") > 0, se->count("--jobs") > 0);
      if (cmn.n < 0 || cmn.k < 1 || cmn.r < 1)
        throw std::invalid_argument("search-exhaustive needs --n --k --r");
      spex::Objective obj = objective == "edges" ? spex::Objective::kEdges
                                                 : spex::Objective::kSpectral;
      spex::SearchReport rep;
      if (universe_file.empty()) {
        rep = spex::exhaustive_extremal(cmn.n, cmn.k, cmn.r, obj);
      } else {
        auto universe = [&](const std::function<void(const spex::Graph&)>& visit) {
          std::ifstream in(universe_file);
          if (!in) throw std::invalid_argument("cannot open " + universe_file);
          std::string line;
          while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
              line.pop_back();
            if (line.empty()) continue;
            visit(spex::graph6_decode(line));
          }
        };
        rep = spex::exhaustive_extremal_universe(universe, cmn.n, cmn.k, cmn.r, obj);
      }
      deliver_report(cmn, "search-exhaustive", args_json(cmn),
                     spex::search_report_to_json(rep),
                     spex::search_report_to_csv(rep));
      if (assert_match && rep.matches_conjecture != spex::ConjectureMatch::kYes)
        return 1;
    } else if (sl->parsed()) {
      Common& cmn = csl;
      apply_env(cmn, sl->count("--tol") > 0, sl->count("--jobs") > 0);
      if (cmn.n < 0 || cmn.k < 1 || cmn.r < 1)
        throw std::invalid_argument("search-local needs --n --k --r");
      spex::LocalSearchOptions opt;
      opt.n = cmn.n;
      opt.k = cmn.k;
      opt.r = cmn.r;
      opt.restarts = restarts;
      opt.seed = cmn.seed;
      opt.jobs = cmn.jobs;
      spex::SearchReport rep = spex::local_search_extremal(opt);
      deliver_report(cmn, "search-local", args_json(cmn),
                     spex::search_report_to_json(rep),
                     spex::search_report_to_csv(rep));
      if (assert_match && rep.matches_conjecture != spex::ConjectureMatch::kYes)
        return 1;
    } else if (cross->parsed()) {
      Common& cmn = ccr;
      apply_env(cmn, cross->count("--tol") > 0, cross->count("--jobs") > 0);
      if (cmn.k < 1 || cmn.r < 1) throw std::invalid_argument("crossover needs --k --r");
      spex::CrossoverReport rep =
          spex::crossover_scan(cmn.k, cmn.r, n_from, n_to, cmn.seed, restarts);
      deliver_report(cmn, "crossover", args_json(cmn), spex::crossover_to_json(rep),
                     spex::crossover_to_csv(rep));
    } else if (audit_cmd->parsed()) {
      Common& cmn = ca;
      apply_env(cmn, audit_cmd->count("--tol") > 0, audit_cmd->count("--jobs") > 0);
      if (cmn.k < 1 || cmn.r < 1) throw std::invalid_argument("audit needs --k --r");
      spex::Graph g = load_graph(cmn);
      spex::AuditParams params = spex::AuditParams::defaults(cmn.k, cmn.r);
      if (audit_cmd->count("--theta")) params.theta = theta;
      if (audit_cmd->count("--epsilon")) params.epsilon = epsilon;
      if (audit_cmd->count("--eps1")) params.epsilon1 = eps1;
      if (audit_cmd->count("--eps2")) params.epsilon2 = eps2;
      params.validate(cmn.r);
      spex::MaxCrossingResult mc =
          spex::max_crossing_partition(g, cmn.r, cmn.seed);
      spex::WLClassification wl = spex::classify_w_l(g, mc.labeling, params);
      spex::StructureClauses structure =
          spex::audit_extremal_structure(g, cmn.k, cmn.r);
      spex::PartConclusions conclusions =
          spex::audit_part_conclusions(g, mc.labeling, wl.w_vertices);
      ordered_json payload;
      payload["graph6"] = spex::graph6_encode(g);
      payload["params"] = spex::audit_params_to_json(params, cmn.k, cmn.r);
      ordered_json part;
      part["labels"] = mc.labeling.label;
      part["class_sizes"] = mc.labeling.class_sizes;
      part["crossing"] = mc.crossing;
      part["certified_global"] = mc.certified_global;
      payload["max_crossing_partition"] = part;
      payload["wl"] = spex::wl_to_json(wl);
      ordered_json concl;
      concl["part_independent_outside_w"] = conclusions.part_independent_outside_w;
      concl["w_degrees"] = conclusions.w_degrees;
      concl["w_dominating"] = conclusions.w_dominating;
      payload["part_conclusions"] = concl;
      payload["structure"] = spex::structure_to_json(structure);
      deliver_report(cmn, "audit", args_json(cmn), payload);
      if (assert_pass && !structure.pass) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "spex: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
