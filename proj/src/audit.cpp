#include "spex/audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spex/spectral.hpp"
#include "spex/vertex_set.hpp"

namespace spex {

AuditParams AuditParams::defaults(int k, int r) {
  if (k < 1 || r < 1) throw std::invalid_argument("AuditParams: k, r must be >= 1");
  AuditParams p;
  double ceiling = 1.0 / (20.0 * k * std::pow(static_cast<double>(r), 4) * (r + 1));
  p.theta = 0.9 * ceiling;
  p.epsilon1 = 0.9 * p.theta;
  p.epsilon2 = 0.81 * p.theta;
  p.epsilon = 0.36 * p.theta * p.theta;
  p.validate(r);
  return p;
}

void AuditParams::validate(int r) const {
  if (!(epsilon > 0 && theta > 0 && epsilon1 > 0 && epsilon2 > 0))
    throw std::invalid_argument("AuditParams: all constants must be positive");
  if (epsilon > theta * theta)
    throw std::invalid_argument("AuditParams: epsilon must be <= theta^2");
  if (!(epsilon2 < epsilon1))
    throw std::invalid_argument("AuditParams: epsilon2 must be < epsilon1");
  if (!(quadratic_margin(r) < 0))
    throw std::invalid_argument(
        "AuditParams: epsilon - eps1*eps2 + (r-1)/(2r)*eps2^2 must be negative");
}

double AuditParams::theta_ceiling(int k, int r) const {
  return 1.0 / (20.0 * k * std::pow(static_cast<double>(r), 4) * (r + 1));
}

double AuditParams::quadratic_margin(int r) const {
  return epsilon - epsilon1 * epsilon2 +
         (r - 1.0) / (2.0 * r) * epsilon2 * epsilon2;
}

namespace {

long long crossing_of_labels(const Graph& g, const std::vector<int>& label) {
  long long crossing = 0;
  g.for_each_edge([&](int u, int v) {
    if (label[u] != label[v]) ++crossing;
  });
  return crossing;
}

// Greedy ascent: repeatedly apply the best single-vertex relabeling.
long long greedy_ascent(const Graph& g, int r, std::vector<int>& label) {
  int n = g.vertex_count();
  long long crossing = crossing_of_labels(g, label);
  bool improved = true;
  while (improved) {
    improved = false;
    long long best_gain = 0;
    int best_v = -1, best_l = -1;
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb_by_label(r, 0);
      g.for_each_neighbor(v, [&](int u) { ++nb_by_label[label[u]]; });
      int cur = nb_by_label[label[v]];
      for (int l = 0; l < r; ++l) {
        if (l == label[v]) continue;
        long long gain = cur - nb_by_label[l];  // crossing delta of moving v to l
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
          best_l = l;
        }
      }
    }
    if (best_v >= 0) {
      label[best_v] = best_l;
      crossing += best_gain;
      improved = true;
    }
  }
  return crossing;
}

}  // namespace

MaxCrossingResult max_crossing_partition(const Graph& g, int r, std::uint64_t seed,
                                         int restarts) {
  if (r < 2) throw std::invalid_argument("max_crossing_partition: r must be >= 2");
  if (restarts < 1) throw std::invalid_argument("max_crossing_partition: restarts >= 1");
  int n = g.vertex_count();
  MaxCrossingResult out;
  out.seed = seed;

  // Exhaust all labelings when feasible.
  double labelings = std::pow(static_cast<double>(r), n);
  if (labelings <= 1e7) {
    std::vector<int> label(n, 0), best_label(n, 0);
    long long best = crossing_of_labels(g, label);
    long long cur = best;
    // odometer with incremental crossing updates
    while (true) {
      int i = 0;
      while (i < n) {
        int old = label[i];
        int next = old + 1;
        bool carry = next == r;
        if (carry) next = 0;
        g.for_each_neighbor(i, [&](int u) {
          cur += (label[u] != next) - (label[u] != old);
        });
        label[i] = next;
        if (!carry) break;
        ++i;
      }
      if (i == n) break;  // wrapped around
      if (cur > best) {
        best = cur;
        best_label = label;
      }
    }
    out.labeling.r = r;
    out.labeling.label = best_label;
    out.labeling.class_sizes.assign(r, 0);
    for (int l : best_label) ++out.labeling.class_sizes[l];
    out.crossing = best;
    out.certified_global = true;
    out.restarts_used = 0;
    return out;
  }

  std::vector<int> best_label;
  long long best = -1;
  for (int restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(restart) * 0x9e3779b9ULL);
    std::vector<int> label(n);
    for (int v = 0; v < n; ++v) label[v] = static_cast<int>(rng() % r);
    long long crossing = greedy_ascent(g, r, label);
    if (crossing > best) {
      best = crossing;
      best_label = label;
    }
  }
  out.labeling.r = r;
  out.labeling.label = best_label;
  out.labeling.class_sizes.assign(r, 0);
  for (int l : best_label) ++out.labeling.class_sizes[l];
  out.crossing = best;
  out.certified_global = false;
  out.restarts_used = restarts;
  return out;
}

WLClassification classify_w_l(const Graph& g, const PartitionLabeling& p,
                              const AuditParams& params) {
  int n = g.vertex_count();
  p.validate(n);
  params.validate(p.r);
  WLClassification out;
  out.w_threshold = 2.0 * params.theta * n;
  out.l_threshold = (1.0 - 1.0 / p.r - params.epsilon1) * n;
  for (int v = 0; v < n; ++v) {
    int intra = 0;
    g.for_each_neighbor(v, [&](int u) {
      if (p.label[u] == p.label[v]) ++intra;
    });
    int d = g.degree(v);
    if (intra >= out.w_threshold) out.w_vertices.push_back(v);
    if (d <= out.l_threshold) out.l_vertices.push_back(v);
    if (intra > static_cast<double>(d) / p.r + 1e-12)
      out.crossing_local_violations.push_back(v);
  }
  out.w_bound_margin = params.theta * n - static_cast<double>(out.w_vertices.size());
  out.l_bound_margin = params.epsilon2 * n - static_cast<double>(out.l_vertices.size());
  out.w_within_bound = out.w_bound_margin >= 0;
  out.l_within_bound = out.l_bound_margin >= 0;
  return out;
}

StructureClauses audit_extremal_structure(const Graph& g, int k, int r) {
  if (k < 1 || r < 1)
    throw std::invalid_argument("audit_extremal_structure: k, r must be >= 1");
  int n = g.vertex_count();
  StructureClauses out;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) out.dominating.push_back(v);
  // Vertices in singleton parts are dominating too, so the family can carry
  // more than k-1 of them at small n; dominating vertices are mutually
  // interchangeable, so removing any k-1 of them is equivalent.
  out.dominating_count_ok = static_cast<int>(out.dominating.size()) >= k - 1;

  std::vector<int> removed(out.dominating.begin(),
                           out.dominating.begin() +
                               std::min<std::size_t>(out.dominating.size(), k - 1));
  if (!out.dominating_count_ok) removed.clear();
  InducedSubgraph rest = delete_vertices(g, removed);
  const Graph& h = rest.graph;
  int m = h.vertex_count();

  // complement components; the remainder is complete multipartite iff each
  // one is an independent set of h
  std::vector<int> comp(m, -1);
  int comps = 0;
  out.remainder_multipartite = true;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    std::vector<int> members;
    comp[s] = comps;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u = 0; u < m; ++u) {
        if (u == v || comp[u] >= 0) continue;
        if (!h.has_edge(u, v)) {
          comp[u] = comps;
          stack.push_back(u);
        }
      }
    }
    for (std::size_t i = 0; i < members.size() && out.remainder_multipartite; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (h.has_edge(members[i], members[j])) {
          out.remainder_multipartite = false;
          break;
        }
    out.part_sizes.push_back(static_cast<int>(members.size()));
    ++comps;
  }
  std::sort(out.part_sizes.rbegin(), out.part_sizes.rend());

  int expected_parts = std::min(r, m);
  out.part_count_ok = comps == expected_parts || (m == 0 && comps == 0);
  int largest = out.part_sizes.empty() ? 0 : out.part_sizes.front();
  int smallest_padded = comps < r ? 0 : out.part_sizes.back();
  out.balanced = largest - smallest_padded <= 1;

  out.pass = out.dominating_count_ok && out.remainder_multipartite &&
             out.part_count_ok && out.balanced;
  if (!out.dominating_count_ok)
    out.failing_clause = "dominating_count";
  else if (!out.remainder_multipartite)
    out.failing_clause = "remainder_multipartite";
  else if (!out.part_count_ok)
    out.failing_clause = "part_count";
  else if (!out.balanced)
    out.failing_clause = "balance";
  return out;
}

PartConclusions audit_part_conclusions(const Graph& g, const PartitionLabeling& p,
                                       const std::vector<int>& w_vertices) {
  int n = g.vertex_count();
  p.validate(n);
  std::vector<char> in_w(n, 0);
  for (int v : w_vertices) {
    if (v < 0 || v >= n) throw std::out_of_range("audit_part_conclusions: bad W vertex");
    in_w[v] = 1;
  }
  PartConclusions out;
  out.part_independent_outside_w.assign(p.r, true);
  g.for_each_edge([&](int u, int v) {
    if (!in_w[u] && !in_w[v] && p.label[u] == p.label[v])
      out.part_independent_outside_w[p.label[u]] = false;
  });
  for (int v : w_vertices) {
    int d = g.degree(v);
    out.w_degrees.push_back(d);
    out.w_dominating.push_back(d == n - 1);
  }
  return out;
}

double balancing_gain(int k, int r, const std::vector<int>& parts, int i, int j) {
  if (i < 0 || j < 0 || i >= static_cast<int>(parts.size()) ||
      j >= static_cast<int>(parts.size()) || i == j)
    throw std::invalid_argument("balancing_gain: bad part indices");
  if (parts[i] < parts[j] + 2)
    throw std::invalid_argument("balancing_gain: requires parts[i] >= parts[j] + 2");
  double before = quotient_rho(k, r, parts);
  std::vector<int> moved = parts;
  --moved[i];
  ++moved[j];
  double after = quotient_rho(k, r, moved);
  return after - before;
}

}  // namespace spex
