#include "spex/formulas.hpp"

#include <stdexcept>

#include "spex/enumerate.hpp"

namespace spex {

long long turan_edges(long long n, int r) {
  if (r < 1) throw std::invalid_argument("turan_edges: r must be >= 1");
  if (n < 0) throw std::invalid_argument("turan_edges: n must be >= 0");
  long long q = n / r, rem = n % r;
  long long intra = rem * (q + 1) * q / 2 + (r - rem) * q * (q - 1) / 2;
  return n * (n - 1) / 2 - intra;
}

ExValue ex_disjoint_cliques(long long n, int k, int r) {
  if (k < 1 || r < 1)
    throw std::invalid_argument("ex_disjoint_cliques: k, r must be >= 1");
  if (n < k - 1)
    throw std::invalid_argument("ex_disjoint_cliques: n must be >= k-1");
  ExValue out;
  long long rest = n - k + 1;
  out.value = turan_edges(rest, r) + static_cast<long long>(k - 1) * rest +
              static_cast<long long>(k - 1) * (k - 2) / 2;
  out.regime_ok = n >= static_cast<long long>(k) * (r + 1);
  return out;
}

long long chvatal_hanson(long long nu, long long delta) {
  if (nu < 1 || delta < 1)
    throw std::invalid_argument("chvatal_hanson: nu and delta must be >= 1");
  long long half_down = delta / 2;
  long long half_up = (delta + 1) / 2;
  long long value = delta * nu + half_down * (nu / half_up);
  if (value > delta * nu + nu)
    throw std::logic_error("chvatal_hanson: value exceeded its stated bound");
  return value;
}

ChOracleResult chvatal_hanson_oracle(int nu, int delta, int n_max) {
  if (nu < 1 || delta < 1)
    throw std::invalid_argument("chvatal_hanson_oracle: nu and delta must be >= 1");
  if (n_max < 1 || n_max > kMaxEnumerationVertices)
    throw std::invalid_argument("chvatal_hanson_oracle: n_max must be in [1,10]");
  ChOracleResult out;
  out.witness = Graph(0);
  // Matching number and max degree are monotone under taking induced
  // subgraphs, so the constraint prunes the augmentation tree hereditarily.
  // Isolated vertices never change e, nu or delta, which is why scanning the
  // n_max level alone captures the maximum over all orders <= n_max.
  auto keep = [&](const Graph& g) {
    if (g.max_degree() > delta) return false;
    return max_matching(g).size() <= nu;
  };
  auto visit = [&](const Graph& g) {
    ++out.classes_scanned;
    long long e = g.edge_count();
    if (e > out.max_edges) {
      out.max_edges = e;
      out.witness = g;
    }
  };
  enumerate_nonisomorphic_pruned(n_max, keep, visit);
  return out;
}

long long intersection_bound(std::span<const long long> sizes, long long union_size) {
  if (sizes.empty())
    throw std::invalid_argument("intersection_bound: need at least one set");
  long long m = static_cast<long long>(sizes.size());
  long long sum = 0;
  for (long long s : sizes) sum += s;
  return sum - (m - 1) * union_size;
}

}  // namespace spex
