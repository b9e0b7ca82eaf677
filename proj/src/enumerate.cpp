#include "spex/enumerate.hpp"

#include <unordered_set>

#include "spex/canonical.hpp"

namespace spex {

namespace {

struct Generator {
  int target = 0;
  const std::function<bool(const Graph&)>* keep = nullptr;
  const std::function<void(const Graph&)>* emit = nullptr;

  void grow(const Graph& g) {
    if (g.vertex_count() == target) {
      (*emit)(g);
      return;
    }
    int m = g.vertex_count();
    std::unordered_set<std::string> child_classes;  // local to this parent
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      Graph child(m + 1);
      g.for_each_edge([&](int u, int v) { child.add_edge(u, v); });
      for (int v = 0; v < m; ++v)
        if ((mask >> v) & 1u) child.add_edge(v, m);
      if (!(*keep)(child)) continue;
      CanonicalResult canon = canonical_full(child);
      // canonical deletion vertex: the one landing in the last canonical
      // position; the appended vertex must share its orbit. This must be
      // checked before deduplication: with pseudosimilar vertices the same
      // child class shows up both in rule-passing and rule-failing copies,
      // and a failing copy must not shadow the passing one.
      int v_star = -1;
      for (int v = 0; v <= m; ++v)
        if (canon.labeling[v] == m) {
          v_star = v;
          break;
        }
      if (canon.orbit[v_star] != canon.orbit[m]) continue;
      if (!child_classes.insert(canon.form).second) continue;
      grow(child);
    }
  }
};

}  // namespace

void enumerate_nonisomorphic_pruned(
    int n, const std::function<bool(const Graph&)>& keep_subtree,
    const std::function<void(const Graph&)>& emit) {
  if (n < 0) throw std::invalid_argument("enumerate_nonisomorphic: n must be >= 0");
  if (n > kMaxEnumerationVertices)
    throw std::length_error("enumerate_nonisomorphic: refusing n > 10");
  Generator gen;
  gen.target = n;
  gen.keep = &keep_subtree;
  gen.emit = &emit;
  Graph empty(0);
  if (n == 0) {
    emit(empty);
    return;
  }
  gen.grow(empty);
}

void enumerate_nonisomorphic(int n, const std::function<void(const Graph&)>& emit) {
  enumerate_nonisomorphic_pruned(
      n, [](const Graph&) { return true; }, emit);
}

}  // namespace spex
