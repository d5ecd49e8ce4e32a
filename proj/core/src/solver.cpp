#include "hitlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace hitlab {

namespace {

// Branch-and-bound state over the residual system left after
// preprocessing. Edges live in one flat word array, sorted by
// (cardinality, canonical position); active sets are index lists, one
// scratch buffer per depth. Elements excluded on earlier sibling
// branches accumulate in `excl_` and are removed when the node unwinds.
class Searcher {
 public:
  Searcher(int n, const std::vector<Edge>& edges, std::uint64_t budget)
      : n_(n), ew_((n + 63) / 64), budget_(budget), excl_(ew_, 0) {
    const std::size_t m = edges.size();
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return edges[a].count() < edges[b].count();
                     });
    ebits_.resize(m * ew_);
    for (std::size_t i = 0; i < m; ++i) {
      const auto w = edges[order[i]].words();
      std::copy(w.begin(), w.end(), ebits_.begin() + i * ew_);
    }
    active_at_.resize(n + 2);
    for (auto& a : active_at_) a.reserve(m);
    auto& root = active_at_[0];
    root.resize(m);
    std::iota(root.begin(), root.end(), 0);
    chosen_.reserve(n);
  }

  // `incumbent` must be a valid hitting set of the residual system.
  void run(const std::vector<int>& incumbent) {
    best_ = incumbent;
    dfs(0);
  }

  const std::vector<int>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exceeded() const { return exceeded_; }

 private:
  const std::uint64_t* edge(std::uint32_t e) const { return &ebits_[e * ew_]; }

  bool edge_has(std::uint32_t e, int v) const {
    return (edge(e)[v >> 6] >> (v & 63)) & 1;
  }

  void dfs(int depth) {
    if (exceeded_) return;
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return;
    }
    auto& active = active_at_[depth];
    const int best_size = static_cast<int>(best_.size());
    if (active.empty()) {
      if (depth < best_size) best_ = chosen_;
      return;
    }
    if (depth + 1 >= best_size) return;  // any completion adds >= 1 element

    if (depth + 2 >= best_size) {
      // Only a one-element completion can improve: it must lie in every
      // active edge.
      std::uint64_t common[16];
      const std::uint64_t* first = edge(active[0]);
      for (int w = 0; w < ew_; ++w) common[w] = first[w] & ~excl_[w];
      for (std::size_t i = 1; i < active.size(); ++i) {
        const std::uint64_t* e = edge(active[i]);
        bool any = false;
        for (int w = 0; w < ew_; ++w) {
          common[w] &= e[w];
          any |= common[w] != 0;
        }
        if (!any) return;
      }
      for (int w = 0; w < ew_; ++w) {
        if (common[w]) {
          chosen_.push_back(w * 64 + std::countr_zero(common[w]));
          best_ = chosen_;
          chosen_.pop_back();
          return;
        }
      }
      return;
    }

    // Lower bound: |partial| + greedy disjoint packing of the residual
    // (on effective edges, i.e. minus excluded elements). Stops as soon
    // as it is large enough to prune; also catches edges made unhittable
    // by exclusions.
    const int need = best_size - depth;
    {
      std::uint64_t taken[16] = {0};
      int pack = 0;
      for (std::uint32_t e : active) {
        const std::uint64_t* eb = edge(e);
        bool disjoint = true;
        bool empty_eff = true;
        for (int w = 0; w < ew_; ++w) {
          const std::uint64_t eff = eb[w] & ~excl_[w];
          if (eff & taken[w]) disjoint = false;
          empty_eff &= eff == 0;
        }
        if (empty_eff) return;  // this edge can no longer be hit
        if (disjoint) {
          for (int w = 0; w < ew_; ++w) taken[w] |= eb[w] & ~excl_[w];
          if (depth + ++pack >= best_size) return;
        }
      }
    }

    // Branch on the first active edge (minimum cardinality, canonical
    // tie-break), trying its non-excluded elements in ascending order.
    const std::uint64_t* be = edge(active[0]);
    int elems[1024];
    int nelems = 0;
    for (int w = 0; w < ew_; ++w) {
      std::uint64_t bits = be[w] & ~excl_[w];
      while (bits) {
        elems[nelems++] = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
      }
    }
    if (nelems == 0) return;  // fully excluded: no consistent hit

    auto& child = active_at_[depth + 1];
    for (int i = 0; i < nelems && !exceeded_; ++i) {
      const int v = elems[i];
      child.clear();
      for (std::uint32_t e : active) {
        if (!edge_has(e, v)) child.push_back(e);
      }
      chosen_.push_back(v);
      dfs(depth + 1);
      chosen_.pop_back();
      excl_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    for (int i = 0; i < nelems; ++i) {
      excl_[elems[i] >> 6] &= ~(std::uint64_t{1} << (elems[i] & 63));
    }
  }

  int n_;
  int ew_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
  std::vector<std::uint64_t> ebits_;
  std::vector<std::vector<std::uint32_t>> active_at_;
  std::vector<std::uint64_t> excl_;
  std::vector<int> chosen_;
  std::vector<int> best_;
};

}  // namespace

SolveResult solve_min_hitting(const SetSystem& sys, std::uint64_t node_budget) {
  const int n = sys.n();
  const SetSystem reduced = reduce(sys);

  // Forced singletons: the only way to hit {v} is v itself.
  VertexSet forced(n);
  for (const Edge& e : reduced.edges()) {
    if (e.count() == 1) forced.set(e.first_set());
  }
  std::vector<Edge> rest;
  rest.reserve(reduced.edge_count());
  for (const Edge& e : reduced.edges()) {
    if (!e.intersects(forced)) rest.push_back(e);
  }

  SolveResult result;
  result.witness = forced;
  result.nodes = 0;
  if (rest.empty()) {
    result.size = forced.count();
    result.status = SolveStatus::optimal;
    return result;
  }

  const SetSystem residual = SetSystem::from_bitvecs(n, std::move(rest));
  const std::vector<int> incumbent = greedy_hitting(residual).elements();
  std::vector<int> incumbent0(incumbent.size());
  for (std::size_t i = 0; i < incumbent.size(); ++i) incumbent0[i] = incumbent[i] - 1;

  Searcher searcher(n, residual.edges(), node_budget);
  searcher.run(incumbent0);

  for (int v : searcher.best()) result.witness.set(v);
  result.size = result.witness.count();
  result.nodes = searcher.nodes();
  result.status =
      searcher.exceeded() ? SolveStatus::budget_exceeded : SolveStatus::optimal;
  if (!is_hitting(sys, result.witness)) {
    throw Error("solve_min_hitting: internal error, witness does not hit");
  }
  return result;
}

SolveResult exhaustive_min_hitting(const SetSystem& sys) {
  const int n = sys.n();
  if (n > 20) throw DomainError("exhaustive_min_hitting refuses n > 20");

  SolveResult result;
  result.status = SolveStatus::optimal;
  std::uint64_t tested = 0;
  for (int m = 0; m <= n; ++m) {
    // Lexicographic m-combinations of {0..n-1}.
    std::vector<int> comb(m);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
      ++tested;
      VertexSet h(n);
      for (int v : comb) h.set(v);
      if (is_hitting(sys, h)) {
        result.size = m;
        result.witness = h;
        result.nodes = tested;
        return result;
      }
      int i = m - 1;
      while (i >= 0 && comb[i] == n - m + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  // Unreachable: the full set hits everything (edges are nonempty).
  throw Error("exhaustive_min_hitting: no hitting set found");
}

VertexSet greedy_hitting(const SetSystem& sys) {
  const int n = sys.n();
  VertexSet result(n);
  std::vector<std::uint32_t> uncovered(sys.edge_count());
  std::iota(uncovered.begin(), uncovered.end(), 0);
  const auto& edges = sys.edges();
  while (!uncovered.empty()) {
    int best_v = -1;
    std::size_t best_c = 0;
    for (int v = 0; v < n; ++v) {
      std::size_t c = 0;
      for (std::uint32_t e : uncovered) c += edges[e].test(v);
      if (c > best_c) {
        best_c = c;
        best_v = v;
      }
    }
    result.set(best_v);
    std::erase_if(uncovered,
                  [&](std::uint32_t e) { return edges[e].test(best_v); });
  }
  return result;
}

int packing_lower_bound(const SetSystem& sys) {
  VertexSet taken(sys.n());
  int count = 0;
  for (const Edge& e : sys.edges()) {
    if (!e.intersects(taken)) {
      ++count;
      taken.or_with(e);
    }
  }
  return count;
}

int max_independent_size(const SetSystem& sys) {
  const SolveResult r = solve_min_hitting(sys);
  if (r.status != SolveStatus::optimal) {
    throw BudgetExceededError("max_independent_size: solve exceeded node budget");
  }
  return sys.n() - r.size;
}

}  // namespace hitlab
