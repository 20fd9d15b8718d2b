#include "oddplanar/independent_set.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "oddplanar/error.hpp"

namespace oddplanar {

std::int64_t node_budget_from_env() {
  const char* env = std::getenv("ODDPLANAR_BB_BUDGET");
  if (env == nullptr) return kDefaultNodeBudget;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) return kDefaultNodeBudget;
  return value;
}

namespace {

struct Bits {
  std::uint64_t w[2] = {0, 0};

  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const { return (w[0] | w[1]) != 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  int first() const { return w[0] ? std::countr_zero(w[0]) : 64 + std::countr_zero(w[1]); }
  Bits operator&(const Bits& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
  Bits operator|(const Bits& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
  Bits without(const Bits& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

  template <class F>
  void for_each(F f) const {
    for (int k = 0; k < 2; ++k)
      for (std::uint64_t x = w[k]; x; x &= x - 1) f(64 * k + std::countr_zero(x));
  }
};

class Solver {
 public:
  Solver(int n, const std::vector<std::pair<int, int>>& edges, std::int64_t budget)
      : n_(n), budget_(budget), adj_(n), closed_(n) {
    for (auto [u, v] : edges) {
      if (u == v) continue;
      adj_[u].set(v);
      adj_[v].set(u);
    }
    for (int v = 0; v < n; ++v) {
      closed_[v] = adj_[v];
      closed_[v].set(v);
    }
  }

  std::vector<int> run() {
    Bits all;
    for (int v = 0; v < n_; ++v) all.set(v);
    search(all);
    return best_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  void search(Bits p) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("branch and bound exceeded " + std::to_string(budget_) + " nodes");
    const std::size_t mark = chosen_.size();
    p = reduce(p);
    if (!p.any()) {
      if (chosen_.size() > best_.size()) best_ = chosen_;
    } else if (chosen_.size() + upper_bound(p) > best_.size()) {
      int pick = -1, pick_deg = -1;
      p.for_each([&](int v) {
        const int d = (adj_[v] & p).count();
        if (d > pick_deg) pick = v, pick_deg = d;
      });
      chosen_.push_back(pick);
      search(p.without(closed_[pick]));
      chosen_.pop_back();
      // Without pick, an optimum also avoids every mirror of pick.
      Bits drop;
      drop.set(pick);
      const Bits n1 = adj_[pick] & p;
      Bits n2;
      n1.for_each([&](int u) { n2 = n2 | (adj_[u] & p); });
      n2 = n2.without(closed_[pick]);
      n2.for_each([&](int m) {
        const Bits rest = n1.without(adj_[m]);
        bool clique = true;
        rest.for_each([&](int a) {
          if (clique && rest.without(closed_[a]).any()) clique = false;
        });
        if (clique) drop.set(m);
      });
      search(p.without(drop));
    }
    chosen_.resize(mark);
  }

  // Degree 0/1 vertices are taken; a vertex whose closed neighbourhood
  // contains that of a neighbour is removed.
  Bits reduce(Bits p) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int k = 0; k < 2 && !changed; ++k) {
        for (std::uint64_t x = p.w[k]; x && !changed; x &= x - 1) {
          const int v = 64 * k + std::countr_zero(x);
          const Bits nv = adj_[v] & p;
          const int d = nv.count();
          if (d <= 1) {
            chosen_.push_back(v);
            p = p.without(closed_[v]);
            changed = true;
            break;
          }
          const Bits cv = closed_[v] & p;
          nv.for_each([&](int u) {
            if (!changed && !cv.without(closed_[u]).any()) {
              p.reset(u);
              changed = true;
            }
          });
        }
      }
    }
    return p;
  }

  std::size_t upper_bound(Bits p) const {
    std::size_t bound = 0;
    while (p.any()) {
      const int v = p.first();
      p.reset(v);
      const Bits nv = adj_[v] & p;
      if (!nv.any()) {
        ++bound;
        continue;
      }
      bool found = false;
      nv.for_each([&](int a) {
        if (found) return;
        const Bits common = adj_[a] & nv;
        if (common.any()) {
          const int b = common.first();
          p.reset(a);
          p.reset(b);
          found = true;
        }
      });
      if (found) {
        ++bound;
        continue;
      }
      // 5-cycle v a b c d with a, d neighbours of v.
      nv.for_each([&](int a) {
        if (found) return;
        (adj_[a] & p).without(nv).for_each([&](int b) {
          if (found) return;
          (adj_[b] & p).without(nv).for_each([&](int c) {
            if (found || c == a) return;
            const Bits ds = (adj_[c] & nv).without(closed_[a]);
            if (ds.any()) {
              const int d = ds.first();
              p.reset(a);
              p.reset(b);
              p.reset(c);
              p.reset(d);
              found = true;
            }
          });
        });
      });
      if (found) {
        bound += 2;
        continue;
      }
      p.reset(nv.first());
      ++bound;
    }
    return bound;
  }

  int n_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<Bits> adj_;
  std::vector<Bits> closed_;
  std::vector<int> chosen_;
  std::vector<int> best_;
};

}  // namespace

IndependentSet maximum_independent_set(int n, const std::vector<std::pair<int, int>>& edges,
                                       std::int64_t budget) {
  if (n > 128) throw BudgetExceeded("exact independent set limited to 128 vertices, got " + std::to_string(n));
  Solver solver(n, edges, budget);
  IndependentSet out;
  out.vertices = solver.run();
  std::sort(out.vertices.begin(), out.vertices.end());
  out.nodes = solver.nodes();
  return out;
}

}  // namespace oddplanar
