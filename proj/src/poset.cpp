#include "kzlab/core/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kzlab {

bool Poset::is_reflexive() const {
  for (int i = 0; i < size(); ++i)
    if (!leq(i, i)) return false;
  return true;
}

bool Poset::is_transitive() const {
  const int n = size();
  for (int j = 0; j < n; ++j)
    for (int i : below[j].elements())
      if (!below[i].subset_of(below[j])) return false;
  return true;
}

bool Poset::is_antisymmetric() const {
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq(i, j) && leq(j, i)) return false;
  return true;
}

std::optional<int> Poset::join_of(const Mask& subset) const {
  const int n = size();
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    if (!subset.subset_of(below[u])) continue;  // u is an upper bound?
    if (!best || leq(u, *best)) best = u;
  }
  if (!best) return std::nullopt;
  // certify: least among all upper bounds
  for (int u = 0; u < n; ++u)
    if (subset.subset_of(below[u]) && !leq(*best, u)) return std::nullopt;
  return best;
}

std::optional<int> Poset::meet_of(const Mask& subset) const {
  const int n = size();
  std::optional<int> best;
  auto lower_bound_of = [&](int l) {
    for (int s : subset.elements())
      if (!leq(l, s)) return false;
    return true;
  };
  for (int l = 0; l < n; ++l) {
    if (!lower_bound_of(l)) continue;
    if (!best || leq(*best, l)) best = l;
  }
  if (!best) return std::nullopt;
  for (int l = 0; l < n; ++l)
    if (lower_bound_of(l) && !leq(l, *best)) return std::nullopt;
  return best;
}

Mask Poset::down_closure(const Mask& s) const {
  Mask r(size());
  for (int i : s.elements()) r |= below[i];
  return r;
}

PosetPtr Poset::chain(int n) {
  auto p = std::make_shared<Poset>();
  for (int i = 0; i < n; ++i) {
    p->names.push_back("c" + std::to_string(i));
    Mask m(n);
    for (int j = 0; j <= i; ++j) m.set(j);
    p->below.push_back(m);
  }
  return p;
}

PosetPtr Poset::antichain(int n) {
  auto p = std::make_shared<Poset>();
  for (int i = 0; i < n; ++i) {
    p->names.push_back("a" + std::to_string(i));
    Mask m(n);
    m.set(i);
    p->below.push_back(m);
  }
  return p;
}

PosetPtr Poset::make(std::vector<std::string> names,
                     const std::vector<std::pair<int, int>>& leq_pairs) {
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : leq_pairs) r[a][b] = true;
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  auto p = std::make_shared<Poset>();
  p->names = std::move(names);
  p->below.assign(n, Mask(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (r[i][j]) p->below[j].set(i);
  return p;
}

std::pair<PosetPtr, std::vector<int>> Poset::quotient_preorder(const Poset& p) {
  const int n = p.size();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(reps.size());
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i)) cls[j] = cls[i];
    reps.push_back(i);
  }
  auto q = std::make_shared<Poset>();
  const int m = static_cast<int>(reps.size());
  q->below.assign(m, Mask(m));
  for (int a = 0; a < m; ++a) {
    q->names.push_back(p.names[reps[a]]);
    for (int b = 0; b < m; ++b)
      if (p.leq(reps[b], reps[a])) q->below[a].set(b);
  }
  return {q, cls};
}

bool Mono::validate() const {
  if (!src || !dst) return false;
  if (static_cast<int>(at.size()) != src->size()) return false;
  for (int v : at)
    if (v < 0 || v >= dst->size()) return false;
  for (int j = 0; j < src->size(); ++j)
    for (int i : src->below[j].elements())
      if (!dst->leq(at[i], at[j])) return false;
  return true;
}

Mono Mono::identity(PosetPtr p) {
  Mono m{p, p, {}};
  m.at.resize(p->size());
  std::iota(m.at.begin(), m.at.end(), 0);
  return m;
}

Mono Mono::constant(PosetPtr s, PosetPtr d, int value) {
  Mono m{std::move(s), std::move(d), {}};
  m.at.assign(m.src->size(), value);
  return m;
}

Mono Mono::compose(const Mono& g, const Mono& f) {
  Mono m{f.src, g.dst, {}};
  m.at.resize(f.src->size());
  for (int i = 0; i < f.src->size(); ++i) m.at[i] = g.at[f.at[i]];
  return m;
}

bool same_map(const Mono& f, const Mono& g) { return f.at == g.at; }

bool cell_leq(const Mono& f, const Mono& g) {
  for (int i = 0; i < f.src->size(); ++i)
    if (!f.dst->leq(f.at[i], g.at[i])) return false;
  return true;
}

namespace {

// DFS over assignments along a linear extension of the source; a partial
// assignment is extended at position k only with values above every
// already-assigned predecessor, which is sound exactly because elements are
// visited in a linear extension.
struct MonoDfs {
  PosetPtr src, dst;
  std::vector<int> order;  // linear extension of src
  std::vector<int> at;
  long long budget, seen = 0;

  MonoDfs(PosetPtr s, PosetPtr d, long long b) : src(s), dst(d), budget(b) {
    const int n = src->size();
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step)
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        bool ready = true;
        for (int j : src->below[i].elements())
          if (j != i && !used[j]) { ready = false; break; }
        if (ready) { order.push_back(i); used[i] = true; break; }
      }
    at.assign(n, -1);
  }

  enum { kContinue = 0, kStop = 1, kBudget = 2 };

  int run(int k, const std::function<bool(const Mono&)>& fn) {
    if (k == static_cast<int>(order.size())) {
      if (budget > 0 && seen >= budget) return kBudget;
      ++seen;
      Mono m{src, dst, at};
      return fn(m) ? kContinue : kStop;
    }
    const int e = order[k];
    for (int v = 0; v < dst->size(); ++v) {
      bool ok = true;
      for (int j : src->below[e].elements()) {
        if (j == e) continue;
        if (at[j] >= 0 && !dst->leq(at[j], v)) { ok = false; break; }
      }
      if (!ok) continue;
      at[e] = v;
      int r = run(k + 1, fn);
      at[e] = -1;
      if (r != kContinue) return r;
    }
    return kContinue;
  }
};

}  // namespace

bool for_each_monotone(PosetPtr src, PosetPtr dst, long long budget,
                       const std::function<bool(const Mono&)>& fn) {
  if (src->size() == 0) {
    Mono m{src, dst, {}};
    fn(m);
    return true;
  }
  if (dst->size() == 0) return true;  // no maps from nonempty src
  MonoDfs dfs(src, dst, budget);
  return dfs.run(0, fn) != MonoDfs::kBudget;
}

std::optional<std::vector<Mono>> enumerate_monotone(PosetPtr src, PosetPtr dst,
                                                    long long budget) {
  std::vector<Mono> out;
  long long n = 0;
  bool ok = for_each_monotone(src, dst, budget, [&](const Mono& m) {
    out.push_back(m);
    ++n;
    return true;
  });
  if (!ok) return std::nullopt;
  return out;
}

long long count_monotone(PosetPtr src, PosetPtr dst, long long cap) {
  long long n = 0;
  for_each_monotone(src, dst, cap, [&](const Mono&) {
    ++n;
    return true;
  });
  return n;
}

bool posets_isomorphic(const Poset& a, const Poset& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  // degree-sequence prefilter, then permutation search
  auto profile = [](const Poset& p, int i) {
    int down = p.below[i].count(), up = 0;
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) ++up;
    return std::pair(down, up);
  };
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (profile(a, i) != profile(b, v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (a.leq(j, i) != b.leq(perm[j], v)) ok = false;
        if (a.leq(i, j) != b.leq(v, perm[j])) ok = false;
      }
      if (!ok) continue;
      perm[i] = v;
      used[v] = true;
      if (go(i + 1)) return true;
      used[v] = false;
      perm[i] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace kzlab
