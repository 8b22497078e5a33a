#include "kzlab/cli/corpus.hpp"

#include <algorithm>
#include <random>

namespace kzlab {

namespace {

// Enumerates labeled posets on n elements whose natural order is a linear
// extension (every strict relation goes upward), then dedupes by
// isomorphism. Every iso class has such a representative.
std::vector<PosetPtr> posets_of_size(int n) {
  std::vector<PosetPtr> out;
  if (n == 0) {
    out.push_back(Poset::antichain(0));
    return out;
  }
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  const int bits = static_cast<int>(slots.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));

  for (std::uint32_t rel = 0; rel < (1u << bits); ++rel) {
    // transitive-closed patterns only, so each labeled poset appears once
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int b = 0; b < bits; ++b)
      if (rel & (1u << b)) r[slots[b].first][slots[b].second] = true;
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      for (int j = 0; j < n && closed; ++j)
        if (r[i][j])
          for (int k = 0; k < n; ++k)
            if (r[j][k] && !r[i][k]) { closed = false; break; }
    if (!closed) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][j]) pairs.push_back({i, j});
    auto p = Poset::make(names, pairs);
    bool dup = false;
    for (const auto& q : out)
      if (q->size() == n && posets_isomorphic(*p, *q)) { dup = true; break; }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<PosetPtr> poset_corpus(int max_n) {
  std::vector<PosetPtr> out;
  for (int n = 0; n <= max_n; ++n) {
    auto batch = posets_of_size(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<PosetPtr> lattice_corpus(int max_n) {
  std::vector<PosetPtr> out;
  for (const auto& p : poset_corpus(max_n))
    if (certify_joins(p)) out.push_back(p);
  return out;
}

namespace {

void emit_categories(int nobj, int narrow, std::vector<CatPtr>& out) {
  // skeleton: identities always present; narrow extra arrows with chosen
  // endpoints; composition filled by search and checked by validation
  std::vector<int> srcs(narrow), tgts(narrow);
  std::function<void(int)> assign_endpoints = [&](int a) {
    if (a == narrow) {
      Cat base;
      for (int i = 0; i < nobj; ++i) base.objs.push_back("o" + std::to_string(i));
      for (int i = 0; i < nobj; ++i) {
        base.ident.push_back(base.nmor());
        base.mors.push_back({"id" + std::to_string(i), i, i});
      }
      for (int k = 0; k < narrow; ++k)
        base.mors.push_back({"f" + std::to_string(k), srcs[k], tgts[k]});
      const int nm = base.nmor();
      base.comp.assign(nm, std::vector<int>(nm, -1));
      // identities compose trivially
      for (int f = 0; f < nm; ++f) {
        base.comp[base.ident[base.mors[f].tgt]][f] = f;
        base.comp[f][base.ident[base.mors[f].src]] = f;
      }
      // remaining composable pairs of non-identities
      std::vector<std::pair<int, int>> open;
      for (int g = 0; g < nm; ++g)
        for (int f = 0; f < nm; ++f)
          if (base.mors[f].tgt == base.mors[g].src && base.comp[g][f] == -1 &&
              !base.is_identity(f) && !base.is_identity(g))
            open.push_back({g, f});
      std::function<void(size_t)> fill = [&](size_t k) {
        if (k == open.size()) {
          if (validate_category(base).ok()) {
            auto c = std::make_shared<Cat>(base);
            for (const auto& q : out)
              if (cats_isomorphic(*c, *q)) return;
            out.push_back(c);
          }
          return;
        }
        auto [g, f] = open[k];
        for (int h = 0; h < nm; ++h) {
          if (base.mors[h].src != base.mors[f].src || base.mors[h].tgt != base.mors[g].tgt)
            continue;
          base.comp[g][f] = h;
          fill(k + 1);
          base.comp[g][f] = -1;
        }
      };
      fill(0);
      return;
    }
    for (int s = 0; s < nobj; ++s)
      for (int t = 0; t < nobj; ++t) {
        srcs[a] = s;
        tgts[a] = t;
        assign_endpoints(a + 1);
      }
  };
  assign_endpoints(0);
}

}  // namespace

std::vector<CatPtr> cat_corpus(int max_n) {
  std::vector<CatPtr> out;
  out.push_back(Cat::discrete(0));
  for (int nobj = 1; nobj <= max_n; ++nobj)
    for (int narrow = 0; narrow <= max_n; ++narrow) emit_categories(nobj, narrow, out);
  return out;
}

std::vector<Mono> sample_monotone(PosetPtr src, PosetPtr dst, int count,
                                  std::uint64_t seed, long long enumeration_budget) {
  std::mt19937_64 rng(seed);
  auto all = enumerate_monotone(src, dst, enumeration_budget);
  std::vector<Mono> out;
  if (all) {
    if (static_cast<int>(all->size()) <= count) return *all;
    std::vector<int> idx(all->size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < count; ++i) out.push_back((*all)[idx[i]]);
    return out;
  }
  // random greedy: assign along a linear extension, retry on dead ends
  std::vector<int> order;
  {
    std::vector<bool> used(src->size(), false);
    for (int step = 0; step < src->size(); ++step)
      for (int i = 0; i < src->size(); ++i) {
        if (used[i]) continue;
        bool ready = true;
        for (int j : src->below[i].elements())
          if (j != i && !used[j]) { ready = false; break; }
        if (ready) { order.push_back(i); used[i] = true; break; }
      }
  }
  for (int tries = 0; static_cast<int>(out.size()) < count && tries < count * 200;
       ++tries) {
    std::vector<int> at(src->size(), -1);
    bool ok = true;
    for (int e : order) {
      if (!ok) break;
      std::vector<int> valid;
      for (int v = 0; v < dst->size(); ++v) {
        bool fits = true;
        for (int j : src->below[e].elements())
          if (j != e && at[j] >= 0 && !dst->leq(at[j], v)) { fits = false; break; }
        if (fits) valid.push_back(v);
      }
      if (valid.empty()) { ok = false; break; }
      at[e] = valid[rng() % valid.size()];
    }
    if (!ok) continue;
    Mono m{src, dst, at};
    if (m.validate()) out.push_back(m);
  }
  return out;
}

std::optional<CorpusSelector> parse_selector(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  CorpusSelector sel;
  sel.kind = s.substr(0, colon);
  if (sel.kind != "posets" && sel.kind != "cats") return std::nullopt;
  try {
    sel.max_n = std::stoi(s.substr(colon + 1));
  } catch (...) {
    return std::nullopt;
  }
  if (sel.max_n < 0 || sel.max_n > 6) return std::nullopt;
  return sel;
}

}  // namespace kzlab
