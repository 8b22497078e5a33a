#include "kzlab/core/cat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace kzlab {

std::vector<int> Cat::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < nmor(); ++m)
    if (mors[m].src == x && mors[m].tgt == y) out.push_back(m);
  return out;
}

CatPtr Cat::from_poset(const Poset& p) {
  auto c = std::make_shared<Cat>();
  c->objs = p.names;
  const int n = p.size();
  std::vector<std::vector<int>> arrow(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) {
        arrow[i][j] = c->nmor();
        c->mors.push_back({p.names[i] + "<=" + p.names[j], i, j});
      }
  c->ident.resize(n);
  for (int i = 0; i < n; ++i) c->ident[i] = arrow[i][i];
  c->comp.assign(c->nmor(), std::vector<int>(c->nmor(), -1));
  for (int f = 0; f < c->nmor(); ++f)
    for (int g = 0; g < c->nmor(); ++g)
      if (c->mors[f].tgt == c->mors[g].src)
        c->comp[g][f] = arrow[c->mors[f].src][c->mors[g].tgt];
  return c;
}

CatPtr Cat::discrete(int n) { return from_poset(*Poset::antichain(n)); }

CatPtr Cat::walking_arrow() { return from_poset(*Poset::chain(2)); }

bool Cat::is_thin() const {
  for (int x = 0; x < nobj(); ++x)
    for (int y = 0; y < nobj(); ++y)
      if (hom(x, y).size() > 1) return false;
  return true;
}

std::optional<Poset> Cat::to_poset() const {
  if (!is_thin()) return std::nullopt;
  Poset p;
  p.names = objs;
  p.below.assign(nobj(), Mask(nobj()));
  for (const auto& m : mors) p.below[m.tgt].set(m.src);
  if (!p.is_antisymmetric()) return std::nullopt;
  return p;
}

ValidationReport validate_category(const Cat& c) {
  ValidationReport r;
  const int no = c.nobj(), nm = c.nmor();
  if (static_cast<int>(c.ident.size()) != no)
    r.structural.push_back("identity table has wrong length");
  for (int i = 0; i < std::min<int>(no, c.ident.size()); ++i) {
    int m = c.ident[i];
    if (m < 0 || m >= nm) {
      r.structural.push_back("identity of " + c.objs[i] + " is a dangling morphism id");
    } else if (c.mors[m].src != i || c.mors[m].tgt != i) {
      r.structural.push_back("identity of " + c.objs[i] + " is not an endomorphism of it");
    }
  }
  for (int m = 0; m < nm; ++m)
    if (c.mors[m].src < 0 || c.mors[m].src >= no || c.mors[m].tgt < 0 || c.mors[m].tgt >= no)
      r.structural.push_back("morphism " + c.mors[m].id + " has dangling endpoints");
  if (static_cast<int>(c.comp.size()) != nm) {
    r.structural.push_back("composition table has wrong shape");
    return r;
  }
  for (int g = 0; g < nm; ++g) {
    if (static_cast<int>(c.comp[g].size()) != nm) {
      r.structural.push_back("composition table has ragged row");
      return r;
    }
    for (int f = 0; f < nm; ++f) {
      const bool composable = c.mors[f].tgt == c.mors[g].src;
      const int h = c.comp[g][f];
      if (!composable) {
        if (h != -1)
          r.structural.push_back("compose(" + c.mors[g].id + "," + c.mors[f].id +
                                 ") defined on a non-composable pair");
        continue;
      }
      if (h < 0 || h >= nm) {
        r.structural.push_back("compose(" + c.mors[g].id + "," + c.mors[f].id +
                               ") is undefined or dangling");
      } else if (c.mors[h].src != c.mors[f].src || c.mors[h].tgt != c.mors[g].tgt) {
        r.structural.push_back("compose(" + c.mors[g].id + "," + c.mors[f].id +
                               ") has wrong endpoints");
      }
    }
  }
  if (!r.structural.empty()) return r;

  for (int f = 0; f < nm; ++f) {
    int s = c.ident[c.mors[f].src], t = c.ident[c.mors[f].tgt];
    if (c.comp[f][s] != f)
      r.violations.push_back("right identity law fails at " + c.mors[f].id);
    if (c.comp[t][f] != f)
      r.violations.push_back("left identity law fails at " + c.mors[f].id);
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.mors[f].tgt != c.mors[g].src) continue;
      for (int h = 0; h < nm; ++h) {
        if (c.mors[g].tgt != c.mors[h].src) continue;
        if (c.comp[h][c.comp[g][f]] != c.comp[c.comp[h][g]][f])
          r.violations.push_back("associativity fails at (" + c.mors[h].id + "," +
                                 c.mors[g].id + "," + c.mors[f].id + ")");
      }
    }
  return r;
}

bool Fun::validate(std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!src || !dst) return fail("missing endpoints");
  if (static_cast<int>(o.size()) != src->nobj() || static_cast<int>(m.size()) != src->nmor())
    return fail("table sizes do not match the source");
  for (int x : o)
    if (x < 0 || x >= dst->nobj()) return fail("dangling object image");
  for (int f = 0; f < src->nmor(); ++f) {
    if (m[f] < 0 || m[f] >= dst->nmor()) return fail("dangling morphism image");
    if (dst->mors[m[f]].src != o[src->mors[f].src] || dst->mors[m[f]].tgt != o[src->mors[f].tgt])
      return fail("image of " + src->mors[f].id + " has wrong endpoints");
  }
  for (int x = 0; x < src->nobj(); ++x)
    if (m[src->ident[x]] != dst->ident[o[x]]) return fail("identity not preserved");
  for (int f = 0; f < src->nmor(); ++f)
    for (int g = 0; g < src->nmor(); ++g)
      if (src->comp[g][f] >= 0 && m[src->comp[g][f]] != dst->comp[m[g]][m[f]])
        return fail("composition not preserved at (" + src->mors[g].id + "," +
                    src->mors[f].id + ")");
  return true;
}

Fun Fun::identity(CatPtr c) {
  Fun f{c, c, {}, {}};
  f.o.resize(c->nobj());
  std::iota(f.o.begin(), f.o.end(), 0);
  f.m.resize(c->nmor());
  std::iota(f.m.begin(), f.m.end(), 0);
  return f;
}

Fun Fun::compose(const Fun& g, const Fun& f) {
  Fun h{f.src, g.dst, {}, {}};
  h.o.resize(f.src->nobj());
  h.m.resize(f.src->nmor());
  for (int x = 0; x < f.src->nobj(); ++x) h.o[x] = g.o[f.o[x]];
  for (int k = 0; k < f.src->nmor(); ++k) h.m[k] = g.m[f.m[k]];
  return h;
}

bool same_fun(const Fun& f, const Fun& g) { return f.o == g.o && f.m == g.m; }

bool Nat::validate(std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (f.src != g.src || f.dst != g.dst) return fail("cells require parallel functors");
  const Cat& a = *f.src;
  const Cat& b = *f.dst;
  if (static_cast<int>(at.size()) != a.nobj()) return fail("component family has wrong length");
  for (int x = 0; x < a.nobj(); ++x) {
    int c = at[x];
    if (c < 0 || c >= b.nmor()) return fail("dangling component");
    if (b.mors[c].src != f.o[x] || b.mors[c].tgt != g.o[x])
      return fail("component at " + a.objs[x] + " has wrong endpoints");
  }
  for (int k = 0; k < a.nmor(); ++k) {
    int x = a.mors[k].src, y = a.mors[k].tgt;
    if (b.comp[at[y]][f.m[k]] != b.comp[g.m[k]][at[x]])
      return fail("naturality fails at " + a.mors[k].id);
  }
  return true;
}

bool Nat::invertible() const {
  const Cat& b = *f.dst;
  for (int x = 0; x < f.src->nobj(); ++x) {
    int c = at[x];
    bool has_inverse = false;
    for (int d : b.hom(b.mors[c].tgt, b.mors[c].src))
      if (b.comp[d][c] == b.ident[b.mors[c].src] && b.comp[c][d] == b.ident[b.mors[c].tgt]) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

Nat Nat::identity(const Fun& f) {
  Nat n{f, f, {}};
  n.at.resize(f.src->nobj());
  for (int x = 0; x < f.src->nobj(); ++x) n.at[x] = f.dst->ident[f.o[x]];
  return n;
}

Nat Nat::vcomp(const Nat& b, const Nat& a) {
  Nat n{a.f, b.g, {}};
  n.at.resize(a.f.src->nobj());
  for (int x = 0; x < a.f.src->nobj(); ++x) n.at[x] = a.f.dst->comp[b.at[x]][a.at[x]];
  return n;
}

Nat Nat::whisker_left(const Fun& h, const Nat& a) {
  Nat n{Fun::compose(h, a.f), Fun::compose(h, a.g), {}};
  n.at.resize(a.f.src->nobj());
  for (int x = 0; x < a.f.src->nobj(); ++x) n.at[x] = h.m[a.at[x]];
  return n;
}

Nat Nat::whisker_right(const Nat& a, const Fun& h) {
  Nat n{Fun::compose(a.f, h), Fun::compose(a.g, h), {}};
  n.at.resize(h.src->nobj());
  for (int x = 0; x < h.src->nobj(); ++x) n.at[x] = a.at[h.o[x]];
  return n;
}

std::vector<Nat> enumerate_nats(const Fun& f, const Fun& g, long long budget) {
  std::vector<Nat> out;
  const Cat& a = *f.src;
  const Cat& b = *f.dst;
  std::vector<std::vector<int>> choices(a.nobj());
  for (int x = 0; x < a.nobj(); ++x) choices[x] = b.hom(f.o[x], g.o[x]);
  std::vector<int> at(a.nobj(), -1);
  long long seen = 0;
  std::function<void(int)> go = [&](int x) {
    if (budget > 0 && seen > budget) return;
    if (x == a.nobj()) {
      Nat n{f, g, at};
      if (n.validate()) out.push_back(n);
      ++seen;
      return;
    }
    for (int c : choices[x]) {
      at[x] = c;
      go(x + 1);
    }
  };
  go(0);
  return out;
}

std::optional<std::vector<Fun>> enumerate_functors(CatPtr src, CatPtr dst,
                                                   long long budget) {
  std::vector<Fun> out;
  const Cat& a = *src;
  const Cat& b = *dst;
  if (a.nobj() > 0 && b.nobj() == 0) return out;
  long long seen = 0;
  bool exhausted = false;
  std::vector<int> o(a.nobj(), -1);
  std::vector<int> m(a.nmor(), -1);

  std::function<bool(int)> fill_mors = [&](int k) -> bool {
    if (k == a.nmor()) {
      Fun f{src, dst, o, m};
      if (f.validate()) out.push_back(f);
      if (budget > 0 && ++seen > budget) {
        exhausted = true;
        return false;
      }
      return true;
    }
    if (a.is_identity(k)) {
      m[k] = b.ident[o[a.mors[k].src]];
      return fill_mors(k + 1);
    }
    for (int c : b.hom(o[a.mors[k].src], o[a.mors[k].tgt])) {
      m[k] = c;
      // partial composition check against already-assigned morphisms
      bool ok = true;
      for (int f2 = 0; f2 <= k && ok; ++f2) {
        if (m[f2] < 0) continue;
        if (a.comp[k][f2] >= 0 && a.comp[k][f2] <= k && m[a.comp[k][f2]] >= 0 &&
            b.comp[c][m[f2]] != m[a.comp[k][f2]])
          ok = false;
        if (a.comp[f2][k] >= 0 && a.comp[f2][k] <= k && m[a.comp[f2][k]] >= 0 &&
            b.comp[m[f2]][c] != m[a.comp[f2][k]])
          ok = false;
      }
      if (ok && !fill_mors(k + 1)) return false;
    }
    m[k] = -1;
    return true;
  };

  std::function<bool(int)> fill_objs = [&](int x) -> bool {
    if (x == a.nobj()) return fill_mors(0);
    for (int v = 0; v < b.nobj(); ++v) {
      o[x] = v;
      if (!fill_objs(x + 1)) return false;
    }
    o[x] = -1;
    return true;
  };

  if (a.nobj() == 0) {
    Fun f{src, dst, {}, {}};
    out.push_back(f);
    return out;
  }
  fill_objs(0);
  if (exhausted) return std::nullopt;
  return out;
}

bool cats_isomorphic(const Cat& a, const Cat& b) {
  if (a.nobj() != b.nobj() || a.nmor() != b.nmor()) return false;
  auto funs = enumerate_functors(std::make_shared<Cat>(a), std::make_shared<Cat>(b), 2000000);
  if (!funs) return false;  // too big; callers keep instances tiny
  for (const auto& f : *funs) {
    std::vector<bool> oseen(b.nobj(), false), mseen(b.nmor(), false);
    bool bij = true;
    for (int x : f.o) {
      if (oseen[x]) { bij = false; break; }
      oseen[x] = true;
    }
    if (!bij) continue;
    for (int k : f.m) {
      if (mseen[k]) { bij = false; break; }
      mseen[k] = true;
    }
    if (bij) return true;
  }
  return false;
}

}  // namespace kzlab
