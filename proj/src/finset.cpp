#include "kzlab/core/finset.hpp"

#include <algorithm>
#include <map>

namespace kzlab {

bool CoendWeight::validate(std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const Cat& c = *a;
  const int no = c.nobj();
  if (static_cast<int>(sizes.size()) != no) return fail("sizes table has wrong shape");
  for (const auto& row : sizes)
    if (static_cast<int>(row.size()) != no) return fail("sizes table has ragged row");

  auto lcheck = [&](int f, int y, int e) {
    int x = c.mors[f].src;
    int v = lact(f, y, e);
    return v >= 0 && v < sizes[x][y];
  };
  auto rcheck = [&](int f, int x, int e) {
    int yp = c.mors[f].tgt;
    int v = ract(f, x, e);
    return v >= 0 && v < sizes[x][yp];
  };
  for (int f = 0; f < c.nmor(); ++f) {
    int xs = c.mors[f].src, xt = c.mors[f].tgt;
    for (int y = 0; y < no; ++y)
      for (int e = 0; e < sizes[xt][y]; ++e)
        if (!lcheck(f, y, e)) return fail("left action lands outside its target set");
    for (int x = 0; x < no; ++x)
      for (int e = 0; e < sizes[x][xs]; ++e)
        if (!rcheck(f, x, e)) return fail("right action lands outside its target set");
  }
  // identities act as identities
  for (int x = 0; x < no; ++x) {
    int idm = c.ident[x];
    for (int y = 0; y < no; ++y)
      for (int e = 0; e < sizes[x][y]; ++e)
        if (lact(idm, y, e) != e) return fail("left action of an identity is not the identity");
    for (int y = 0; y < no; ++y)
      for (int e = 0; e < sizes[y][x]; ++e)
        if (ract(idm, y, e) != e) return fail("right action of an identity is not the identity");
  }
  // functoriality: composites act as composites, and the two actions commute
  for (int f = 0; f < c.nmor(); ++f)
    for (int g = 0; g < c.nmor(); ++g) {
      if (c.comp[g][f] < 0) continue;
      int gf = c.comp[g][f];
      // contravariant slot: (g∘f)^* = f^* then g^*? order: lact(gf) = lact(f)∘lact(g)
      int xt = c.mors[g].tgt;
      for (int y = 0; y < no; ++y)
        for (int e = 0; e < sizes[xt][y]; ++e)
          if (lact(gf, y, e) != lact(f, y, lact(g, y, e)))
            return fail("left action is not functorial");
      for (int x = 0; x < no; ++x)
        for (int e = 0; e < sizes[x][c.mors[f].src]; ++e)
          if (ract(gf, x, e) != ract(g, x, ract(f, x, e)))
            return fail("right action is not functorial");
    }
  for (int f = 0; f < c.nmor(); ++f)
    for (int g = 0; g < c.nmor(); ++g) {
      // f acts on the left slot, g on the right; both orders must agree
      int xt = c.mors[f].tgt;
      int ys = c.mors[g].src;
      for (int e = 0; e < sizes[xt][ys]; ++e)
        if (ract(g, c.mors[f].src, lact(f, ys, e)) != lact(f, c.mors[g].tgt, ract(g, xt, e)))
          return fail("left and right actions do not commute");
    }
  return true;
}

std::optional<CoendResult> coend(const CoendWeight& w, std::string* err) {
  if (!w.validate(err)) return std::nullopt;
  const Cat& c = *w.a;
  const int no = c.nobj();

  std::vector<int> offset(no + 1, 0);
  for (int x = 0; x < no; ++x) offset[x + 1] = offset[x] + w.sizes[x][x];
  const int total = offset[no];

  DisjointSets ds(total);
  for (int f = 0; f < c.nmor(); ++f) {
    int x = c.mors[f].src, xp = c.mors[f].tgt;
    for (int e = 0; e < w.sizes[xp][x]; ++e) {
      int left = offset[x] + w.lact(f, x, e);        // w(f, x): w(x',x) -> w(x,x)
      int right = offset[xp] + w.ract(f, xp, e);     // w(x', f): w(x',x) -> w(x',x')
      ds.unite(left, right);
    }
  }

  std::map<int, int> cls;
  CoendResult res;
  for (int x = 0; x < no; ++x)
    for (int e = 0; e < w.sizes[x][x]; ++e) {
      int root = ds.find(offset[x] + e);
      if (!cls.count(root)) {
        cls[root] = static_cast<int>(res.reps.size());
        res.reps.push_back({x, e});
        res.carrier.elems.push_back("[" + c.objs[x] + ":" + std::to_string(e) + "]");
      }
    }
  auto table = std::make_shared<std::vector<int>>(total);
  for (int x = 0; x < no; ++x)
    for (int e = 0; e < w.sizes[x][x]; ++e)
      (*table)[offset[x] + e] = cls[ds.find(offset[x] + e)];
  auto offsets = std::make_shared<std::vector<int>>(offset);
  res.project = [table, offsets](int x, int e) { return (*table)[(*offsets)[x] + e]; };
  return res;
}

std::optional<PullbackCone> pullback(const Cat& c, int f, int g, std::string* err) {
  if (f < 0 || f >= c.nmor() || g < 0 || g >= c.nmor()) {
    if (err) *err = "dangling morphism id";
    return std::nullopt;
  }
  if (c.mors[f].tgt != c.mors[g].tgt) {
    if (err) *err = "not a cospan: the two morphisms do not share a target";
    return std::nullopt;
  }
  struct Cone {
    int apex, p, q;
  };
  std::vector<Cone> cones;
  for (int w = 0; w < c.nobj(); ++w)
    for (int p : c.hom(w, c.mors[f].src))
      for (int q : c.hom(w, c.mors[g].src))
        if (c.comp[f][p] == c.comp[g][q]) cones.push_back({w, p, q});

  for (const Cone& cand : cones) {
    bool terminal = true;
    for (const Cone& other : cones) {
      int mediators = 0;
      for (int h : c.hom(other.apex, cand.apex))
        if (c.comp[cand.p][h] == other.p && c.comp[cand.q][h] == other.q) ++mediators;
      if (mediators != 1) {
        terminal = false;
        break;
      }
    }
    if (terminal)
      return PullbackCone{cand.apex, cand.p, cand.q, static_cast<int>(cones.size())};
  }
  return std::nullopt;
}

}  // namespace kzlab
