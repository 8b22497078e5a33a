#include "kzlab/span/span.hpp"

#include <algorithm>
#include <map>

namespace kzlab {

namespace {

std::string span_name(const Cat& base, const Span& s) {
  return base.objs[s.left_foot] + "<-" + base.objs[s.apex] + "->" +
         base.objs[s.right_foot] + "(" + base.mors[s.left_leg].id + ";" +
         base.mors[s.right_leg].id + ")";
}

}  // namespace

int SpanHomCat::find_morphism(int src_span, int tgt_span, int base_mor) const {
  for (size_t m = 0; m < mor_ends.size(); ++m)
    if (mor_ends[m].first == src_span && mor_ends[m].second == tgt_span &&
        apex_map[m] == base_mor)
      return static_cast<int>(m);
  return -1;
}

std::shared_ptr<const SpanHomCat> span_hom_cat(CatPtr base, int x, int y) {
  auto out = std::make_shared<SpanHomCat>();
  out->base = base;
  out->x = x;
  out->y = y;
  for (int w = 0; w < base->nobj(); ++w)
    for (int l : base->hom(w, x))
      for (int r : base->hom(w, y)) out->spans.push_back({x, y, w, l, r});

  auto cat = std::make_shared<Cat>();
  for (const Span& s : out->spans) cat->objs.push_back(span_name(*base, s));
  const int ns = static_cast<int>(out->spans.size());
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      const Span& a = out->spans[i];
      const Span& b = out->spans[j];
      for (int h : base->hom(a.apex, b.apex))
        if (base->comp[b.left_leg][h] == a.left_leg &&
            base->comp[b.right_leg][h] == a.right_leg) {
          out->mor_ends.push_back({i, j});
          out->apex_map.push_back(h);
          cat->mors.push_back({"m" + std::to_string(cat->nmor()), i, j});
        }
    }
  cat->ident.assign(ns, -1);
  for (int m = 0; m < cat->nmor(); ++m)
    if (out->mor_ends[m].first == out->mor_ends[m].second &&
        out->apex_map[m] == base->ident[out->spans[out->mor_ends[m].first].apex])
      cat->ident[out->mor_ends[m].first] = m;
  cat->comp.assign(cat->nmor(), std::vector<int>(cat->nmor(), -1));
  for (int f = 0; f < cat->nmor(); ++f)
    for (int g = 0; g < cat->nmor(); ++g) {
      if (out->mor_ends[f].second != out->mor_ends[g].first) continue;
      int composite_apex = base->comp[out->apex_map[g]][out->apex_map[f]];
      int h = out->find_morphism(out->mor_ends[f].first, out->mor_ends[g].second,
                                 composite_apex);
      cat->comp[g][f] = h;
    }
  out->cat = cat;
  return out;
}

std::optional<Span> compose_spans(const Cat& base, const Span& s, const Span& t,
                                  std::string* err) {
  if (s.right_foot != t.left_foot) {
    if (err) *err = "spans are not composable: feet do not match";
    return std::nullopt;
  }
  auto pb = pullback(base, s.right_leg, t.left_leg, err);
  if (!pb) {
    if (err && err->empty()) *err = "the base lacks the middle pullback";
    return std::nullopt;
  }
  return Span{s.left_foot, t.right_foot, pb->apex,
              base.comp[s.left_leg][pb->left], base.comp[t.right_leg][pb->right]};
}

Span identity_span(const Cat& base, int x) {
  return Span{x, x, x, base.ident[x], base.ident[x]};
}

std::optional<int> span_iso(const Cat& base, const Span& a, const Span& b) {
  if (a.left_foot != b.left_foot || a.right_foot != b.right_foot) return std::nullopt;
  for (int m : base.hom(a.apex, b.apex)) {
    if (base.comp[b.left_leg][m] != a.left_leg ||
        base.comp[b.right_leg][m] != a.right_leg)
      continue;
    for (int inv : base.hom(b.apex, a.apex))
      if (base.comp[inv][m] == base.ident[a.apex] &&
          base.comp[m][inv] == base.ident[b.apex] &&
          base.comp[a.left_leg][inv] == b.left_leg &&
          base.comp[a.right_leg][inv] == b.right_leg)
        return m;
  }
  return std::nullopt;
}

bool SpanPresheaf::validate(std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const Cat& c = *hom->cat;
  if (static_cast<int>(sizes.size()) != c.nobj()) return fail("sizes table wrong length");
  if (static_cast<int>(restrict_to.size()) != c.nmor())
    return fail("restriction table wrong length");
  for (int m = 0; m < c.nmor(); ++m) {
    int s = c.mors[m].src, t = c.mors[m].tgt;
    if (static_cast<int>(restrict_to[m].size()) != sizes[t])
      return fail("restriction table has wrong row size");
    for (int e : restrict_to[m])
      if (e < 0 || e >= sizes[s]) return fail("restriction lands outside its set");
  }
  for (int o = 0; o < c.nobj(); ++o)
    for (int e = 0; e < sizes[o]; ++e)
      if (restrict_to[c.ident[o]][e] != e) return fail("identity does not act as identity");
  for (int f = 0; f < c.nmor(); ++f)
    for (int g = 0; g < c.nmor(); ++g) {
      int gf = c.comp[g][f];
      if (gf < 0) continue;
      for (int e = 0; e < sizes[c.mors[g].tgt]; ++e)
        if (restrict_to[gf][e] != restrict_to[f][restrict_to[g][e]])
          return fail("contravariant functoriality fails");
    }
  return true;
}

SpanPresheaf representable_presheaf(std::shared_ptr<const SpanHomCat> hom, int span) {
  SpanPresheaf f;
  f.hom = hom;
  const Cat& c = *hom->cat;
  std::vector<std::vector<int>> homs(c.nobj());
  for (int s = 0; s < c.nobj(); ++s) homs[s] = c.hom(s, span);
  f.sizes.resize(c.nobj());
  for (int s = 0; s < c.nobj(); ++s) f.sizes[s] = static_cast<int>(homs[s].size());
  f.restrict_to.resize(c.nmor());
  for (int m = 0; m < c.nmor(); ++m) {
    int s = c.mors[m].src, t = c.mors[m].tgt;
    f.restrict_to[m].resize(f.sizes[t]);
    for (int e = 0; e < f.sizes[t]; ++e) {
      int k = homs[t][e];
      int pre = c.comp[k][m];
      auto it = std::find(homs[s].begin(), homs[s].end(), pre);
      f.restrict_to[m][e] = static_cast<int>(it - homs[s].begin());
    }
  }
  return f;
}

SpanPresheaf empty_presheaf(std::shared_ptr<const SpanHomCat> hom) {
  SpanPresheaf f;
  f.hom = hom;
  f.sizes.assign(hom->cat->nobj(), 0);
  f.restrict_to.assign(hom->cat->nmor(), {});
  return f;
}

SpanPresheaf coproduct_presheaf(std::shared_ptr<const SpanHomCat> hom,
                                const std::vector<int>& spans_with_multiplicity) {
  SpanPresheaf acc = empty_presheaf(hom);
  for (int s : spans_with_multiplicity) {
    SpanPresheaf r = representable_presheaf(hom, s);
    SpanPresheaf merged;
    merged.hom = hom;
    merged.sizes.resize(acc.sizes.size());
    for (size_t i = 0; i < acc.sizes.size(); ++i)
      merged.sizes[i] = acc.sizes[i] + r.sizes[i];
    merged.restrict_to.resize(acc.restrict_to.size());
    for (size_t m = 0; m < acc.restrict_to.size(); ++m) {
      int t = hom->cat->mors[m].tgt;
      merged.restrict_to[m].resize(merged.sizes[t]);
      for (int e = 0; e < acc.sizes[t]; ++e)
        merged.restrict_to[m][e] = acc.restrict_to[m][e];
      for (int e = 0; e < r.sizes[t]; ++e)
        merged.restrict_to[m][acc.sizes[t] + e] =
            acc.sizes[hom->cat->mors[m].src] + r.restrict_to[m][e];
    }
    acc = merged;
  }
  return acc;
}

namespace {

int span_index(const SpanHomCat& hc, int apex, int left, int right) {
  for (size_t i = 0; i < hc.spans.size(); ++i)
    if (hc.spans[i].apex == apex && hc.spans[i].left_leg == left &&
        hc.spans[i].right_leg == right)
      return static_cast<int>(i);
  return -1;
}

}  // namespace

std::optional<SpanPresheaf> conv_compose(const SpanPresheaf& f, const SpanPresheaf& g,
                                         std::shared_ptr<const SpanHomCat> target,
                                         std::string* err) {
  if (f.hom->y != g.hom->x || f.hom->x != target->x || g.hom->y != target->y) {
    if (err) *err = "presheaf feet do not line up";
    return std::nullopt;
  }
  const Cat& base = *target->base;
  const int mid = f.hom->y;

  SpanPresheaf out;
  out.hom = target;
  const Cat& tc = *target->cat;
  // element encoding per target span c: (h, e, e') listed in order
  struct Ent {
    int h, e, ep;
  };
  std::vector<std::vector<Ent>> table(tc.nobj());
  for (size_t ci = 0; ci < target->spans.size(); ++ci) {
    const Span& c = target->spans[ci];
    for (int h : base.hom(c.apex, mid)) {
      int fa = span_index(*f.hom, c.apex, c.left_leg, h);
      int gb = span_index(*g.hom, c.apex, h, c.right_leg);
      for (int e = 0; e < f.sizes[fa]; ++e)
        for (int ep = 0; ep < g.sizes[gb]; ++ep)
          table[ci].push_back({h, e, ep});
    }
    out.sizes.push_back(static_cast<int>(table[ci].size()));
  }
  auto locate = [&](int ci, int h, int e, int ep) {
    for (size_t k = 0; k < table[ci].size(); ++k)
      if (table[ci][k].h == h && table[ci][k].e == e && table[ci][k].ep == ep)
        return static_cast<int>(k);
    return -1;
  };
  out.restrict_to.resize(tc.nmor());
  for (int m = 0; m < tc.nmor(); ++m) {
    int src = target->mor_ends[m].first, tgt = target->mor_ends[m].second;
    int a = target->apex_map[m];  // apex of src span -> apex of tgt span
    const Span& cs = target->spans[src];
    const Span& ct = target->spans[tgt];
    out.restrict_to[m].resize(out.sizes[tgt]);
    for (int k = 0; k < out.sizes[tgt]; ++k) {
      const Ent& ent = table[tgt][k];
      int h2 = base.comp[ent.h][a];
      int fa_t = span_index(*f.hom, ct.apex, ct.left_leg, ent.h);
      int fa_s = span_index(*f.hom, cs.apex, cs.left_leg, h2);
      int gb_t = span_index(*g.hom, ct.apex, ent.h, ct.right_leg);
      int gb_s = span_index(*g.hom, cs.apex, h2, cs.right_leg);
      int fm = f.hom->find_morphism(fa_s, fa_t, a);
      int gm = g.hom->find_morphism(gb_s, gb_t, a);
      if (fm < 0 || gm < 0) {
        if (err) *err = "internal: missing span morphism for the action";
        return std::nullopt;
      }
      out.restrict_to[m][k] =
          locate(src, h2, f.restrict_to[fm][ent.e], g.restrict_to[gm][ent.ep]);
    }
  }
  if (!out.validate(err)) return std::nullopt;
  return out;
}

namespace {

CatPtr product_cat(CatPtr a, CatPtr b) {
  auto p = std::make_shared<Cat>();
  for (int i = 0; i < a->nobj(); ++i)
    for (int j = 0; j < b->nobj(); ++j)
      p->objs.push_back(a->objs[i] + "*" + b->objs[j]);
  auto oid = [&](int i, int j) { return i * b->nobj() + j; };
  for (int f = 0; f < a->nmor(); ++f)
    for (int g = 0; g < b->nmor(); ++g)
      p->mors.push_back({a->mors[f].id + "*" + b->mors[g].id,
                         oid(a->mors[f].src, b->mors[g].src),
                         oid(a->mors[f].tgt, b->mors[g].tgt)});
  auto mid = [&](int f, int g) { return f * b->nmor() + g; };
  p->ident.resize(p->nobj());
  for (int i = 0; i < a->nobj(); ++i)
    for (int j = 0; j < b->nobj(); ++j)
      p->ident[oid(i, j)] = mid(a->ident[i], b->ident[j]);
  p->comp.assign(p->nmor(), std::vector<int>(p->nmor(), -1));
  for (int f1 = 0; f1 < a->nmor(); ++f1)
    for (int g1 = 0; g1 < b->nmor(); ++g1)
      for (int f2 = 0; f2 < a->nmor(); ++f2)
        for (int g2 = 0; g2 < b->nmor(); ++g2) {
          int cf = a->comp[f2][f1], cg = b->comp[g2][g1];
          if (cf >= 0 && cg >= 0) p->comp[mid(f2, g2)][mid(f1, g1)] = mid(cf, cg);
        }
  return p;
}

}  // namespace

std::optional<std::vector<int>> day_coend_sizes(const SpanPresheaf& f,
                                                const SpanPresheaf& g,
                                                const SpanHomCat& target,
                                                std::string* err) {
  const Cat& base = *target.base;
  const Cat& s1 = *f.hom->cat;
  const Cat& s2 = *g.hom->cat;
  CatPtr prod = product_cat(f.hom->cat, g.hom->cat);

  // tensor of span objects, and the mediating maps for morphism pairs
  const int nb = s2.nobj();
  std::vector<int> tensor(s1.nobj() * s2.nobj(), -1);
  std::vector<std::optional<PullbackCone>> cones(s1.nobj() * s2.nobj());
  for (int i = 0; i < s1.nobj(); ++i)
    for (int j = 0; j < s2.nobj(); ++j) {
      auto comp = compose_spans(base, f.hom->spans[i], g.hom->spans[j], err);
      if (!comp) return std::nullopt;
      tensor[i * nb + j] =
          span_index(target, comp->apex, comp->left_leg, comp->right_leg);
      cones[i * nb + j] = pullback(base, f.hom->spans[i].right_leg,
                                   g.hom->spans[j].left_leg);
    }
  // mediator of (m, n) : tensor(src) -> tensor(tgt), an apex map in base
  auto mediator = [&](int m, int n) -> int {
    int i1 = s1.mors[m].src, i2 = s1.mors[m].tgt;
    int j1 = s2.mors[n].src, j2 = s2.mors[n].tgt;
    const auto& c1 = cones[i1 * nb + j1];
    const auto& c2 = cones[i2 * nb + j2];
    int am = f.hom->apex_map[m], an = g.hom->apex_map[n];
    // cone legs into the target pullback
    int p = base.comp[am][c1->left];
    int q = base.comp[an][c1->right];
    for (int h : base.hom(base.mors[c1->left].src, base.mors[c2->left].src))
      if (base.comp[c2->left][h] == p && base.comp[c2->right][h] == q) return h;
    return -1;
  };

  std::vector<int> out;
  for (size_t ci = 0; ci < target.spans.size(); ++ci) {
    // weight over prod x prod: hom(c, tensor(a',b')) x F a x G b
    CoendWeight w;
    w.a = prod;
    const int no = prod->nobj();
    std::vector<std::vector<std::vector<int>>> homs(no);  // per (a',b'): hom(c, ten)
    for (int o = 0; o < no; ++o)
      homs[o].assign(1, target.cat->hom(static_cast<int>(ci), tensor[o]));
    w.sizes.assign(no, std::vector<int>(no, 0));
    auto fsz = [&](int o) { return f.sizes[o / nb]; };
    auto gsz = [&](int o) { return g.sizes[o % nb]; };
    for (int contra = 0; contra < no; ++contra)
      for (int co = 0; co < no; ++co)
        w.sizes[contra][co] =
            static_cast<int>(homs[co][0].size()) * fsz(contra) * gsz(contra);
    // element of w(contra, co): (k in hom(c, tensor(co)), e in F, e' in G)
    auto decode = [&](int co, int contra, int idx) {
      int per = fsz(contra) * gsz(contra);
      int k = idx / per;
      int rem = idx % per;
      return std::tuple<int, int, int>(k, rem / gsz(contra), rem % gsz(contra));
    };
    auto encode = [&](int co, int contra, int k, int e, int ep) {
      return (k * fsz(contra) + e) * gsz(contra) + ep;
    };
    w.lact = [&, prod](int pm, int co, int idx) {
      // contravariant: (a,b) -> (a2,b2) acts on the F x G part
      int m = pm / s2.nmor(), n = pm % s2.nmor();
      int contra_tgt = prod->mors[pm].tgt, contra_src = prod->mors[pm].src;
      auto [k, e, ep] = decode(co, contra_tgt, idx);
      (void)contra_src;
      return encode(co, prod->mors[pm].src, k, f.restrict_to[m][e],
                    g.restrict_to[n][ep]);
    };
    w.ract = [&, prod](int pm, int contra, int idx) {
      // covariant: postcompose the hom element with the tensored morphism
      int m = pm / s2.nmor(), n = pm % s2.nmor();
      int co_src = prod->mors[pm].src, co_tgt = prod->mors[pm].tgt;
      auto [k, e, ep] = decode(co_src, contra, idx);
      int kk = homs[co_src][0][k];
      int med = mediator(m, n);
      int tm = target.find_morphism(tensor[co_src], tensor[co_tgt], med);
      int post = target.cat->comp[tm][kk];
      const auto& lst = homs[co_tgt][0];
      int pos = static_cast<int>(std::find(lst.begin(), lst.end(), post) - lst.begin());
      return encode(co_tgt, contra, pos, e, ep);
    };
    auto res = coend(w, err);
    if (!res) return std::nullopt;
    out.push_back(res->carrier.size());
  }
  return out;
}

std::optional<SpanBicats> build_span_bicats(CatPtr base, std::string* err) {
  SpanBicats sb;
  const int n = base->nobj();
  sb.plain.objs = base->objs;
  sb.completed.objs = base->objs;
  sb.plain.hom.assign(n, std::vector<PosetPtr>(n));
  sb.completed.hom.assign(n, std::vector<PosetPtr>(n));
  sb.completion.assign(n, std::vector<std::shared_ptr<const DownLat>>(n));
  sb.unit.src = &sb.plain;
  sb.unit.dst = &sb.completed;
  sb.unit.local.assign(n, std::vector<Mono>(n));
  sb.unit.o.resize(n);
  for (int i = 0; i < n; ++i) sb.unit.o[i] = i;

  // hom-posets: span preorders quotiented to posets
  std::vector<std::vector<std::shared_ptr<const SpanHomCat>>> hcs(
      n, std::vector<std::shared_ptr<const SpanHomCat>>(n));
  std::vector<std::vector<std::vector<int>>> cls(n, std::vector<std::vector<int>>(n));
  std::vector<std::vector<std::vector<int>>> reps(n, std::vector<std::vector<int>>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto hc = span_hom_cat(base, x, y);
      hcs[x][y] = hc;
      auto pre = std::make_shared<Poset>();
      pre->names = hc->cat->objs;
      const int ns = static_cast<int>(hc->spans.size());
      pre->below.assign(ns, Mask(ns));
      for (int i = 0; i < ns; ++i) pre->below[i].set(i);
      for (const auto& me : hc->mor_ends) pre->below[me.second].set(me.first);
      // close transitively
      bool ch = true;
      while (ch) {
        ch = false;
        for (int j = 0; j < ns; ++j)
          for (int i : pre->below[j].elements())
            if (!pre->below[i].subset_of(pre->below[j])) {
              pre->below[j] |= pre->below[i];
              ch = true;
            }
      }
      auto [q, cmap] = Poset::quotient_preorder(*pre);
      sb.plain.hom[x][y] = q;
      cls[x][y] = cmap;
      reps[x][y].assign(q->size(), -1);
      for (int s = 0; s < ns; ++s)
        if (reps[x][y][cmap[s]] < 0) reps[x][y][cmap[s]] = s;
      auto lat = std::make_shared<DownLat>(DownLat::over(q));
      sb.completion[x][y] = lat;
      sb.completed.hom[x][y] = lat->as_poset();
      Mono u{q, sb.completed.hom[x][y], {}};
      u.at.resize(q->size());
      for (int s = 0; s < q->size(); ++s) u.at[s] = lat->principal(s);
      sb.unit.local[x][y] = u;
    }

  // identities and composition on representatives
  sb.plain.id.resize(n);
  sb.completed.id.resize(n);
  sb.plain.comp.assign(
      n, std::vector<std::vector<std::vector<std::vector<int>>>>(
             n, std::vector<std::vector<std::vector<int>>>(n)));
  sb.completed.comp = sb.plain.comp;
  for (int x = 0; x < n; ++x) {
    Span idsp = identity_span(*base, x);
    int raw = span_index(*hcs[x][x], idsp.apex, idsp.left_leg, idsp.right_leg);
    sb.plain.id[x] = cls[x][x][raw];
    sb.completed.id[x] = sb.unit.local[x][x].at[sb.plain.id[x]];
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& tbl = sb.plain.comp[x][y][z];
        const int hy = sb.plain.hom[y][z]->size();
        const int hx = sb.plain.hom[x][y]->size();
        tbl.assign(hy, std::vector<int>(hx, -1));
        for (int gq = 0; gq < hy; ++gq)
          for (int fq = 0; fq < hx; ++fq) {
            const Span& sf = hcs[x][y]->spans[reps[x][y][fq]];
            const Span& sg = hcs[y][z]->spans[reps[y][z][gq]];
            auto comp = compose_spans(*base, sf, sg, err);
            if (!comp) {
              if (err && err->empty()) *err = "base lacks a pullback for composition";
              return std::nullopt;
            }
            int raw = span_index(*hcs[x][z], comp->apex, comp->left_leg,
                                 comp->right_leg);
            tbl[gq][fq] = cls[x][z][raw];
          }
        // convolution on the completions
        auto& ctbl = sb.completed.comp[x][y][z];
        const DownLat& lxz = *sb.completion[x][z];
        const DownLat& lxy = *sb.completion[x][y];
        const DownLat& lyz = *sb.completion[y][z];
        ctbl.assign(lyz.size(), std::vector<int>(lxy.size(), -1));
        for (int G = 0; G < lyz.size(); ++G)
          for (int F = 0; F < lxy.size(); ++F) {
            Mask m(sb.plain.hom[x][z]->size());
            for (int fq : lxy.mask_of(F).elements())
              for (int gq : lyz.mask_of(G).elements())
                m |= sb.plain.hom[x][z]->below[tbl[gq][fq]];
            ctbl[G][F] = lxz.index_of(m);
          }
      }
  std::string why;
  if (!sb.plain.validate(&why)) {
    if (err) *err = "span bicategory fails validation: " + why;
    return std::nullopt;
  }
  if (!sb.completed.validate(&why)) {
    if (err) *err = "completed span bicategory fails validation: " + why;
    return std::nullopt;
  }
  return sb;
}

TransferReport transfer_lax_from_oplax(const SpanBicats& sb, const LocalFamily& l) {
  TransferReport rep;
  const int n = sb.plain.nobj();
  LocalFamily r;
  r.src = l.dst;
  r.dst = &sb.completed;
  r.o.resize(l.dst->nobj());
  // R is only defined on objects in the image of L; the demo families are
  // surjective on objects, so invert the object map
  std::vector<int> preimage(l.dst->nobj(), -1);
  for (int x = 0; x < n; ++x) preimage[l.o[x]] = x;
  for (int X = 0; X < l.dst->nobj(); ++X)
    if (preimage[X] < 0) {
      rep.detail = "object outside the image of the local family";
      return rep;
    }
  r.local.assign(l.dst->nobj(), std::vector<Mono>(l.dst->nobj()));
  rep.extensions_exist = true;
  for (int X = 0; X < l.dst->nobj(); ++X)
    for (int Y = 0; Y < l.dst->nobj(); ++Y) {
      int x = preimage[X], y = preimage[Y];
      r.o[X] = x;
      const Mono& lx = l.local[x][y];
      const DownLat& lat = *sb.completion[x][y];
      Mono rl{l.dst->hom[X][Y], sb.completed.hom[x][y], {}};
      rl.at.resize(l.dst->hom[X][Y]->size());
      for (int c = 0; c < l.dst->hom[X][Y]->size(); ++c) {
        Mask m(sb.plain.hom[x][y]->size());
        for (int s = 0; s < sb.plain.hom[x][y]->size(); ++s)
          if (l.dst->hom[X][Y]->leq(lx.at[s], c)) m.set(s);
        rl.at[c] = lat.index_of(m);
      }
      // certify the hom-level extension by the brute-force oracle
      auto st = certify_left_extension(lx, sb.unit.local[x][y], rl, 500000);
      if (st != CertifyStatus::kYes) {
        rep.extensions_exist = false;
        rep.detail = "a hom-level extension failed certification";
        return rep;
      }
      r.local[X][Y] = rl;
    }

  rep.oplax_on_l = check_local_kind(l, LocalKind::kOplax);
  rep.lax_on_r = check_local_kind(r, LocalKind::kLax);
  rep.round_trip = rep.oplax_on_l == rep.lax_on_r;
  return rep;
}

}  // namespace kzlab
