#include "doctest.h"

#include "kzlab/core/cat.hpp"
#include "kzlab/core/finset.hpp"
#include "kzlab/core/joins.hpp"
#include "kzlab/core/oracle.hpp"
#include "kzlab/core/poset.hpp"
#include "kzlab/doctrine/doctrine.hpp"
#include "kzlab/doctrine/downset.hpp"

using namespace kzlab;

TEST_CASE("poset basics and monotone enumeration") {
  auto c3 = Poset::chain(3);
  CHECK(c3->is_reflexive());
  CHECK(c3->is_transitive());
  CHECK(c3->is_antisymmetric());
  CHECK(c3->leq(0, 2));
  CHECK_FALSE(c3->leq(2, 0));

  auto a2 = Poset::antichain(2);
  // monotone maps chain(2) -> chain(3): pairs i <= j, 6 of them
  CHECK(count_monotone(Poset::chain(2), c3, 0) == 6);
  // all maps antichain(2) -> chain(3)
  CHECK(count_monotone(a2, c3, 0) == 9);
  // budget exhaustion reports incomplete
  CHECK_FALSE(for_each_monotone(a2, c3, 3, [](const Mono&) { return true; }));
}

TEST_CASE("validateCategory accepts lawful tables and flags violations") {
  auto c = Cat::from_poset(*Poset::chain(3));
  CHECK(validate_category(*c).ok());

  auto arrow = Cat::walking_arrow();
  CHECK(validate_category(*arrow).ok());

  // retarget a composite: structural error (wrong endpoints), distinct from
  // a law violation
  Cat broken = *c;
  for (int g = 0; g < broken.nmor(); ++g)
    for (int f = 0; f < broken.nmor(); ++f)
      if (broken.comp[g][f] >= 0 && !broken.is_identity(f) && !broken.is_identity(g)) {
        broken.comp[g][f] = broken.ident[0];
        goto done;
      }
done:
  auto rep = validate_category(broken);
  CHECK_FALSE(rep.structurally_sound());
}

TEST_CASE("pullback in a lattice category is the meet") {
  // diamond: bottom < a,b < top
  auto diamond = Poset::make({"bot", "a", "b", "top"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto c = Cat::from_poset(*diamond);
  // cospan a <= top >= b
  int f = -1, g = -1;
  for (int m = 0; m < c->nmor(); ++m) {
    if (c->mors[m].src == 1 && c->mors[m].tgt == 3) f = m;
    if (c->mors[m].src == 2 && c->mors[m].tgt == 3) g = m;
  }
  auto pb = pullback(*c, f, g);
  REQUIRE(pb.has_value());
  CHECK(pb->apex == 0);  // meet(a,b) = bot

  // identity cospan pulls back to the object itself
  auto pid = pullback(*c, c->ident[3], c->ident[3]);
  REQUIRE(pid.has_value());
  CHECK(pid->apex == 3);

  // walking cospan x -> z <- y has no apex candidates
  auto wcos = Cat::from_poset(*Poset::make({"x", "y", "z"}, {{0, 2}, {1, 2}}));
  int ff = -1, gg = -1;
  for (int m = 0; m < wcos->nmor(); ++m) {
    if (wcos->mors[m].src == 0 && wcos->mors[m].tgt == 2) ff = m;
    if (wcos->mors[m].src == 1 && wcos->mors[m].tgt == 2) gg = m;
  }
  CHECK_FALSE(pullback(*wcos, ff, gg).has_value());

  std::string err;
  CHECK_FALSE(pullback(*c, f, c->ident[0], &err).has_value());
  CHECK(err.find("cospan") != std::string::npos);
}

TEST_CASE("coend over a discrete category is the disjoint union") {
  auto c = Cat::discrete(2);
  CoendWeight w;
  w.a = c;
  w.sizes = {{2, 1}, {1, 3}};
  w.lact = [](int, int, int e) { return e; };
  w.ract = [](int, int, int e) { return e; };
  auto r = coend(w);
  REQUIRE(r.has_value());
  CHECK(r->carrier.size() == 5);  // 2 + 3, discrete partition
}

TEST_CASE("coend of constant singleton weight over walking arrow is a point") {
  auto c = Cat::walking_arrow();
  CoendWeight w;
  w.a = c;
  w.sizes = {{1, 1}, {1, 1}};
  w.lact = [](int, int, int e) { return e; };
  w.ract = [](int, int, int e) { return e; };
  auto r = coend(w);
  REQUIRE(r.has_value());
  CHECK(r->carrier.size() == 1);
}

namespace {

CoendWeight hom_weight(CatPtr c) {
  CoendWeight w;
  w.a = c;
  const int n = c->nobj();
  w.sizes.assign(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) w.sizes[x][y] = static_cast<int>(c->hom(x, y).size());
  auto hom_index = [c](int x, int y, int m) {
    auto h = c->hom(x, y);
    for (size_t i = 0; i < h.size(); ++i)
      if (h[i] == m) return static_cast<int>(i);
    return -1;
  };
  w.lact = [c, hom_index](int f, int y, int e) {
    int xp = c->mors[f].tgt, x = c->mors[f].src;
    int m = c->hom(xp, y)[e];
    return hom_index(x, y, c->comp[m][f]);
  };
  w.ract = [c, hom_index](int f, int x, int e) {
    int ys = c->mors[f].src;
    int m = c->hom(x, ys)[e];
    return hom_index(x, c->mors[f].tgt, c->comp[f][m]);
  };
  return w;
}

}  // namespace

TEST_CASE("hom-weight coend: class per component of the element construction") {
  // walking arrow: the two identity endomorphisms share no zig-zag (there
  // is no morphism back), so they survive as distinct classes
  auto r = coend(hom_weight(Cat::walking_arrow()));
  REQUIRE(r.has_value());
  CHECK(r->carrier.size() == 2);

  // an isomorphic pair x ~= y collapses the two identities: with u: x->y,
  // v: y->x inverse, v∘u ~ u∘v identifies id_x with id_y
  auto iso = std::make_shared<Poset>();
  iso->names = {"x", "y"};
  iso->below.assign(2, Mask(2));
  iso->below[0].set(0);
  iso->below[0].set(1);
  iso->below[1].set(0);
  iso->below[1].set(1);
  auto c = Cat::from_poset(*iso);  // thin category with an iso pair
  auto r2 = coend(hom_weight(c));
  REQUIRE(r2.has_value());
  CHECK(r2->carrier.size() == 1);
}

TEST_CASE("coend is invariant under relabeling of objects") {
  // permute the objects of a small category; carriers must stay bijective
  auto diamond = Poset::make({"bot", "a", "b", "top"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto c = Cat::from_poset(*diamond);
  auto perm_poset = Poset::make({"top", "b", "a", "bot"},
                                {{3, 2}, {3, 1}, {2, 0}, {1, 0}});
  auto cp = Cat::from_poset(*perm_poset);
  auto r1 = coend(hom_weight(c));
  auto r2 = coend(hom_weight(cp));
  REQUIRE(r1.has_value());
  REQUIRE(r2.has_value());
  CHECK(r1->carrier.size() == r2->carrier.size());
}

TEST_CASE("coend rejects non-functorial weights") {
  auto c = Cat::walking_arrow();
  CoendWeight w;
  w.a = c;
  w.sizes = {{2, 2}, {2, 2}};
  w.lact = [](int, int, int e) { return 1 - e; };  // identity does not act as identity
  w.ract = [](int, int, int e) { return e; };
  std::string err;
  CHECK_FALSE(coend(w, &err).has_value());
  CHECK_FALSE(err.empty());
}

TEST_CASE("posetal left extension oracle") {
  auto pt = Poset::chain(1);
  auto c2 = Poset::chain(2);

  SUBCASE("extension along identity is the map itself") {
    Mono f = Mono::constant(c2, c2, 1);
    auto r = left_extension_oracle(Mono::identity(c2), f, 0);
    REQUIRE(r.status == OracleStatus::kFound);
    CHECK(same_map(*r.ext, f));
  }

  SUBCASE("point into 2-chain along bottom inclusion: least extension") {
    Mono incl{pt, c2, {0}};   // pick bottom of B
    Mono f{pt, c2, {0}};      // value bottom
    auto r = left_extension_oracle(incl, f, 0);
    REQUIRE(r.status == OracleStatus::kFound);
    CHECK(r.ext->at == std::vector<int>{0, 0});
    CHECK(certify_left_extension(incl, f, *r.ext, 0) == CertifyStatus::kYes);
    CHECK(check_extension_biconditional(incl, f, *r.ext, 0) == CertifyStatus::kYes);
  }

  SUBCASE("missing joins make the extension absent") {
    // X = 2 points mapping to the two minimal elements of a V-shape with
    // two incomparable tops: no least upper bound, no extension
    auto a2 = Poset::antichain(2);
    auto twotops = Poset::make({"p", "q", "t1", "t2"},
                               {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
    Mono along{a2, pt, {0, 0}};  // collapse to the point
    Mono of{a2, twotops, {0, 1}};
    auto r = left_extension_oracle(along, of, 0);
    CHECK(r.status == OracleStatus::kAbsent);
  }

  SUBCASE("budget exceeded is an error, not an answer") {
    auto c4 = Poset::chain(4);
    Mono along = Mono::identity(c4);
    Mono of = Mono::identity(c4);
    auto r = left_extension_oracle(along, of, 2);
    CHECK(r.status == OracleStatus::kBudget);
  }
}

TEST_CASE("least extension via joins agrees with the oracle") {
  auto a2 = Poset::antichain(2);
  auto diamond = Poset::make({"bot", "a", "b", "top"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto joins = certify_joins(diamond);
  REQUIRE(joins.has_value());
  // antichain includes at the two atoms; extend along the inclusion into
  // the doubleton's downset lattice? here: along the identity-of-carrier
  // into the diamond: join of atoms = top
  auto pt2 = Poset::antichain(2);
  Mono along{pt2, Poset::chain(1), {0, 0}};
  Mono of{pt2, diamond, {1, 2}};
  Mono least = least_extension_into(along, of, *joins);
  CHECK(least.at == std::vector<int>{3});
  auto r = left_extension_oracle(along, of, 0);
  REQUIRE(r.status == OracleStatus::kFound);
  CHECK(same_map(*r.ext, least));
}

TEST_CASE("downset lattice of small carriers") {
  auto c2 = Poset::chain(2);
  auto d = DownLat::over(c2);
  CHECK(d.size() == 3);  // {}, {a}, {a,b}

  auto a2 = Poset::antichain(2);
  auto d2 = DownLat::over(a2);
  CHECK(d2.size() == 4);

  auto empty = DownLat::over(Poset::antichain(0));
  CHECK(empty.size() == 1);
}

TEST_CASE("join completion doctrine: units and extensions") {
  JoinsDoctrine dr;
  auto c2 = Poset::chain(2);
  auto pa = dr.apply(c2);
  CHECK(pa.obj->size() == 3);
  // unit of the top covers both elements
  CHECK(pa.lat->mask_of(pa.unit.at[1]).count() == 2);

  // extending the unit along the unit is the identity (Def-style axiom a)
  Mono ybar = dr.extend(pa.unit, pa, pa);
  CHECK(same_map(ybar, Mono::identity(pa.obj)));

  // unit of a discrete carrier is the singleton indicator
  auto a2 = Poset::antichain(2);
  auto qa = dr.apply(a2);
  CHECK(qa.lat->mask_of(qa.unit.at[0]).count() == 1);
}

TEST_CASE("preorder unit need not be injective") {
  // x ~= y isomorphic pair, kept as a preorder
  auto pre = std::make_shared<Poset>();
  pre->names = {"x", "y"};
  pre->below.assign(2, Mask(2));
  pre->below[0].set(0);
  pre->below[0].set(1);
  pre->below[1].set(0);
  pre->below[1].set(1);
  CHECK_FALSE(pre->is_antisymmetric());
  JoinsDoctrine dr;
  auto pa = dr.apply(pre);
  CHECK(pa.unit.at[0] == pa.unit.at[1]);
}

TEST_CASE("admissibility under join completion and identity doctrine") {
  JoinsDoctrine joins;
  IdentityDoctrine ident;
  auto c2 = Poset::chain(2);
  auto c3 = Poset::chain(3);

  SUBCASE("every monotone map is admissible for the join completion") {
    auto pa = joins.apply(c2), pb = joins.apply(c3);
    int found = 0, total = 0;
    for_each_monotone(c2, c3, 0, [&](const Mono& l) {
      ++total;
      if (check_admissible(joins, l, pa, pb)) ++found;
      return true;
    });
    CHECK(total == 6);
    CHECK(found == total);
  }

  SUBCASE("identity map under identity doctrine has identity witness") {
    auto pa = ident.apply(c2);
    auto w = check_admissible(ident, Mono::identity(c2), pa, pa);
    REQUIRE(w.has_value());
    CHECK(same_map(w->res, Mono::identity(c2)));
  }

  SUBCASE("non-right-adjoint map is inadmissible under the identity doctrine") {
    // surjection diamond -> chain2 collapsing the two atoms upward fails to
    // have a right adjoint when it does not preserve joins
    auto diamond = Poset::make({"bot", "a", "b", "top"},
                               {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto pa = ident.apply(diamond);
    auto pb = ident.apply(c2);
    Mono l{diamond, c2, {0, 1, 0, 1}};  // monotone? bot->0, a->1, b->0, top->1
    REQUIRE(l.validate());
    auto w = check_admissible(ident, l, pa, pb);
    // res(0) would need a greatest element mapping <= 0: candidates {bot, b};
    // greatest is b; res(1) greatest of all = top. Triangles: l(res(0)) = l(b)=0 ok...
    // this particular l is a right adjointable; build a genuinely failing one:
    CHECK(w.has_value());
    Mono l2{c2, diamond, {1, 2}};  // not monotone (a and b incomparable) -> invalid
    CHECK_FALSE(l2.validate());
    // collapse of 2-antichain to a point has a right adjoint iff the point
    // has a greatest preimage; with the antichain there is none
    auto a2 = Poset::antichain(2);
    auto p1 = Poset::chain(1);
    Mono collapse{a2, p1, {0, 0}};
    auto wa = check_admissible(ident, collapse, ident.apply(a2), ident.apply(p1));
    CHECK_FALSE(wa.has_value());
  }
}

TEST_CASE("P-fully-faithful checks") {
  JoinsDoctrine joins;
  auto a2 = Poset::antichain(2);
  auto p1 = Poset::chain(1);
  auto c3 = Poset::chain(3);
  auto c2 = Poset::chain(2);

  // identity is pff
  CHECK(check_p_fully_faithful(joins, Mono::identity(c2), joins.apply(c2), joins.apply(c2)));
  // collapsing a 2-antichain to the point is not
  Mono collapse{a2, p1, {0, 0}};
  CHECK_FALSE(check_p_fully_faithful(joins, collapse, joins.apply(a2), joins.apply(p1)));
  CHECK_FALSE(joins_pff_biconditional(collapse));
  // subchain inclusion is
  Mono incl{c2, c3, {0, 2}};
  CHECK(check_p_fully_faithful(joins, incl, joins.apply(c2), joins.apply(c3)));
  CHECK(joins_pff_biconditional(incl));
  // generic hom-table comparison agrees with the biconditional on samples
  for_each_monotone(c2, c3, 0, [&](const Mono& l) {
    CHECK(check_p_fully_faithful(joins, l, joins.apply(c2), joins.apply(c3)) ==
          joins_pff_biconditional(l));
    return true;
  });
}

TEST_CASE("cat-regime left extension oracle: identity case") {
  auto c = Cat::walking_arrow();
  Fun f = Fun::identity(c);
  auto r = left_extension_oracle_cat(Fun::identity(c), f, 100000);
  REQUIRE(r.status == OracleStatus::kFound);
  CHECK(same_fun(*r.ext, f));
}
