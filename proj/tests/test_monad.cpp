#include "doctest.h"

#include "kzlab/monad/algebra.hpp"
#include "kzlab/monad/monad.hpp"

using namespace kzlab;

namespace {

std::vector<Mono> probe_maps(PosetPtr a) {
  std::vector<Mono> ps;
  ps.push_back(Mono::identity(a));
  if (a->size() > 0) ps.push_back(Mono::constant(a, Poset::chain(1), 0));
  // a monotone surjection onto a 2-chain when one exists
  auto c2 = Poset::chain(2);
  for_each_monotone(a, c2, 50, [&](const Mono& m) {
    ps.push_back(m);
    return ps.size() < 6;
  });
  return ps;
}

// 2-chain monoid e <= a with a·a = a
MonoidStructure chain2_monoid() {
  auto p = Poset::chain(2);
  return MonoidStructure{p, 0, {{0, 1}, {1, 1}}};
}

}  // namespace

TEST_CASE("identity monad satisfies the laws") {
  auto t = identity_monad();
  for (auto a : {Poset::chain(3), Poset::antichain(2)})
    CHECK(check_monad_laws(*t, a, probe_maps(a)).ok());
}

TEST_CASE("word monad satisfies the laws on small posets") {
  auto t = word_monad(3);
  for (auto a : {Poset::chain(2), Poset::antichain(2), Poset::chain(3)}) {
    auto rep = check_monad_laws(*t, a, probe_maps(a));
    CHECK(rep.left_unit);
    CHECK(rep.right_unit);
    CHECK(rep.assoc);
    CHECK(rep.unit_consequence);
    CHECK(rep.unit_natural);
    CHECK(rep.mult_natural);
  }
}

TEST_CASE("word monad sizes and order") {
  auto t = word_monad(2);
  auto a = Poset::chain(2);
  auto ta = t->obj(a);
  CHECK(ta->size() == 1 + 2 + 4);
  // equal-length comparability only
  auto idx = [&](std::vector<int> w) { return *t->word_index(a, w); };
  CHECK(ta->leq(idx({0}), idx({1})));
  CHECK_FALSE(ta->leq(idx({0}), idx({0, 1})));
  CHECK(ta->leq(idx({0, 0}), idx({1, 1})));
  CHECK_FALSE(ta->leq(idx({1}), idx({0})));
}

TEST_CASE("reversed concatenation breaks associativity") {
  auto t = word_monad_reversed(3);
  auto a = Poset::antichain(2);
  auto rep = check_monad_laws(*t, a, probe_maps(a));
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.assoc);
}

TEST_CASE("monoid algebra passes the algebra laws") {
  auto t = word_monad(3);
  auto m = chain2_monoid();
  REQUIRE(m.validate());
  auto alg = monoid_algebra(*t, m);
  CHECK(alg.total());
  auto rep = check_algebra(*t, alg);
  CHECK(rep.ok());
  CHECK(rep.skipped == 0);
}

TEST_CASE("free algebra passes the algebra laws on the realized window") {
  auto t = word_monad(2);
  auto a = Poset::chain(2);
  auto alg = free_algebra(*t, a);
  CHECK_FALSE(alg.total());  // some words of words exceed the cap
  auto rep = check_algebra(*t, alg);
  CHECK(rep.ok());
}

TEST_CASE("non-associative table is rejected by enumerate/validate") {
  auto p = Poset::chain(2);
  MonoidStructure bad{p, 0, {{0, 1}, {1, 0}}};  // Z2: valid monoid, monotone?
  // z2 multiplication is not monotone for the chain order: a<=b but a*a=0 > b*a=... check
  // enumerate and confirm every returned structure validates
  auto monos = enumerate_monoids(p);
  CHECK(!monos.empty());
  for (const auto& m : monos) CHECK(m.validate());
  // the 2-chain with meet is among them
  bool found_meet = false;
  for (const auto& m : monos)
    if (m.unit == 1 && m.op[0][0] == 0 && m.op[1][1] == 1) found_meet = true;
  CHECK(found_meet);
}

TEST_CASE("morphism structure cells in the three flavours") {
  auto t = word_monad(3);
  auto m = chain2_monoid();
  auto alg = monoid_algebra(*t, m);

  // identity is pseudo
  AlgebraMorphism id{Mono::identity(m.p), MorphismKind::kPseudo};
  CHECK(check_morphism(*t, alg, alg, id).ok());

  // constant at the top is lax for the chain2 monoid (top absorbs):
  // x_B(T c(w)) = product of tops = top >= ... wait both: top∘x vs x∘Tc gives top = top
  AlgebraMorphism ctop{Mono::constant(m.p, m.p, 1), MorphismKind::kLax};
  auto rep = check_morphism(*t, alg, alg, ctop);
  CHECK(rep.map_monotone);
  // c(x(w)) = 1 and x(Tc(w)) = product of 1s = 1, except the empty word:
  // x(Tc([])) = e = 0 <= 1 = c(x([])), so lax holds and pseudo fails
  CHECK(rep.cell_exists);
  AlgebraMorphism ctop_ps{Mono::constant(m.p, m.p, 1), MorphismKind::kPseudo};
  CHECK_FALSE(check_morphism(*t, alg, alg, ctop_ps).cell_exists);
}

TEST_CASE("identity transformation square passes") {
  auto t = word_monad(2);
  auto m = chain2_monoid();
  auto alg = monoid_algebra(*t, m);
  AlgebraMorphism idlax{Mono::identity(m.p), MorphismKind::kLax};
  AlgebraMorphism idop{Mono::identity(m.p), MorphismKind::kOplax};
  TransformationSquare sq{alg, alg, alg, alg, idlax, idlax, idop, idop};
  CHECK(check_transformation(*t, sq).ok());
}

TEST_CASE("induced lax structure: identity monad recovers the evident pasting") {
  auto t = identity_monad();
  auto c2 = Poset::chain(2);
  PosetAlgebra triv{c2, c2, {0, 1}};
  Mono l = Mono::identity(c2), i = Mono::identity(c2), r = Mono::identity(c2);
  auto res = induced_lax_on_extension(*t, triv, triv, triv, l, i, r);
  REQUIRE(res.status == InducedStatus::kOk);
  CHECK(res.morphism->kind == MorphismKind::kLax);
}
