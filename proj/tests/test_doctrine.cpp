#include "doctest.h"

#include "kzlab/cli/corpus.hpp"
#include "kzlab/doctrine/kzchecks.hpp"

using namespace kzlab;

namespace {

// constructed violation: every extension is constant at the bottom
class ConstantBottomDoctrine final : public Doctrine {
 public:
  std::string name() const override { return "mutated"; }
  PApplied apply(PosetPtr a) const override { return inner_.apply(a); }
  Mono extend(const Mono& f, const PApplied& pa, const PApplied& pb) const override {
    (void)f;
    (void)pb;
    return Mono::constant(pa.obj, pb.obj, pb.lat->bottom());
  }
  Mono extend_into(const Mono& f, const PApplied& pa,
                   const std::optional<JoinProvider>& target) const override {
    (void)f;
    return Mono::constant(pa.obj, target->p, target->join_of(Mask(target->p->size())));
  }

 private:
  JoinsDoctrine inner_;
};

}  // namespace

TEST_CASE("poset corpus counts match the catalog") {
  CHECK(poset_corpus(0).size() == 1);
  CHECK(poset_corpus(1).size() == 2);
  CHECK(poset_corpus(2).size() == 4);   // 1+1+2
  CHECK(poset_corpus(3).size() == 9);   // +5
  CHECK(poset_corpus(4).size() == 25);  // +16
}

TEST_CASE("lattice corpus members certify joins") {
  auto ls = lattice_corpus(4);
  for (const auto& l : ls) CHECK(certify_joins(l).has_value());
  // lattices with 1..4 elements: 1, 1, 1, 2
  CHECK(ls.size() == 5);
}

TEST_CASE("selector parsing") {
  auto s = parse_selector("posets:3");
  REQUIRE(s.has_value());
  CHECK(s->kind == "posets");
  CHECK(s->max_n == 3);
  CHECK_FALSE(parse_selector("nope").has_value());
  CHECK_FALSE(parse_selector("posets:99").has_value());
}

TEST_CASE("join completion satisfies both extension axioms on small corpus") {
  JoinsDoctrine d;
  auto corpus = poset_corpus(3);
  for (const auto& a : corpus) {
    auto pa = d.apply(a);
    CHECK(check_axiom_a(d, pa).ok());
  }
  // axiom (b) with sampled F, G on a couple of triples
  auto c2 = Poset::chain(2);
  auto a2 = Poset::antichain(2);
  auto c3 = Poset::chain(3);
  auto pa = d.apply(a2), pb = d.apply(c2), pc = d.apply(c3);
  int checked = 0;
  for_each_monotone(a2, pb.obj, 0, [&](const Mono& f) {
    for_each_monotone(c2, pc.obj, 0, [&](const Mono& g) {
      auto r = check_axiom_b(d, f, g, pa, pb, pc, 2000000);
      CHECK(r.ok());
      ++checked;
      return checked < 40;
    });
    return checked < 40;
  });
  CHECK(checked > 0);
}

TEST_CASE("identity doctrine satisfies the axioms trivially") {
  IdentityDoctrine d;
  for (const auto& a : poset_corpus(3)) {
    auto pa = d.apply(a);
    CHECK(check_axiom_a(d, pa).ok());
    CHECK(check_theta(d, pa).ok());
  }
}

TEST_CASE("mutated doctrine fails axiom (a) on nonempty carriers") {
  ConstantBottomDoctrine d;
  auto pa = d.apply(Poset::chain(2));
  CHECK_FALSE(check_axiom_a(d, pa).ok());
}

TEST_CASE("theta and the KZ cell axioms hold for the join completion") {
  JoinsDoctrine d;
  for (const auto& a : poset_corpus(3)) {
    auto pa = d.apply(a);
    auto r = check_theta(d, pa);
    CHECK(r.theta_exists);
    CHECK(r.axiom_unit);
    CHECK(r.axiom_mult);
  }
}

TEST_CASE("cocompleteness classification") {
  JoinsDoctrine d;
  auto corpus = poset_corpus(2);

  SUBCASE("P A is cocomplete") {
    auto pa = d.apply(Poset::antichain(2));
    auto r = check_cocomplete(d, pa.obj, corpus, 500000, 30);
    CHECK_FALSE(r.budget_hit);
    CHECK(r.cocomplete);
  }
  SUBCASE("a join lattice is cocomplete") {
    auto diamond = Poset::make({"b", "x", "y", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto r = check_cocomplete(d, diamond, corpus, 500000, 30);
    CHECK(r.cocomplete);
  }
  SUBCASE("a 2-antichain is not cocomplete") {
    auto r = check_cocomplete(d, Poset::antichain(2), corpus, 500000, 30);
    CHECK_FALSE(r.cocomplete);
  }
}

TEST_CASE("homomorphism = join preserving, checked by extension preservation") {
  JoinsDoctrine d;
  auto corpus = poset_corpus(2);
  auto diamond = Poset::make({"b", "x", "y", "t"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto c2 = Poset::chain(2);
  // join-preserving: bottom,x,y -> 0, top -> 1? join(x,y)=t -> 1 but 0∨0=0: not join preserving
  Mono bad{diamond, c2, {0, 0, 0, 1}};
  REQUIRE(bad.validate());
  auto r = check_homomorphism(d, bad, corpus, 500000);
  CHECK_FALSE(r.cocomplete);
  // collapse everything: preserves all joins trivially? constant to 0 is not
  // join-preserving on empty... bottom maps to 0: join{} = b -> 0 fine
  Mono ok{diamond, c2, {0, 0, 0, 0}};
  auto r2 = check_homomorphism(d, ok, corpus, 500000);
  CHECK(r2.cocomplete);
  // the identity on a lattice is a homomorphism
  Mono idm = Mono::identity(diamond);
  CHECK(check_homomorphism(d, idm, corpus, 500000).cocomplete);
}

TEST_CASE("doctrine morphisms: identity => joins passes, joins => identity fails") {
  JoinsDoctrine joins;
  IdentityDoctrine ident;
  auto corpus = poset_corpus(2);

  auto m = identity_to_joins_morphism(corpus);
  auto rep = check_doctrine_morphism(ident, joins, m, 500000);
  CHECK(rep.ok());
  CHECK(doctrine_morphisms_equal(m, m));

  // the reverse direction: components P A -> A would have to preserve unit
  // extensions; a corpus poset without joins breaks the assertions. No
  // component exists at all for the empty poset (P(0) is nonempty), so the
  // data is formed over the nonempty members only.
  DoctrineMorphismData back;
  for (const auto& a : corpus) {
    if (a->size() == 0) continue;
    back.corpus.push_back(a);
    auto pa = joins.apply(a);
    back.alpha.push_back(Mono::constant(pa.obj, a, 0));
  }
  auto rep2 = check_doctrine_morphism(joins, ident, back, 500000);
  CHECK_FALSE(rep2.ok());
}

TEST_CASE("identity doctrine morphism on itself passes") {
  IdentityDoctrine ident;
  auto corpus = poset_corpus(2);
  DoctrineMorphismData m;
  m.corpus = corpus;
  for (const auto& a : corpus) m.alpha.push_back(Mono::identity(a));
  CHECK(check_doctrine_morphism(ident, ident, m, 500000).ok());
}

TEST_CASE("admissibility witness agrees with the oracle-certified extension") {
  JoinsDoctrine d;
  auto c2 = Poset::chain(2);
  auto a2 = Poset::antichain(2);
  auto pa = d.apply(c2), pb = d.apply(a2);
  for_each_monotone(c2, a2, 0, [&](const Mono& l) {
    auto w = check_admissible(d, l, pa, pb);
    REQUIRE(w.has_value());
    auto oracle = left_extension_oracle(l, pa.unit, 500000);
    REQUIRE(oracle.status == OracleStatus::kFound);
    CHECK(same_map(*oracle.ext, w->r_l));
    return true;
  });
}
