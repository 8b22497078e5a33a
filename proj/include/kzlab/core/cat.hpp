#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/poset.hpp"

namespace kzlab {

struct Cat;
using CatPtr = std::shared_ptr<const Cat>;

// A finite category as dense tables: objects, morphisms (identities
// included), an identity table and a composition table. comp[g][f] is g∘f
// when tgt(f) == src(g) and -1 otherwise.
struct Cat {
  struct Mor {
    std::string id;
    int src;
    int tgt;
  };

  std::vector<std::string> objs;
  std::vector<Mor> mors;
  std::vector<int> ident;                 // obj -> morphism index
  std::vector<std::vector<int>> comp;     // comp[g][f] = g∘f

  int nobj() const { return static_cast<int>(objs.size()); }
  int nmor() const { return static_cast<int>(mors.size()); }
  int compose(int g, int f) const { return comp[g][f]; }
  bool is_identity(int m) const { return ident[mors[m].src] == m; }

  std::vector<int> hom(int x, int y) const;

  static CatPtr from_poset(const Poset& p);
  static CatPtr discrete(int n);
  static CatPtr walking_arrow();

  // Thin + skeletal categories round-trip to posets.
  bool is_thin() const;
  std::optional<Poset> to_poset() const;
};

// Structural problems (dangling indices, ill-typed tables) are reported
// separately from category-law violations so constructed counterexamples
// and malformed inputs are distinguishable.
struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<std::string> violations;
  bool structurally_sound() const { return structural.empty(); }
  bool ok() const { return structural.empty() && violations.empty(); }
};

ValidationReport validate_category(const Cat& c);

struct Fun {
  CatPtr src;
  CatPtr dst;
  std::vector<int> o;  // object map
  std::vector<int> m;  // morphism map

  bool validate(std::string* why = nullptr) const;
  static Fun identity(CatPtr c);
  static Fun compose(const Fun& g, const Fun& f);
};

bool same_fun(const Fun& f, const Fun& g);

// A 2-cell between parallel functors, given by components. When both
// hom-categories are thin the family is forced and this is just a check.
struct Nat {
  Fun f;
  Fun g;
  std::vector<int> at;  // obj of src -> morphism of dst, F x -> G x

  bool validate(std::string* why = nullptr) const;
  bool invertible() const;
  static Nat identity(const Fun& f);
  static Nat vcomp(const Nat& b, const Nat& a);          // b∘a : f => h
  static Nat whisker_left(const Fun& h, const Nat& a);   // h∘a : h f => h g
  static Nat whisker_right(const Nat& a, const Fun& h);  // a∘h : f h => g h
};

std::vector<Nat> enumerate_nats(const Fun& f, const Fun& g, long long budget);

// All functors src -> dst, in canonical order, budget-capped (nullopt on
// budget exhaustion).
std::optional<std::vector<Fun>> enumerate_functors(CatPtr src, CatPtr dst,
                                                   long long budget);

bool cats_isomorphic(const Cat& a, const Cat& b);

}  // namespace kzlab
