#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/mask.hpp"

namespace kzlab {

struct Poset;
using PosetPtr = std::shared_ptr<const Poset>;

// A finite poset (or preorder when `antisymmetric` is false). Elements are
// indexed densely; `names` fixes the canonical order used by every
// enumeration, so results are deterministic.
struct Poset {
  std::vector<std::string> names;
  std::vector<Mask> below;  // below[i] = { j : j <= i }, includes i itself

  int size() const { return static_cast<int>(names.size()); }
  bool leq(int i, int j) const { return below[j].test(i); }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;

  // Meet/join of a subset if it exists (least upper bound / greatest lower
  // bound certified by scanning all candidates).
  std::optional<int> join_of(const Mask& subset) const;
  std::optional<int> meet_of(const Mask& subset) const;

  Mask down_closure(const Mask& s) const;

  static PosetPtr chain(int n);
  static PosetPtr antichain(int n);
  static PosetPtr make(std::vector<std::string> names,
                       const std::vector<std::pair<int, int>>& leq_pairs);

  // Quotients a preorder by its isomorphism classes, producing a poset.
  // Returns the quotient together with the class map.
  static std::pair<PosetPtr, std::vector<int>> quotient_preorder(const Poset& p);
};

// A monotone map between posets. Totality and monotonicity are validated on
// construction paths that accept untrusted data; internal constructors trust
// their inputs but `validate()` is cheap enough to call in tests.
struct Mono {
  PosetPtr src;
  PosetPtr dst;
  std::vector<int> at;

  int operator()(int i) const { return at[i]; }
  bool validate() const;

  static Mono identity(PosetPtr p);
  static Mono constant(PosetPtr s, PosetPtr d, int value);
  static Mono compose(const Mono& g, const Mono& f);  // g after f
};

bool same_map(const Mono& f, const Mono& g);

// Posetal 2-cell: a 2-cell f => g between parallel monotone maps exists
// exactly when f <= g pointwise, and is then unique.
bool cell_leq(const Mono& f, const Mono& g);

// Enumerates all monotone maps src -> dst in canonical (lexicographic)
// order, aborting with std::nullopt once more than `budget` maps were
// produced. `budget <= 0` means unbounded.
std::optional<std::vector<Mono>> enumerate_monotone(PosetPtr src, PosetPtr dst,
                                                    long long budget);

// Visits monotone maps one at a time; the callback returns false to stop.
// Returns false if the budget was exhausted before the enumeration finished.
bool for_each_monotone(PosetPtr src, PosetPtr dst, long long budget,
                       const std::function<bool(const Mono&)>& fn);

long long count_monotone(PosetPtr src, PosetPtr dst, long long cap);

bool posets_isomorphic(const Poset& a, const Poset& b);

}  // namespace kzlab
