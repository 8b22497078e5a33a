#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "kzlab/core/cat.hpp"
#include "kzlab/core/joins.hpp"
#include "kzlab/core/poset.hpp"

namespace kzlab {

// The lattice of 2-valued presheaves on a carrier: boolean vectors over the
// carrier's elements closed under "has a morphism into". For posets these
// are the downsets; for a category the reachability preorder is used. The
// closure condition is enforced at construction: feeding a non-closed
// vector to `index_of` is an error, not a silent fixup.
class DownLat {
 public:
  // `below[i]` of the carrier must already be reflexive-transitive.
  static DownLat over(PosetPtr carrier, long long max_elements = 1 << 21);
  static DownLat over_cat(CatPtr c, long long max_elements = 1 << 21);

  PosetPtr carrier() const { return carrier_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Mask& mask_of(int i) const { return elems_[i]; }

  // Index of a closed vector; throws std::invalid_argument on non-closed input.
  int index_of(const Mask& m) const;
  bool is_closed(const Mask& m) const;

  int principal(int carrier_elt) const;  // unit component value
  int bottom() const { return bottom_; }
  int join(const Mask& element_subset) const;  // join of a set of lattice elements
  int join2(int a, int b) const;
  bool leq(int a, int b) const { return elems_[a].subset_of(elems_[b]); }

  // Materialized poset view (canonical order = construction order).
  PosetPtr as_poset() const;
  JoinProvider joins() const;

 private:
  PosetPtr carrier_;
  std::vector<Mask> elems_;
  std::unordered_map<Mask, int, MaskHash> index_;
  int bottom_ = -1;
  mutable PosetPtr poset_;  // built lazily
};

}  // namespace kzlab
