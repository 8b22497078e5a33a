#pragma once

#include <functional>
#include <optional>

#include "kzlab/core/poset.hpp"

namespace kzlab {

// A poset together with certified arbitrary joins (finite => complete
// lattice). `join_of` takes a subset mask of the poset's elements; the empty
// subset yields the bottom.
struct JoinProvider {
  PosetPtr p;
  std::function<int(const Mask&)> join_of;
};

// Certifies that `p` has all joins by checking the bottom and every binary
// join exhaustively; finite joins are then folds of binary ones. Returns
// nothing when some join is missing.
std::optional<JoinProvider> certify_joins(PosetPtr p);

}  // namespace kzlab
