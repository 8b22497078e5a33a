#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/cat.hpp"
#include "kzlab/core/joins.hpp"
#include "kzlab/core/poset.hpp"

namespace kzlab {

// All posets with up to `max_n` elements, one representative per
// isomorphism class, in a deterministic order.
std::vector<PosetPtr> poset_corpus(int max_n);

// Posets of the corpus that carry all joins (complete lattices).
std::vector<PosetPtr> lattice_corpus(int max_n);

// All categories with at most `max_n` objects and at most `max_n`
// non-identity morphisms, up to isomorphism.
std::vector<CatPtr> cat_corpus(int max_n);

// Deterministic sample of monotone maps src -> dst. When the full space
// fits under `enumeration_budget` the sample is drawn without replacement
// from the enumeration; otherwise maps are built by seeded random greedy
// assignment.
std::vector<Mono> sample_monotone(PosetPtr src, PosetPtr dst, int count,
                                  std::uint64_t seed,
                                  long long enumeration_budget = 200000);

// Parses a selector such as "posets:3" or "cats:2".
struct CorpusSelector {
  std::string kind;  // "posets" | "cats"
  int max_n = 0;
};
std::optional<CorpusSelector> parse_selector(const std::string& s);

}  // namespace kzlab
