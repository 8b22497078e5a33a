#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/cat.hpp"
#include "kzlab/core/finset.hpp"
#include "kzlab/doctrine/downset.hpp"
#include "kzlab/yoneda/yoneda.hpp"

namespace kzlab {

struct Span {
  int left_foot;
  int right_foot;
  int apex;
  int left_leg;   // apex -> left_foot
  int right_leg;  // apex -> right_foot
};

// The category of spans x -> y over a base: objects are spans, morphisms
// are apex maps commuting with both legs.
struct SpanHomCat {
  CatPtr base;
  int x, y;
  std::vector<Span> spans;
  CatPtr cat;
  std::vector<std::pair<int, int>> mor_ends;  // per cat morphism: (src,tgt) span
  std::vector<int> apex_map;                  // per cat morphism: base morphism

  int find_morphism(int src_span, int tgt_span, int base_mor) const;
};

std::shared_ptr<const SpanHomCat> span_hom_cat(CatPtr base, int x, int y);

// Composite via the terminal cone over the middle cospan; absent when the
// base lacks that pullback.
std::optional<Span> compose_spans(const Cat& base, const Span& s, const Span& t,
                                  std::string* err = nullptr);

Span identity_span(const Cat& base, int x);

// Invertible apex map commuting with the legs.
std::optional<int> span_iso(const Cat& base, const Span& a, const Span& b);

// ---- FinSet-valued presheaves on a span hom-category ----

struct SpanPresheaf {
  std::shared_ptr<const SpanHomCat> hom;
  std::vector<int> sizes;                      // per span
  std::vector<std::vector<int>> restrict_to;   // per cat morphism m : s -> s',
                                               // table F(s') -> F(s)
  bool validate(std::string* why = nullptr) const;
};

SpanPresheaf representable_presheaf(std::shared_ptr<const SpanHomCat> hom, int span);
SpanPresheaf coproduct_presheaf(std::shared_ptr<const SpanHomCat> hom,
                                const std::vector<int>& spans_with_multiplicity);
SpanPresheaf empty_presheaf(std::shared_ptr<const SpanHomCat> hom);

// The convolution composite: value at (u;v) is the disjoint union over
// middle legs h of F(u;h) x G(h;v), with the contravariant action along
// apex maps.
std::optional<SpanPresheaf> conv_compose(const SpanPresheaf& f, const SpanPresheaf& g,
                                         std::shared_ptr<const SpanHomCat> target,
                                         std::string* err = nullptr);

// Coend-based composite (the full convolution formula); returns the value
// cardinality per target span, computed with the generic coend machinery.
std::optional<std::vector<int>> day_coend_sizes(const SpanPresheaf& f,
                                                const SpanPresheaf& g,
                                                const SpanHomCat& target,
                                                std::string* err = nullptr);

// ---- posetal shadow over a lattice base and the oplax/lax transfer ----

// The span bicategory of a base where all needed pullbacks exist, with
// hom-posets the iso-quotiented span preorders.
struct SpanBicats {
  PosetalBicat plain;       // spans
  PosetalBicat completed;   // hom-wise downset completion with convolution
  std::vector<std::vector<std::shared_ptr<const DownLat>>> completion;
  LocalFamily unit;         // hom-wise principal-downset family
};

std::optional<SpanBicats> build_span_bicats(CatPtr base, std::string* err = nullptr);

struct TransferReport {
  bool extensions_exist = false;  // hom-level extensions R_L all present
  bool lax_on_r = false;
  bool oplax_on_l = false;
  bool round_trip = false;
  std::string detail;
};

// Applies the hom-wise bijection: an oplax structure on the local family L
// corresponds to a lax structure on the family of hom-level extensions R_L.
TransferReport transfer_lax_from_oplax(const SpanBicats& sb, const LocalFamily& l);

}  // namespace kzlab
