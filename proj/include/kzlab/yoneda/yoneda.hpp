#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzlab/distlaw/distlaw.hpp"
#include "kzlab/monad/algebra.hpp"

namespace kzlab {

// ---- locally fully faithful preservation ----

struct LocalFFReport {
  bool units_ff = true;         // all units are order embeddings
  bool t_units_ff = true;       // so are their T-images
  bool adm_ff_preserved = true; // T preserves admissible + fully faithful maps
  std::string detail;
  bool ok() const { return units_ff && t_units_ff && adm_ff_preserved; }
};

LocalFFReport check_locally_ff_preservation(const std::vector<LawContext>& cxs,
                                            long long budget);

// ---- doctrinal Yoneda structure ----

struct YonedaDiagram {
  Mono l;    // A -> B, admissible
  Mono r_l;  // B -> P A from the admissibility witness
  bool left_extension_certified = false;
  bool absolute_lifting_certified = false;
  bool ok() const { return left_extension_certified && absolute_lifting_certified; }
};

// Builds the diagram and certifies that the same cell exhibits both the
// left extension and the absolute left lifting (by candidate enumeration
// over the supplied corpus).
YonedaDiagram make_yoneda_diagram(const LawContext& cx, const Mono& l,
                                  const PApplied& pb,
                                  const std::vector<PosetPtr>& corpus,
                                  long long budget);

struct BijectionOutcome {
  bool preservation_hypotheses = false;  // z_x T-preserves the diagram
  bool oplax_on_l = false;               // an oplax structure cell exists on L
  bool lax_on_r = false;                 // a lax structure cell exists on R_L
  bool round_trip = false;               // the two sides exist exactly together
};

// The bijection between oplax structures on L and lax structures on R_L
// over the convolution algebra at x; in the posetal regime structure cells
// are unique, so the bijection is the equivalence of existence and the
// round-trip is the identity on cells whenever both sides are present.
BijectionOutcome yoneda_bijection(const LawContext& cx, const PosetAlgebra& xa,
                                  const PosetAlgebra& xb, const YonedaDiagram& diagram,
                                  long long budget);

// Doctrinal adjunction (the identity-doctrine specialization): for an
// adjunction L -| R between algebra carriers, oplax structures on L
// correspond to lax structures on R via the mates composition, computed
// independently of the bijection machinery.
struct MatesReport {
  bool is_adjunction = false;
  bool oplax_exists = false;
  bool lax_exists = false;
  bool mate_chain_forward = false;   // beta assembled from alpha stepwise
  bool mate_chain_backward = false;  // alpha assembled from beta stepwise
  bool bijective = false;            // existence matches on both sides
};
MatesReport mates_correspondence(const PosetMonad& t, const PosetAlgebra& xa,
                                 const PosetAlgebra& xb, const Mono& l, const Mono& r);

// ---- posetal bicategories and the oplax-through-lax-ff extension ----

struct PosetalBicat {
  std::vector<std::string> objs;
  std::vector<std::vector<PosetPtr>> hom;  // hom[x][y]
  // comp[x][y][z][g][f] = index of g∘f in hom[x][z]
  std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> comp;
  std::vector<int> id;  // identity 1-cell per object

  int nobj() const { return static_cast<int>(objs.size()); }
  bool validate(std::string* why = nullptr) const;
};

// A locally defined family of monotone maps between hom-posets, with no
// functor structure imposed.
struct LocalFamily {
  const PosetalBicat* src;
  const PosetalBicat* dst;
  std::vector<int> o;
  std::vector<std::vector<Mono>> local;  // indexed [x][y]
};

enum class LocalKind { kLax, kOplax };

// Whether the family carries the composition/unit cells of the given kind.
bool check_local_kind(const LocalFamily& f, LocalKind kind);
bool locally_ff(const LocalFamily& f);

enum class ExtendStatus { kOk, kMissingLocalFF, kCompositeMismatch, kNoStructure };

// g lax and locally fully faithful, h oplax, g∘f = h locally: then f
// extends to an oplax family; the structure is solved through the
// hom-level liftings and certified.
ExtendStatus extend_to_oplax_through_lax_ff(const LocalFamily& f, const LocalFamily& g,
                                            const LocalFamily& h);

}  // namespace kzlab
