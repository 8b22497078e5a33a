#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/joins.hpp"
#include "kzlab/core/oracle.hpp"
#include "kzlab/monad/monad.hpp"

namespace kzlab {

// A pseudo-algebra in the posetal regime. The structure map may be partial
// (-1 entries) when the carrier is itself an iterated monad application and
// only the flatten-bounded window is realized (free algebras); checkers
// skip undefined slots and report how many were skipped.
struct PosetAlgebra {
  PosetPtr carrier;
  PosetPtr tcarrier;       // obj(carrier) of the monad in play
  std::vector<int> x;      // index into carrier, or -1 where unrealized

  bool total() const;
  int apply(int w) const { return x[w]; }
};

// Monoid structure on a poset: a monotone associative multiplication with
// unit. Used to build word-monad algebras.
struct MonoidStructure {
  PosetPtr p;
  int unit;
  std::vector<std::vector<int>> op;

  bool validate() const;  // monotone in each slot, associative, unital
};

PosetAlgebra monoid_algebra(const PosetMonad& t, const MonoidStructure& m);
PosetAlgebra free_algebra(const PosetMonad& t, PosetPtr a);

// Every monoid structure on `p`, enumerated deterministically.
std::vector<MonoidStructure> enumerate_monoids(PosetPtr p);

struct AlgebraReport {
  bool structure_monotone = false;
  bool unit_law = false;   // x ∘ u = id (the posetal invertible ν)
  bool assoc_law = false;  // x ∘ T x = x ∘ m on the T² window (invertible μ)
  int skipped = 0;         // window slots with no realized value
  bool ok() const { return structure_monotone && unit_law && assoc_law; }
};

AlgebraReport check_algebra(const PosetMonad& t, const PosetAlgebra& alg);

enum class MorphismKind { kOplax, kLax, kPseudo };

struct AlgebraMorphism {
  Mono map;  // between the carriers
  MorphismKind kind;
};

struct MorphismReport {
  bool map_monotone = false;
  bool cell_exists = false;  // the structure 2-cell in the declared direction
  int skipped = 0;
  bool ok() const { return map_monotone && cell_exists; }
};

// The posetal structure cell for f : (A,x) -> (B,y):
//   oplax:  f∘x <= y∘Tf,  lax:  y∘Tf <= f∘x,  pseudo: equality.
// Coherence axioms are forced once the cell exists (parallel cells in a
// poset are equal), so the report carries only existence.
MorphismReport check_morphism(const PosetMonad& t, const PosetAlgebra& a,
                              const PosetAlgebra& b, const AlgebraMorphism& f);

// A square of algebra morphisms (verticals oplax, horizontals lax) with a
// candidate diagonal cell zeta : top∘left_vert => right_horiz∘... ; the cube
// condition reduces to the existence of every boundary cell plus zeta.
struct TransformationSquare {
  PosetAlgebra b, c, d, a;     // corners: (B,y) --R--> (C,z); (D,w) --M--> (A,x)
  AlgebraMorphism r;           // lax    B -> C
  AlgebraMorphism m;           // lax    D -> A
  AlgebraMorphism n;           // oplax  D -> B
  AlgebraMorphism i;           // oplax  A -> C
};

struct TransformationReport {
  bool boundary_ok = false;  // all four structure cells exist
  bool zeta_exists = false;  // i∘m <= r∘n
  bool ok() const { return boundary_ok && zeta_exists; }
};

TransformationReport check_transformation(const PosetMonad& t,
                                          const TransformationSquare& sq);

// Whether the 1-cell z : T C -> D T-preserves the left extension
// (ext : B -> C of `of` : X -> C along `along` : X -> B): applies T to the
// exhibiting diagram, whiskers by z and re-certifies. Uses the join formula
// when a certificate for D is supplied, the brute-force oracle otherwise.
CertifyStatus t_preserves_extension(const PosetMonad& t, const Mono& z,
                                    const Mono& along, const Mono& of, const Mono& ext,
                                    const std::optional<JoinProvider>& target_joins,
                                    long long budget);

// Induced structures. Both return the cell-existence result; when the
// pasting hypothesis holds but no structure cell can exist the outcome is
// an inconsistency (a violated hypothesis), reported distinctly.
enum class InducedStatus { kOk, kPreconditionFailed, kInconsistent };

struct InducedResult {
  InducedStatus status;
  std::optional<AlgebraMorphism> morphism;
  std::string detail;
};

// Unique lax structure on the left extension r of i along l making the
// exhibiting cell a T-transformation; sigma/alpha are the given lax/oplax
// structures on i and l.
InducedResult induced_lax_on_extension(const PosetMonad& t, const PosetAlgebra& xa,
                                       const PosetAlgebra& xb, const PosetAlgebra& xc,
                                       const Mono& l, const Mono& i, const Mono& r);

// Unique oplax structure on the partial left adjoint l (eta : i <= r∘l an
// absolute left lifting) given oplax xi on i and lax beta on r.
InducedResult induced_oplax_on_lifting(const PosetMonad& t, const PosetAlgebra& xa,
                                       const PosetAlgebra& xb, const PosetAlgebra& xc,
                                       const Mono& l, const Mono& i, const Mono& r);

}  // namespace kzlab
