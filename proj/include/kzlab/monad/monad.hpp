#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kzlab/core/poset.hpp"

namespace kzlab {

// A pseudomonad on posets, in the locally-posetal regime where coherence
// witnesses are forced (invertible cells are equalities of monotone maps).
//
// Iterated applications are materialized as flatten-bounded windows: for the
// word monad T(T A) would contain words whose flattening exceeds the length
// cap, so `sq` (T²) and `cube` (T³) denote the subposets on which the
// multiplication composites stay inside the realized objects. The laws are
// degree-additive, so each window check is an exact instance of the
// unbounded monad's axiom.
class PosetMonad {
 public:
  virtual ~PosetMonad() = default;
  virtual std::string name() const = 0;

  virtual PosetPtr obj(PosetPtr a) const = 0;            // T A
  virtual Mono map(const Mono& f) const = 0;             // T f
  virtual Mono unit(PosetPtr a) const = 0;               // u_A : A -> T A

  virtual PosetPtr sq(PosetPtr a) const = 0;             // T² A (window)
  virtual PosetPtr cube(PosetPtr a) const = 0;           // T³ A (window)
  virtual Mono mult(PosetPtr a) const = 0;               // m_A : T² A -> T A
  virtual Mono unit_outer(PosetPtr a) const = 0;         // u_{T A} : T A -> T² A
  virtual Mono unit_inner(PosetPtr a) const = 0;         // T u_A : T A -> T² A
  virtual Mono mult_outer(PosetPtr a) const = 0;         // m_{T A} : T³ A -> T² A
  virtual Mono mult_inner(PosetPtr a) const = 0;         // T m_A : T³ A -> T² A

  // T f for f whose source is T A itself, restricted to the window:
  // T² A -> T B given f : T A -> B.
  virtual Mono map_under(const Mono& f, PosetPtr a) const = 0;
  // T² f : T² A -> T² B for f : A -> B.
  virtual Mono map_sq(const Mono& f) const = 0;

  // Element decoding, used by algebra constructors and the distributive-law
  // formulas: an element of T A reads as a word over A; an element of T² A
  // as a word over T A. `word_index` is the partial inverse (absent when
  // the word exceeds the realized window).
  virtual std::vector<int> letters(PosetPtr a, int t_elem) const = 0;
  virtual std::optional<int> word_index(PosetPtr a, const std::vector<int>& w) const = 0;
  virtual std::vector<int> sq_letters(PosetPtr a, int sq_elem) const = 0;
};

using MonadPtr = std::shared_ptr<const PosetMonad>;

MonadPtr identity_monad();
// Word monad: T A = words over A up to the length cap, ordered pointwise
// within each length. unit = singleton word, mult = concatenation.
MonadPtr word_monad(int length_cap);
// Constructed violation for tests: multiplication concatenates in reverse.
MonadPtr word_monad_reversed(int length_cap);

MonadPtr monad_by_name(const std::string& name, int length_cap);

struct MonadLawReport {
  bool left_unit = false;    // m ∘ u_T = id
  bool right_unit = false;   // m ∘ T u = id
  bool assoc = false;        // m ∘ m_T = m ∘ T m on the T³ window
  bool unit_consequence = false;  // both unit composites agree after u
  bool mult_natural = false;
  bool unit_natural = false;
  bool ok() const {
    return left_unit && right_unit && assoc && unit_consequence && mult_natural &&
           unit_natural;
  }
};

// Checks the pseudomonad laws on one carrier (all invertible witnesses are
// equalities here). Naturality is spot-checked against the supplied probe
// maps out of the carrier.
MonadLawReport check_monad_laws(const PosetMonad& t, PosetPtr a,
                                const std::vector<Mono>& probes);

}  // namespace kzlab
