#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/joins.hpp"
#include "kzlab/core/poset.hpp"
#include "kzlab/doctrine/downset.hpp"

namespace kzlab {

// One application P A of a doctrine, with the unit and, when the doctrine
// produces join-complete objects, the certified join structure.
struct PApplied {
  PosetPtr obj;                          // P A as a poset
  Mono unit;                             // y_A : A -> P A
  std::optional<JoinProvider> joins;     // present for the join completion
  std::shared_ptr<const DownLat> lat;    // fast lattice ops (joins doctrine only)
};

// A KZ doctrine given computationally: object map, units, extension
// operator. In the posetal regime every exhibiting cell is an equality, so
// extensions return bare maps and the checkers verify the equalities.
class Doctrine {
 public:
  virtual ~Doctrine() = default;
  virtual std::string name() const = 0;

  virtual PApplied apply(PosetPtr a) const = 0;

  // Extension of f : A -> P B along the unit of A.
  virtual Mono extend(const Mono& f, const PApplied& pa, const PApplied& pb) const = 0;

  // Target-polymorphic extension into a certified cocomplete object.
  // The joins doctrine requires the certificate; missing certificate is a
  // precondition error (std::invalid_argument).
  virtual Mono extend_into(const Mono& f, const PApplied& pa,
                           const std::optional<JoinProvider>& target) const = 0;

  // P L : P A -> P B, the extension of y_B ∘ L.
  Mono pmap(const Mono& l, const PApplied& pa, const PApplied& pb) const;

  // mult_A = extension of id_{P A} along y_{P A} : P(P A) -> P A.
  Mono mult(const PApplied& pa, const PApplied& ppa) const;
};

class JoinsDoctrine final : public Doctrine {
 public:
  explicit JoinsDoctrine(long long max_lattice = 1 << 21) : max_lattice_(max_lattice) {}
  std::string name() const override { return "joins"; }
  PApplied apply(PosetPtr a) const override;
  Mono extend(const Mono& f, const PApplied& pa, const PApplied& pb) const override;
  Mono extend_into(const Mono& f, const PApplied& pa,
                   const std::optional<JoinProvider>& target) const override;

  // Pointwise right adjoint of P L without materializing P of the target:
  // a closed vector H over B pulls back to { a : L a in H }.
  static Mask res_pointwise(const Mono& l, const Mask& h);

 private:
  long long max_lattice_;
};

class IdentityDoctrine final : public Doctrine {
 public:
  std::string name() const override { return "identity"; }
  PApplied apply(PosetPtr a) const override;
  Mono extend(const Mono& f, const PApplied& pa, const PApplied& pb) const override;
  Mono extend_into(const Mono& f, const PApplied& pa,
                   const std::optional<JoinProvider>& target) const override;
};

std::shared_ptr<const Doctrine> doctrine_by_name(const std::string& name);

// ---- admissibility ----

struct AdmissibilityWitness {
  Mono pl;    // P L
  Mono res;   // right adjoint of P L
  Mono r_l;   // res ∘ y_B
};

// Exhaustive right-adjoint search for P L, with the triangle identities
// certified; on success R_L = res ∘ y_B and the cell y_A <= R_L ∘ L is
// verified too.
std::optional<AdmissibilityWitness> check_admissible(const Doctrine& d, const Mono& l,
                                                     const PApplied& pa,
                                                     const PApplied& pb);

// P-fully-faithfulness: generically, P L reflects (and preserves) order.
bool check_p_fully_faithful(const Doctrine& d, const Mono& l, const PApplied& pa,
                            const PApplied& pb);

// The join-completion biconditional form: a map into LX exists iff one
// existed before applying L, for every pair of carrier elements.
bool joins_pff_biconditional(const Mono& l);

}  // namespace kzlab
