#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/oracle.hpp"
#include "kzlab/doctrine/doctrine.hpp"

namespace kzlab {

// Extension-axiom (a): extending the unit along itself gives the identity,
// exhibited by the identity cell.
struct AxiomAResult {
  bool extension_is_identity = false;
  bool cell_is_identity = false;
  bool ok() const { return extension_is_identity && cell_is_identity; }
};
AxiomAResult check_axiom_a(const Doctrine& d, const PApplied& pa);

// Extension-axiom (b): the extension of G preserves the extension of F.
// Checked as equality of monotone maps, with on-demand brute-force
// certification of the pasted diagram.
struct AxiomBResult {
  bool pasted_equals_extension = false;
  CertifyStatus certified = CertifyStatus::kYes;
  bool ok() const {
    return pasted_equals_extension && certified != CertifyStatus::kNo;
  }
};
AxiomBResult check_axiom_b(const Doctrine& d, const Mono& f, const Mono& g,
                           const PApplied& pa, const PApplied& pb, const PApplied& pc,
                           long long certify_budget);

// KZ structure cell theta : P y -> y P and its two axioms:
//   (1) theta whiskered by the unit is the unit's naturality cell,
//   (2) both multiplication composites with theta's boundary are identities.
struct ThetaResult {
  bool theta_exists = false;
  bool axiom_unit = false;
  bool axiom_mult = false;
  bool ok() const { return theta_exists && axiom_unit && axiom_mult; }
};
ThetaResult check_theta(const Doctrine& d, const PApplied& pa);

struct CocompletenessResult {
  bool cocomplete = true;
  bool budget_hit = false;
  std::string counterexample;
};

// Every map out of a corpus object extends along the unit into `x` with an
// invertible cell, and the produced extensions preserve one another.
CocompletenessResult check_cocomplete(const Doctrine& d, PosetPtr x,
                                      const std::vector<PosetPtr>& corpus,
                                      long long budget, int preservation_samples);

// e : X -> Y preserves all extensions along units into X.
CocompletenessResult check_homomorphism(const Doctrine& d, const Mono& e,
                                        const std::vector<PosetPtr>& corpus,
                                        long long budget);

struct DoctrineMorphismData {
  std::vector<PosetPtr> corpus;
  std::vector<Mono> alpha;  // component P A -> P' A per corpus object
};

struct DoctrineMorphismReport {
  bool admissible_inclusion = false;
  bool unit_cell_invertible = false;
  bool preserves_unit_extensions = false;
  bool budget_hit = false;
  std::string detail;
  bool ok() const {
    return admissible_inclusion && unit_cell_invertible && preserves_unit_extensions;
  }
};

DoctrineMorphismReport check_doctrine_morphism(const Doctrine& d, const Doctrine& d2,
                                               const DoctrineMorphismData& m,
                                               long long budget);

// Two parallel morphisms of doctrines agree componentwise (the preorder
// collapse).
bool doctrine_morphisms_equal(const DoctrineMorphismData& m1,
                              const DoctrineMorphismData& m2);

// The canonical morphism identity-doctrine => join-completion (components
// are the units themselves).
DoctrineMorphismData identity_to_joins_morphism(const std::vector<PosetPtr>& corpus);

}  // namespace kzlab
