#include "kzlab/doctrine/kzchecks.hpp"

namespace kzlab {

AxiomAResult check_axiom_a(const Doctrine& d, const PApplied& pa) {
  AxiomAResult r;
  Mono ybar = d.extend(pa.unit, pa, pa);
  r.extension_is_identity = same_map(ybar, Mono::identity(pa.obj));
  r.cell_is_identity = same_map(Mono::compose(ybar, pa.unit), pa.unit);
  return r;
}

AxiomBResult check_axiom_b(const Doctrine& d, const Mono& f, const Mono& g,
                           const PApplied& pa, const PApplied& pb, const PApplied& pc,
                           long long certify_budget) {
  AxiomBResult r;
  Mono fbar = d.extend(f, pa, pb);
  Mono gbar = d.extend(g, pb, pc);
  Mono pasted = Mono::compose(gbar, fbar);
  Mono direct = d.extend(Mono::compose(gbar, f), pa, pc);
  r.pasted_equals_extension = same_map(pasted, direct);
  r.certified = certify_budget > 0
                    ? certify_left_extension(pa.unit, Mono::compose(gbar, f), pasted,
                                             certify_budget)
                    : CertifyStatus::kYes;
  return r;
}

ThetaResult check_theta(const Doctrine& d, const PApplied& pa) {
  ThetaResult r;
  PApplied ppa = d.apply(pa.obj);
  Mono py = d.pmap(pa.unit, pa, ppa);  // P y_A : P A -> P P A
  const Mono& yp = ppa.unit;           // y_{P A}
  r.theta_exists = cell_leq(py, yp);
  r.axiom_unit = same_map(Mono::compose(py, pa.unit), Mono::compose(yp, pa.unit));
  Mono mu = d.mult(pa, ppa);
  r.axiom_mult = same_map(Mono::compose(mu, py), Mono::identity(pa.obj)) &&
                 same_map(Mono::compose(mu, yp), Mono::identity(pa.obj));
  return r;
}

CocompletenessResult check_cocomplete(const Doctrine& d, PosetPtr x,
                                      const std::vector<PosetPtr>& corpus,
                                      long long budget, int preservation_samples) {
  CocompletenessResult res;
  std::vector<std::pair<PApplied, std::vector<Mono>>> exts;  // per corpus object
  for (const auto& b : corpus) {
    PApplied pb = d.apply(b);
    std::vector<Mono> found;
    bool complete = for_each_monotone(b, x, budget, [&](const Mono& f) {
      auto oracle = left_extension_oracle(pb.unit, f, budget);
      if (oracle.status == OracleStatus::kBudget) {
        res.budget_hit = true;
        return false;
      }
      if (oracle.status == OracleStatus::kAbsent) {
        res.cocomplete = false;
        res.counterexample = "no extension of a map out of a " +
                             std::to_string(b->size()) + "-element corpus object";
        return false;
      }
      if (!same_map(Mono::compose(*oracle.ext, pb.unit), f)) {
        res.cocomplete = false;
        res.counterexample = "extension cell is not invertible";
        return false;
      }
      found.push_back(*oracle.ext);
      return true;
    });
    if (!complete) res.budget_hit = true;
    if (!res.cocomplete || res.budget_hit) return res;
    exts.push_back({pb, found});
  }

  // produced extensions preserve extensions between completions: for
  // F : A -> P B and G : B -> X, the composite Gbar ∘ Fbar must be the
  // extension of Gbar ∘ F along y_A
  int samples = 0;
  for (size_t ai = 0; ai < corpus.size() && samples < preservation_samples; ++ai) {
    PApplied paa = d.apply(corpus[ai]);
    for (size_t bi = 0; bi < corpus.size() && samples < preservation_samples; ++bi) {
      const auto& [pb, gbars] = exts[bi];
      bool complete = for_each_monotone(corpus[ai], pb.obj, budget, [&](const Mono& f) {
        Mono fbar = d.extend(f, paa, pb);
        for (const Mono& gbar : gbars) {
          if (samples >= preservation_samples) return false;
          ++samples;
          Mono pasted = Mono::compose(gbar, fbar);
          auto st = certify_left_extension(paa.unit, Mono::compose(gbar, f), pasted,
                                           budget);
          if (st == CertifyStatus::kBudget) {
            res.budget_hit = true;
            return false;
          }
          if (st == CertifyStatus::kNo) {
            res.cocomplete = false;
            res.counterexample = "a produced extension fails to preserve another";
            return false;
          }
        }
        return true;
      });
      if (!complete && samples < preservation_samples) res.budget_hit = true;
      if (!res.cocomplete || res.budget_hit) return res;
    }
  }
  return res;
}

CocompletenessResult check_homomorphism(const Doctrine& d, const Mono& e,
                                        const std::vector<PosetPtr>& corpus,
                                        long long budget) {
  CocompletenessResult res;
  for (const auto& b : corpus) {
    PApplied pb = d.apply(b);
    bool complete = for_each_monotone(b, e.src, budget, [&](const Mono& f) {
      auto oracle = left_extension_oracle(pb.unit, f, budget);
      if (oracle.status != OracleStatus::kFound) {
        if (oracle.status == OracleStatus::kBudget) res.budget_hit = true;
        return true;  // nothing to preserve
      }
      auto st = certify_left_extension(pb.unit, Mono::compose(e, f),
                                       Mono::compose(e, *oracle.ext), budget);
      if (st == CertifyStatus::kBudget) {
        res.budget_hit = true;
        return false;
      }
      if (st == CertifyStatus::kNo) {
        res.cocomplete = false;
        res.counterexample = "an extension along a unit is not preserved";
        return false;
      }
      return true;
    });
    if (!complete) res.budget_hit = true;
    if (!res.cocomplete || res.budget_hit) return res;
  }
  return res;
}

DoctrineMorphismReport check_doctrine_morphism(const Doctrine& d, const Doctrine& d2,
                                               const DoctrineMorphismData& m,
                                               long long budget) {
  DoctrineMorphismReport rep;
  rep.admissible_inclusion = true;
  rep.unit_cell_invertible = true;
  rep.preserves_unit_extensions = true;

  std::vector<PApplied> pas, pas2;
  for (const auto& a : m.corpus) {
    pas.push_back(d.apply(a));
    pas2.push_back(d2.apply(a));
  }

  for (size_t i = 0; i < m.corpus.size(); ++i) {
    // (2) the unit-comparison cell is invertible: alpha ∘ y = y'
    if (!same_map(Mono::compose(m.alpha[i], pas[i].unit), pas2[i].unit)) {
      rep.unit_cell_invertible = false;
      rep.detail = "unit comparison fails on corpus object " + std::to_string(i);
    }
  }

  // (1) admissibility inclusion over all corpus maps
  for (size_t i = 0; i < m.corpus.size() && rep.admissible_inclusion; ++i)
    for (size_t j = 0; j < m.corpus.size() && rep.admissible_inclusion; ++j) {
      for_each_monotone(m.corpus[i], m.corpus[j], budget, [&](const Mono& l) {
        if (check_admissible(d, l, pas[i], pas[j]) &&
            !check_admissible(d2, l, pas2[i], pas2[j])) {
          rep.admissible_inclusion = false;
          rep.detail = "an admissible map loses admissibility";
          return false;
        }
        return true;
      });
    }

  // (3) alpha_B preserves extensions along units into P B
  for (size_t i = 0; i < m.corpus.size() && rep.preserves_unit_extensions; ++i)
    for (size_t j = 0; j < m.corpus.size() && rep.preserves_unit_extensions; ++j) {
      for_each_monotone(m.corpus[i], pas[j].obj, budget, [&](const Mono& f) {
        Mono fbar = d.extend(f, pas[i], pas[j]);
        auto st = certify_left_extension(pas[i].unit, Mono::compose(m.alpha[j], f),
                                         Mono::compose(m.alpha[j], fbar), budget);
        if (st == CertifyStatus::kBudget) rep.budget_hit = true;
        if (st == CertifyStatus::kNo) {
          rep.preserves_unit_extensions = false;
          rep.detail = "a unit extension is not preserved by a component";
          return false;
        }
        return true;
      });
    }
  return rep;
}

bool doctrine_morphisms_equal(const DoctrineMorphismData& m1,
                              const DoctrineMorphismData& m2) {
  if (m1.alpha.size() != m2.alpha.size()) return false;
  for (size_t i = 0; i < m1.alpha.size(); ++i)
    if (!same_map(m1.alpha[i], m2.alpha[i])) return false;
  return true;
}

DoctrineMorphismData identity_to_joins_morphism(const std::vector<PosetPtr>& corpus) {
  JoinsDoctrine joins;
  DoctrineMorphismData m;
  m.corpus = corpus;
  for (const auto& a : corpus) m.alpha.push_back(joins.apply(a).unit);
  return m;
}

}  // namespace kzlab
