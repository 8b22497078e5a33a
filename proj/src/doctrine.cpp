#include "kzlab/doctrine/doctrine.hpp"

#include <stdexcept>

namespace kzlab {

Mono Doctrine::pmap(const Mono& l, const PApplied& pa, const PApplied& pb) const {
  return extend(Mono::compose(pb.unit, l), pa, pb);
}

Mono Doctrine::mult(const PApplied& pa, const PApplied& ppa) const {
  return extend(Mono::identity(pa.obj), ppa, pa);
}

PApplied JoinsDoctrine::apply(PosetPtr a) const {
  auto lat = std::make_shared<DownLat>(DownLat::over(a, max_lattice_));
  PApplied r;
  r.obj = lat->as_poset();
  r.lat = lat;
  r.joins = lat->joins();
  Mono y{a, r.obj, {}};
  y.at.resize(a->size());
  for (int x = 0; x < a->size(); ++x) y.at[x] = lat->principal(x);
  r.unit = y;
  return r;
}

Mono JoinsDoctrine::extend(const Mono& f, const PApplied& pa, const PApplied& pb) const {
  return extend_into(f, pa, pb.joins);
}

Mono JoinsDoctrine::extend_into(const Mono& f, const PApplied& pa,
                                const std::optional<JoinProvider>& target) const {
  if (!target)
    throw std::invalid_argument("join completion extensions need a join certificate");
  // sup over the selected carrier elements of each closed vector
  const DownLat& lat = *pa.lat;
  Mono r{pa.obj, target->p, {}};
  r.at.resize(lat.size());
  for (int h = 0; h < lat.size(); ++h) {
    Mask picked(target->p->size());
    for (int x : lat.mask_of(h).elements()) picked.set(f.at[x]);
    r.at[h] = target->join_of(picked);
  }
  return r;
}

Mask JoinsDoctrine::res_pointwise(const Mono& l, const Mask& h) {
  Mask r(l.src->size());
  for (int a = 0; a < l.src->size(); ++a)
    if (h.test(l.at[a])) r.set(a);
  return r;
}

PApplied IdentityDoctrine::apply(PosetPtr a) const {
  PApplied r;
  r.obj = a;
  r.unit = Mono::identity(a);
  r.joins = std::nullopt;
  r.lat = nullptr;
  return r;
}

Mono IdentityDoctrine::extend(const Mono& f, const PApplied&, const PApplied&) const {
  return f;
}

Mono IdentityDoctrine::extend_into(const Mono& f, const PApplied&,
                                   const std::optional<JoinProvider>&) const {
  return f;
}

std::shared_ptr<const Doctrine> doctrine_by_name(const std::string& name) {
  if (name == "joins") return std::make_shared<JoinsDoctrine>();
  if (name == "identity") return std::make_shared<IdentityDoctrine>();
  return nullptr;
}

std::optional<AdmissibilityWitness> check_admissible(const Doctrine& d, const Mono& l,
                                                     const PApplied& pa,
                                                     const PApplied& pb) {
  Mono pl = d.pmap(l, pa, pb);
  const int na = pa.obj->size(), nb = pb.obj->size();
  Mono res{pb.obj, pa.obj, std::vector<int>(nb, -1)};
  for (int b = 0; b < nb; ++b) {
    // greatest a with pl(a) <= b
    int best = -1;
    for (int a = 0; a < na; ++a) {
      if (!pb.obj->leq(pl.at[a], b)) continue;
      if (best < 0 || pa.obj->leq(best, a)) best = a;
    }
    if (best < 0) return std::nullopt;
    for (int a = 0; a < na; ++a)
      if (pb.obj->leq(pl.at[a], b) && !pa.obj->leq(a, best)) return std::nullopt;
    res.at[b] = best;
  }
  if (!res.validate()) return std::nullopt;
  // triangle identities
  if (!cell_leq(Mono::identity(pa.obj), Mono::compose(res, pl))) return std::nullopt;
  if (!cell_leq(Mono::compose(pl, res), Mono::identity(pb.obj))) return std::nullopt;

  AdmissibilityWitness w{pl, res, Mono::compose(res, pb.unit)};
  if (!cell_leq(pa.unit, Mono::compose(w.r_l, l))) return std::nullopt;  // phi_L
  return w;
}

bool check_p_fully_faithful(const Doctrine& d, const Mono& l, const PApplied& pa,
                            const PApplied& pb) {
  Mono pl = d.pmap(l, pa, pb);
  for (int a = 0; a < pa.obj->size(); ++a)
    for (int b = 0; b < pa.obj->size(); ++b)
      if (pb.obj->leq(pl.at[a], pl.at[b]) != pa.obj->leq(a, b)) return false;
  return true;
}

bool joins_pff_biconditional(const Mono& l) {
  for (int x = 0; x < l.src->size(); ++x)
    for (int y = 0; y < l.src->size(); ++y)
      if (l.src->leq(x, y) != l.dst->leq(l.at[x], l.at[y])) return false;
  return true;
}

}  // namespace kzlab
