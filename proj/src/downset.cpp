#include "kzlab/doctrine/downset.hpp"

#include <algorithm>
#include <stdexcept>

namespace kzlab {

namespace {

// Generates every closed vector by deciding membership along a linear
// extension: an element may be included only if everything strictly below
// it already is. Enumeration order is deterministic and becomes the
// canonical element order of the lattice.
void gen(const Poset& p, const std::vector<int>& order, int k, Mask& cur,
         std::vector<Mask>& out, long long cap) {
  if (static_cast<long long>(out.size()) > cap)
    throw std::length_error("downset lattice exceeds the configured element budget");
  if (k == static_cast<int>(order.size())) {
    out.push_back(cur);
    return;
  }
  const int e = order[k];
  gen(p, order, k + 1, cur, out, cap);
  bool ok = true;
  for (int j : p.below[e].elements())
    if (j != e && !cur.test(j)) { ok = false; break; }
  if (ok) {
    cur.set(e);
    gen(p, order, k + 1, cur, out, cap);
    cur.reset(e);
  }
}

std::vector<int> linear_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> order;
  std::vector<bool> used(n, false);
  for (int step = 0; step < n; ++step)
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool ready = true;
      for (int j : p.below[i].elements())
        if (j != i && !used[j]) { ready = false; break; }
      if (ready) {
        order.push_back(i);
        used[i] = true;
        break;
      }
    }
  return order;
}

std::string mask_name(const Poset& carrier, const Mask& m) {
  std::string s = "{";
  bool first = true;
  for (int e : m.elements()) {
    if (!first) s += ",";
    s += carrier.names[e];
    first = false;
  }
  return s + "}";
}

}  // namespace

DownLat DownLat::over(PosetPtr carrier, long long max_elements) {
  DownLat d;
  d.carrier_ = carrier;
  if (!carrier->is_antisymmetric()) {
    // preorder: closed sets are unions of isomorphism classes, so enumerate
    // over the poset quotient and expand class masks back to the carrier
    auto [q, cls] = Poset::quotient_preorder(*carrier);
    std::vector<Mask> class_mask(q->size(), Mask(carrier->size()));
    for (int i = 0; i < carrier->size(); ++i) class_mask[cls[i]].set(i);
    auto qorder = linear_extension(*q);
    Mask qcur(q->size());
    std::vector<Mask> qelems;
    gen(*q, qorder, 0, qcur, qelems, max_elements);
    for (const Mask& qm : qelems) {
      Mask m(carrier->size());
      for (int c : qm.elements()) m |= class_mask[c];
      d.elems_.push_back(m);
    }
    std::sort(d.elems_.begin(), d.elems_.end(), [](const Mask& a, const Mask& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return a < b;
    });
    for (int i = 0; i < d.size(); ++i) d.index_[d.elems_[i]] = i;
    d.bottom_ = d.index_.at(Mask(carrier->size()));
    return d;
  }
  auto order = linear_extension(*carrier);
  Mask cur(carrier->size());
  gen(*carrier, order, 0, cur, d.elems_, max_elements);
  std::sort(d.elems_.begin(), d.elems_.end(), [](const Mask& a, const Mask& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  for (int i = 0; i < d.size(); ++i) d.index_[d.elems_[i]] = i;
  d.bottom_ = d.index_.at(Mask(carrier->size()));
  return d;
}

DownLat DownLat::over_cat(CatPtr c, long long max_elements) {
  // reachability preorder of the category's objects
  auto p = std::make_shared<Poset>();
  p->names = c->objs;
  p->below.assign(c->nobj(), Mask(c->nobj()));
  for (int i = 0; i < c->nobj(); ++i) p->below[i].set(i);
  for (const auto& m : c->mors) p->below[m.tgt].set(m.src);
  // close transitively (composition already forces closure for a genuine
  // category, but tolerate inputs where comp was validated separately)
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < c->nobj(); ++j)
      for (int i : p->below[j].elements())
        if (!p->below[i].subset_of(p->below[j])) {
          p->below[j] |= p->below[i];
          changed = true;
        }
  }
  return over(p, max_elements);
}

bool DownLat::is_closed(const Mask& m) const {
  for (int e : m.elements())
    if (!carrier_->below[e].subset_of(m)) return false;
  return true;
}

int DownLat::index_of(const Mask& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw std::invalid_argument("vector is not closed under the carrier's morphisms");
  return it->second;
}

int DownLat::principal(int carrier_elt) const {
  return index_.at(carrier_->below[carrier_elt]);
}

int DownLat::join(const Mask& element_subset) const {
  Mask acc(carrier_->size());
  for (int e : element_subset.elements()) acc |= elems_[e];
  return index_.at(acc);
}

int DownLat::join2(int a, int b) const { return index_.at(elems_[a] | elems_[b]); }

PosetPtr DownLat::as_poset() const {
  if (poset_) return poset_;
  auto p = std::make_shared<Poset>();
  const int n = size();
  p->names.reserve(n);
  for (int i = 0; i < n; ++i) p->names.push_back(mask_name(*carrier_, elems_[i]));
  p->below.assign(n, Mask(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (elems_[i].subset_of(elems_[j])) p->below[j].set(i);
  poset_ = p;
  return poset_;
}

JoinProvider DownLat::joins() const {
  JoinProvider jp;
  jp.p = as_poset();
  // capture by value: the lattice data outlives the provider via shared state
  auto elems = std::make_shared<std::vector<Mask>>(elems_);
  auto index = std::make_shared<std::unordered_map<Mask, int, MaskHash>>(index_);
  int universe = carrier_->size();
  jp.join_of = [elems, index, universe](const Mask& s) {
    Mask acc(universe);
    for (int e : s.elements()) acc |= (*elems)[e];
    return index->at(acc);
  };
  return jp;
}

}  // namespace kzlab
