#include "kzlab/core/oracle.hpp"

#include <algorithm>
#include <set>

namespace kzlab {

namespace {

bool in_comparison_class(const Mono& along, const Mono& of, const Mono& m) {
  // of <= m ∘ along, pointwise
  for (int x = 0; x < along.src->size(); ++x)
    if (!of.dst->leq(of.at[x], m.at[along.at[x]])) return false;
  return true;
}

bool map_leq(const Mono& f, const Mono& g) { return cell_leq(f, g); }

}  // namespace

PosetOracleResult left_extension_oracle(const Mono& along, const Mono& of,
                                        long long budget) {
  std::vector<Mono> minimal;  // antichain of minimal members seen so far
  bool complete = for_each_monotone(along.dst, of.dst, budget, [&](const Mono& m) {
    if (!in_comparison_class(along, of, m)) return true;
    for (const Mono& k : minimal)
      if (map_leq(k, m)) return true;  // dominated
    std::erase_if(minimal, [&](const Mono& k) { return map_leq(m, k); });
    minimal.push_back(m);
    return true;
  });
  if (!complete) return {OracleStatus::kBudget, std::nullopt};
  if (minimal.size() == 1) return {OracleStatus::kFound, minimal.front()};
  return {OracleStatus::kAbsent, std::nullopt};
}

CertifyStatus certify_left_extension(const Mono& along, const Mono& of,
                                     const Mono& candidate, long long budget) {
  if (!in_comparison_class(along, of, candidate)) return CertifyStatus::kNo;
  bool ok = true;
  bool complete = for_each_monotone(along.dst, of.dst, budget, [&](const Mono& m) {
    if (in_comparison_class(along, of, m) && !map_leq(candidate, m)) {
      ok = false;
      return false;
    }
    return true;
  });
  if (!ok) return CertifyStatus::kNo;
  if (!complete) return CertifyStatus::kBudget;
  return CertifyStatus::kYes;
}

Mono least_extension_into(const Mono& along, const Mono& of, const JoinProvider& joins) {
  Mono r{along.dst, joins.p, {}};
  const int nb = along.dst->size();
  r.at.resize(nb);
  for (int b = 0; b < nb; ++b) {
    Mask picked(joins.p->size());
    for (int x = 0; x < along.src->size(); ++x)
      if (along.dst->leq(along.at[x], b)) picked.set(of.at[x]);
    r.at[b] = joins.join_of(picked);
  }
  return r;
}

CertifyStatus check_extension_biconditional(const Mono& along, const Mono& of,
                                            const Mono& r, long long budget) {
  bool ok = true;
  bool complete = for_each_monotone(along.dst, of.dst, budget, [&](const Mono& m) {
    const bool lhs = in_comparison_class(along, of, m);
    const bool rhs = map_leq(r, m);
    if (lhs != rhs) {
      ok = false;
      return false;
    }
    return true;
  });
  if (!ok) return CertifyStatus::kNo;
  if (!complete) return CertifyStatus::kBudget;
  return CertifyStatus::kYes;
}

CertifyStatus certify_absolute_left_lifting(const Mono& through, const Mono& of,
                                            const Mono& lift,
                                            const std::vector<PosetPtr>& corpus,
                                            long long budget) {
  if (!cell_leq(of, Mono::compose(through, lift))) return CertifyStatus::kNo;
  bool ok = true;
  bool budget_hit = false;
  for (const auto& d : corpus) {
    bool c1 = for_each_monotone(d, lift.src, budget, [&](const Mono& m) {
      bool c2 = for_each_monotone(d, lift.dst, budget, [&](const Mono& n) {
        const bool lhs = cell_leq(Mono::compose(of, m), Mono::compose(through, n));
        const bool rhs = cell_leq(Mono::compose(lift, m), n);
        if (lhs != rhs) {
          ok = false;
          return false;
        }
        return true;
      });
      if (!c2) budget_hit = true;
      return ok && !budget_hit;
    });
    if (!c1) budget_hit = true;
    if (!ok) return CertifyStatus::kNo;
    if (budget_hit) return CertifyStatus::kBudget;
  }
  return CertifyStatus::kYes;
}

namespace {

std::vector<std::vector<int>> nat_keys(const std::vector<Nat>& ns) {
  std::vector<std::vector<int>> keys;
  keys.reserve(ns.size());
  for (const auto& n : ns) keys.push_back(n.at);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

CatOracleResult left_extension_oracle_cat(const Fun& along, const Fun& of,
                                          long long budget) {
  auto candidates = enumerate_functors(along.dst, of.dst, budget);
  if (!candidates) return {OracleStatus::kBudget, std::nullopt, std::nullopt};

  for (const Fun& r : *candidates) {
    Fun r_along = Fun::compose(r, along);
    for (const Nat& eta : enumerate_nats(of, r_along, budget)) {
      bool universal = true;
      for (const Fun& m : *candidates) {
        auto sigmas = enumerate_nats(r, m, budget);
        auto targets = enumerate_nats(of, Fun::compose(m, along), budget);
        std::vector<std::vector<int>> images;
        for (const Nat& s : sigmas)
          images.push_back(Nat::vcomp(Nat::whisker_right(s, along), eta).at);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end() ||
            images != nat_keys(targets)) {
          universal = false;
          break;
        }
      }
      if (universal) return {OracleStatus::kFound, r, eta};
    }
  }
  return {OracleStatus::kAbsent, std::nullopt, std::nullopt};
}

}  // namespace kzlab
