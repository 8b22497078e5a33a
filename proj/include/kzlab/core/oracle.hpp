#pragma once

#include <optional>

#include "kzlab/core/cat.hpp"
#include "kzlab/core/joins.hpp"
#include "kzlab/core/poset.hpp"

namespace kzlab {

// Brute-force certification of left extensions. This is the ground truth
// every other module checks against: in the posetal regime a left extension
// of `of` along `along` is exactly the least monotone M with
// of <= M∘along (both membership and minimality checked by exhausting the
// candidate function space); in the Cat regime the defining bijection of
// 2-cells is verified against every enumerated competitor.

enum class OracleStatus { kFound, kAbsent, kBudget };

struct PosetOracleResult {
  OracleStatus status;
  std::optional<Mono> ext;  // the certified extension when found
};

PosetOracleResult left_extension_oracle(const Mono& along, const Mono& of,
                                        long long budget);

// Verifies one candidate without searching for the minimum: candidate must
// be a member of the comparison class and below every member.
enum class CertifyStatus { kYes, kNo, kBudget };
CertifyStatus certify_left_extension(const Mono& along, const Mono& of,
                                     const Mono& candidate, long long budget);

// Fast path into a join-complete target: the pointwise join formula, which
// is always the left extension when every join exists.
Mono least_extension_into(const Mono& along, const Mono& of, const JoinProvider& joins);

// Posetal universal property as a biconditional, checked against every
// candidate M (budget capped): of <= M∘along  <=>  r <= M.
CertifyStatus check_extension_biconditional(const Mono& along, const Mono& of,
                                            const Mono& r, long long budget);

// Absolute left lifting (partial adjunction): eta exhibits `lift` as the
// left lifting of `of` through `through` when for all (M, N):
// of∘M <= through∘N  <=>  lift∘M <= N. Verified over every pair of maps
// from every corpus object; at desk scale the corpus is the instance list
// supplied by the caller.
CertifyStatus certify_absolute_left_lifting(const Mono& through, const Mono& of,
                                            const Mono& lift,
                                            const std::vector<PosetPtr>& corpus,
                                            long long budget);

struct CatOracleResult {
  OracleStatus status;
  std::optional<Fun> ext;
  std::optional<Nat> cell;
};

CatOracleResult left_extension_oracle_cat(const Fun& along, const Fun& of,
                                          long long budget);

}  // namespace kzlab
