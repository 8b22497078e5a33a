#include "kzlab/core/joins.hpp"

#include <memory>

namespace kzlab {

std::optional<JoinProvider> certify_joins(PosetPtr p) {
  const int n = p->size();
  if (n == 0) return std::nullopt;  // the empty join needs an element

  Mask empty(n);
  auto bottom = p->join_of(empty);
  if (!bottom) return std::nullopt;

  auto table = std::make_shared<std::vector<std::vector<int>>>(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mask m(n);
      m.set(i);
      m.set(j);
      auto v = p->join_of(m);
      if (!v) return std::nullopt;
      (*table)[i][j] = (*table)[j][i] = *v;
    }

  int bot = *bottom;
  JoinProvider jp;
  jp.p = p;
  jp.join_of = [table, bot](const Mask& s) {
    int acc = bot;
    for (int e : s.elements()) acc = (*table)[acc][e];
    return acc;
  };
  return jp;
}

}  // namespace kzlab
