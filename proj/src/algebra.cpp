#include "kzlab/monad/algebra.hpp"

#include <algorithm>

namespace kzlab {

bool PosetAlgebra::total() const {
  return std::find(x.begin(), x.end(), -1) == x.end();
}

bool MonoidStructure::validate() const {
  const int n = p->size();
  if (unit < 0 || unit >= n) return false;
  if (static_cast<int>(op.size()) != n) return false;
  for (const auto& row : op) {
    if (static_cast<int>(row.size()) != n) return false;
    for (int v : row)
      if (v < 0 || v >= n) return false;
  }
  for (int a = 0; a < n; ++a)
    if (op[unit][a] != a || op[a][unit] != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op[op[a][b]][c] != op[a][op[b][c]]) return false;
  // monotone in each slot
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int b2 = 0; b2 < n; ++b2)
        if (p->leq(b, b2)) {
          if (!p->leq(op[a][b], op[a][b2])) return false;
          if (!p->leq(op[b][a], op[b2][a])) return false;
        }
  return true;
}

PosetAlgebra monoid_algebra(const PosetMonad& t, const MonoidStructure& m) {
  PosetAlgebra alg;
  alg.carrier = m.p;
  alg.tcarrier = t.obj(m.p);
  alg.x.resize(alg.tcarrier->size());
  for (int w = 0; w < alg.tcarrier->size(); ++w) {
    int acc = m.unit;
    for (int letter : t.letters(m.p, w)) acc = m.op[acc][letter];
    alg.x[w] = acc;
  }
  return alg;
}

PosetAlgebra free_algebra(const PosetMonad& t, PosetPtr a) {
  PosetAlgebra alg;
  auto ta = t.obj(a);
  alg.carrier = ta;
  alg.tcarrier = t.obj(ta);
  alg.x.resize(alg.tcarrier->size());
  for (int w = 0; w < alg.tcarrier->size(); ++w) {
    std::vector<int> flat;
    for (int inner : t.letters(ta, w)) {
      auto ls = t.letters(a, inner);
      flat.insert(flat.end(), ls.begin(), ls.end());
    }
    auto idx = t.word_index(a, flat);
    alg.x[w] = idx ? *idx : -1;
  }
  return alg;
}

std::vector<MonoidStructure> enumerate_monoids(PosetPtr p) {
  std::vector<MonoidStructure> out;
  const int n = p->size();
  if (n == 0 || n > 4) return out;  // enumeration is only meant for tiny carriers
  std::vector<std::vector<int>> op(n, std::vector<int>(n, 0));
  std::vector<int> flat(n * n, 0);
  for (int e = 0; e < n; ++e) {
    // op table in lexicographic order
    std::fill(flat.begin(), flat.end(), 0);
    while (true) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op[i][j] = flat[i * n + j];
      MonoidStructure m{p, e, op};
      if (m.validate()) out.push_back(m);
      int k = n * n - 1;
      while (k >= 0 && flat[k] == n - 1) flat[k--] = 0;
      if (k < 0) break;
      ++flat[k];
    }
  }
  return out;
}

AlgebraReport check_algebra(const PosetMonad& t, const PosetAlgebra& alg) {
  AlgebraReport r;
  const Poset& ta = *alg.tcarrier;
  const Poset& a = *alg.carrier;

  r.structure_monotone = true;
  for (int j = 0; j < ta.size(); ++j) {
    if (alg.x[j] < 0) continue;
    for (int i : ta.below[j].elements()) {
      if (alg.x[i] < 0) continue;
      if (!a.leq(alg.x[i], alg.x[j])) r.structure_monotone = false;
    }
  }

  Mono u = t.unit(alg.carrier);
  r.unit_law = true;
  for (int v = 0; v < a.size(); ++v)
    if (alg.x[u.at[v]] != v) r.unit_law = false;

  auto sq = t.sq(alg.carrier);
  Mono m = t.mult(alg.carrier);
  r.assoc_law = true;
  for (int w = 0; w < sq->size(); ++w) {
    // left side: apply x inside each entry, reassemble, apply x
    std::vector<int> outer = t.sq_letters(alg.carrier, w);
    std::vector<int> inner_vals;
    bool defined = true;
    for (int wi : outer) {
      if (alg.x[wi] < 0) { defined = false; break; }
      inner_vals.push_back(alg.x[wi]);
    }
    int lhs = -1;
    if (defined) {
      auto idx = t.word_index(alg.carrier, inner_vals);
      if (idx && alg.x[*idx] >= 0) lhs = alg.x[*idx];
      else defined = false;
    }
    int rhs = alg.x[m.at[w]];
    if (!defined || rhs < 0) {
      ++r.skipped;
      continue;
    }
    if (lhs != rhs) r.assoc_law = false;
  }
  return r;
}

MorphismReport check_morphism(const PosetMonad& t, const PosetAlgebra& a,
                              const PosetAlgebra& b, const AlgebraMorphism& f) {
  MorphismReport r;
  r.map_monotone = f.map.validate();
  Mono tf = t.map(f.map);
  r.cell_exists = true;
  for (int w = 0; w < a.tcarrier->size(); ++w) {
    int xa = a.x[w];
    int xb = b.x[tf.at[w]];
    if (xa < 0 || xb < 0) {
      ++r.skipped;
      continue;
    }
    int lhs = f.map.at[xa];  // f(x_A(w))
    switch (f.kind) {
      case MorphismKind::kOplax:
        if (!b.carrier->leq(lhs, xb)) r.cell_exists = false;
        break;
      case MorphismKind::kLax:
        if (!b.carrier->leq(xb, lhs)) r.cell_exists = false;
        break;
      case MorphismKind::kPseudo:
        if (lhs != xb) r.cell_exists = false;
        break;
    }
  }
  return r;
}

TransformationReport check_transformation(const PosetMonad& t,
                                          const TransformationSquare& sq) {
  TransformationReport rep;
  rep.boundary_ok = check_morphism(t, sq.b, sq.c, sq.r).ok() &&
                    check_morphism(t, sq.d, sq.a, sq.m).ok() &&
                    check_morphism(t, sq.d, sq.b, sq.n).ok() &&
                    check_morphism(t, sq.a, sq.c, sq.i).ok();
  rep.zeta_exists = cell_leq(Mono::compose(sq.i.map, sq.m.map),
                             Mono::compose(sq.r.map, sq.n.map));
  return rep;
}

CertifyStatus t_preserves_extension(const PosetMonad& t, const Mono& z,
                                    const Mono& along, const Mono& of, const Mono& ext,
                                    const std::optional<JoinProvider>& target_joins,
                                    long long budget) {
  Mono t_along = t.map(along);
  Mono z_tof = Mono::compose(z, t.map(of));
  Mono z_text = Mono::compose(z, t.map(ext));
  if (target_joins) {
    Mono least = least_extension_into(t_along, z_tof, *target_joins);
    return same_map(least, z_text) ? CertifyStatus::kYes : CertifyStatus::kNo;
  }
  return certify_left_extension(t_along, z_tof, z_text, budget);
}

InducedResult induced_lax_on_extension(const PosetMonad& t, const PosetAlgebra& xa,
                                       const PosetAlgebra& xb, const PosetAlgebra& xc,
                                       const Mono& l, const Mono& i, const Mono& r) {
  // sigma lax on i, alpha oplax on l, eta : i <= r∘l
  if (!check_morphism(t, xa, xc, {i, MorphismKind::kLax}).ok())
    return {InducedStatus::kPreconditionFailed, std::nullopt,
            "no lax structure on the diagonal"};
  if (!check_morphism(t, xa, xb, {l, MorphismKind::kOplax}).ok())
    return {InducedStatus::kPreconditionFailed, std::nullopt,
            "no oplax structure on the extension leg"};
  if (!cell_leq(i, Mono::compose(r, l)))
    return {InducedStatus::kPreconditionFailed, std::nullopt,
            "the exhibiting cell is missing"};
  AlgebraMorphism out{r, MorphismKind::kLax};
  if (!check_morphism(t, xb, xc, out).ok())
    return {InducedStatus::kInconsistent, std::nullopt,
            "the defining pasting has no solution; a preservation hypothesis fails"};
  return {InducedStatus::kOk, out, ""};
}

InducedResult induced_oplax_on_lifting(const PosetMonad& t, const PosetAlgebra& xa,
                                       const PosetAlgebra& xb, const PosetAlgebra& xc,
                                       const Mono& l, const Mono& i, const Mono& r) {
  if (!check_morphism(t, xa, xc, {i, MorphismKind::kOplax}).ok())
    return {InducedStatus::kPreconditionFailed, std::nullopt,
            "no oplax structure on the diagonal"};
  if (!check_morphism(t, xb, xc, {r, MorphismKind::kLax}).ok())
    return {InducedStatus::kPreconditionFailed, std::nullopt,
            "no lax structure on the right leg"};
  if (!cell_leq(i, Mono::compose(r, l)))
    return {InducedStatus::kPreconditionFailed, std::nullopt,
            "the exhibiting cell is missing"};
  AlgebraMorphism out{l, MorphismKind::kOplax};
  if (!check_morphism(t, xa, xb, out).ok())
    return {InducedStatus::kInconsistent, std::nullopt,
            "the defining pasting has no solution; the lifting hypothesis fails"};
  return {InducedStatus::kOk, out, ""};
}

}  // namespace kzlab
