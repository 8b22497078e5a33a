#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kzlab/core/cat.hpp"

namespace kzlab {

// A finite carrier with a canonical element order.
struct FinSetObj {
  std::vector<std::string> elems;
  int size() const { return static_cast<int>(elems.size()); }
};

// Weight for a coend over a x a: a set w(x,y) for each object pair,
// contravariant in the first slot and covariant in the second. Actions are
// reindexing tables per morphism.
struct CoendWeight {
  CatPtr a;
  // sizes[x][y] = |w(x,y)|
  std::vector<std::vector<int>> sizes;
  // lact[f][y]: w(x',y) -> w(x,y) for f : x -> x' (contravariant slot)
  // ract[f][x]: w(x,y) -> w(x,y') for f : y -> y' (covariant slot)
  std::function<int(int f, int y, int e)> lact;
  std::function<int(int f, int x, int e)> ract;

  bool validate(std::string* why = nullptr) const;
};

struct CoendResult {
  FinSetObj carrier;
  // class of (diagonal object x, element e of w(x,x))
  std::function<int(int x, int e)> project;
  std::vector<std::pair<int, int>> reps;  // canonical representative per class
};

// Coequalizer of the two reindexings of sum_{f:x->x'} w(x',x) into
// sum_x w(x,x), computed as a union-find partition of the disjoint union.
std::optional<CoendResult> coend(const CoendWeight& w, std::string* err = nullptr);

struct PullbackCone {
  int apex;
  int left;   // apex -> src(f)
  int right;  // apex -> src(g)
  int competitors_checked;
};

// Terminal cone over the cospan (f, g); both must share a target. Every
// competing cone is checked for a unique mediating morphism.
std::optional<PullbackCone> pullback(const Cat& c, int f, int g, std::string* err = nullptr);

// Plain union-find used by the coend computation and tests.
struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace kzlab
