#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace kzlab {

// Dynamic bitset sized to a fixed universe. Used for subsets of poset
// elements (downsets, presheaves) and for selections during joins.
class Mask {
public:
  Mask() = default;
  explicit Mask(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const;
  bool empty() const;
  bool subset_of(const Mask& o) const;

  Mask operator|(const Mask& o) const;
  Mask operator&(const Mask& o) const;
  Mask& operator|=(const Mask& o);

  bool operator==(const Mask& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Mask& o) const { return !(*this == o); }
  bool operator<(const Mask& o) const;  // lexicographic on words, for canonical order

  std::vector<int> elements() const;

  std::size_t hash() const;

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct MaskHash {
  std::size_t operator()(const Mask& m) const { return m.hash(); }
};

}  // namespace kzlab
