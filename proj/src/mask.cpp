#include "kzlab/core/mask.hpp"

#include <bit>

namespace kzlab {

int Mask::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool Mask::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool Mask::subset_of(const Mask& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

Mask Mask::operator|(const Mask& o) const {
  Mask r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

Mask Mask::operator&(const Mask& o) const {
  Mask r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

Mask& Mask::operator|=(const Mask& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

bool Mask::operator<(const Mask& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

std::vector<int> Mask::elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::size_t Mask::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (auto w : w_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace kzlab
