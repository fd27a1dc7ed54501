#include "sforest/pair_set.hpp"

#include <bit>

namespace sforest {

PairSet::PairSet(std::size_t order)
    : order_(order), words_(order == 0 ? 1 : (order * order + 63) / 64, 0) {}

std::size_t PairSet::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool PairSet::none() const noexcept {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool PairSet::is_subset_of(const PairSet& other) const noexcept {
  if (order_ != other.order_) return false;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

PairSet& PairSet::operator|=(const PairSet& other) noexcept {
  for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) {
    words_[k] |= other.words_[k];
  }
  return *this;
}

std::size_t PairSet::hash() const noexcept {
  // splitmix-style mixing over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ order_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h = (h ^ (h >> 31)) * 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace sforest
