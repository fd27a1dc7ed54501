#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sforest {

/// A set of ordered pairs over the indices [0, n), stored as a row-major
/// n x n bit matrix. Pair (i, j) lives at bit i * n + j.
class PairSet {
 public:
  PairSet() : PairSet(0) {}
  explicit PairSet(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    const std::size_t bit = i * order_ + j;
    return (words_[bit >> 6] >> (bit & 63)) & 1u;
  }

  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    const std::size_t bit = i * order_ + j;
    const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
    if (value) {
      words_[bit >> 6] |= mask;
    } else {
      words_[bit >> 6] &= ~mask;
    }
  }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_subset_of(const PairSet& other) const noexcept;

  PairSet& operator|=(const PairSet& other) noexcept;

  std::size_t hash() const noexcept;

  /// Low word of the matrix; the whole matrix when order() <= 8.
  std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_.front(); }

  friend auto operator<=>(const PairSet&, const PairSet&) = default;
  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sforest

template <>
struct std::hash<sforest::PairSet> {
  std::size_t operator()(const sforest::PairSet& p) const noexcept { return p.hash(); }
};
