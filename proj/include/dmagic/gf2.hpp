#pragma once

/// Dense GF(2) vectors and affine system solving by Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dmagic {

class BitVector {
 public:
  explicit BitVector(std::size_t size = 0) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    words_[i / 64] = value ? (words_[i / 64] | bit) : (words_[i / 64] & ~bit);
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& other);
  std::size_t popcount() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

/// Solutions of rows * x = rhs: particular + span(kernel).
struct AffineSolution {
  BitVector particular;
  std::vector<BitVector> kernel;
};

/// Each row has `variables` bits. nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const std::vector<BitVector>& rows, const BitVector& rhs,
                                           std::size_t variables);

}  // namespace dmagic
