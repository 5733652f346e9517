#include "dmagic/gf2.hpp"

#include <bit>

#include "dmagic/errors.hpp"

namespace dmagic {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw UsageError("bit vector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVector::popcount() const {
  std::size_t count = 0;
  for (auto w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

std::optional<AffineSolution> solve_affine(const std::vector<BitVector>& rows, const BitVector& rhs,
                                           std::size_t variables) {
  if (rhs.size() != rows.size()) throw UsageError("right-hand side length differs from row count");
  // Augmented rows: column `variables` carries the right-hand side.
  std::vector<BitVector> aug;
  aug.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != variables) throw UsageError("row length differs from variable count");
    BitVector row(variables + 1);
    for (std::size_t c = 0; c < variables; ++c)
      if (rows[r].get(c)) row.set(c, true);
    row.set(variables, rhs.get(r));
    aug.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < variables && rank < aug.size(); ++c) {
    std::size_t p = rank;
    while (p < aug.size() && !aug[p].get(c)) ++p;
    if (p == aug.size()) continue;
    std::swap(aug[p], aug[rank]);
    for (std::size_t r = 0; r < aug.size(); ++r)
      if (r != rank && aug[r].get(c)) aug[r] ^= aug[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < aug.size(); ++r)
    if (aug[r].get(variables)) return std::nullopt;

  AffineSolution sol{BitVector(variables), {}};
  std::vector<bool> is_pivot(variables, false);
  for (std::size_t r = 0; r < rank; ++r) {
    is_pivot[pivot_col[r]] = true;
    sol.particular.set(pivot_col[r], aug[r].get(variables));
  }
  for (std::size_t f = 0; f < variables; ++f) {
    if (is_pivot[f]) continue;
    BitVector k(variables);
    k.set(f, true);
    for (std::size_t r = 0; r < rank; ++r)
      if (aug[r].get(f)) k.set(pivot_col[r], true);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace dmagic
