#pragma once

/// Arithmetic in the cyclic group Z_N.
///
/// Every element carries its modulus so certificates of different orders can
/// be handled side by side. Combining elements with different moduli is a
/// UsageError, never a silent coercion.

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>

namespace dmagic {

class GroupElement {
 public:
  /// `value` is reduced into [0, modulus). Throws UsageError if modulus < 1.
  GroupElement(std::int64_t value, std::int64_t modulus);

  static GroupElement zero(std::int64_t modulus) { return GroupElement(0, modulus); }

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  /// Multiplication by an integer scalar (k * a in the group).
  GroupElement scaled(std::int64_t k) const;

  bool operator==(const GroupElement&) const = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement sub(const GroupElement& a, const GroupElement& b);

/// Fold of add; an empty sequence yields 0 mod `modulus`.
GroupElement sum(std::span<const GroupElement> elements, std::int64_t modulus);

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return add(a, b); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return sub(a, b); }
inline GroupElement operator-(const GroupElement& a) { return neg(a); }

std::ostream& operator<<(std::ostream& os, const GroupElement& a);

/// Reduce an arbitrary integer into [0, modulus).
std::int64_t reduce(std::int64_t x, std::int64_t modulus);

// Symmetric representation: residue r maps to r when r <= N/2, else r - N.
std::int64_t symmetric_from_residue(std::int64_t residue, std::int64_t modulus);
std::int64_t residue_from_symmetric(std::int64_t symmetric, std::int64_t modulus);

}  // namespace dmagic
