#include "dmagic/group.hpp"

#include <string>

#include "dmagic/errors.hpp"

namespace dmagic {

namespace {

void require_same_modulus(const GroupElement& a, const GroupElement& b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
  }
}

}  // namespace

std::int64_t reduce(std::int64_t x, std::int64_t modulus) {
  if (modulus < 1) throw UsageError("modulus must be positive");
  x %= modulus;
  return x < 0 ? x + modulus : x;
}

GroupElement::GroupElement(std::int64_t value, std::int64_t modulus)
    : value_(reduce(value, modulus)), modulus_(modulus) {}

GroupElement GroupElement::scaled(std::int64_t k) const {
  // Moduli here are tiny, so the product cannot overflow after reduction.
  return GroupElement(reduce(k, modulus_) * value_, modulus_);
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_modulus(a, b);
  return GroupElement(a.value() + b.value(), a.modulus());
}

GroupElement neg(const GroupElement& a) { return GroupElement(-a.value(), a.modulus()); }

GroupElement sub(const GroupElement& a, const GroupElement& b) { return add(a, neg(b)); }

GroupElement sum(std::span<const GroupElement> elements, std::int64_t modulus) {
  GroupElement acc = GroupElement::zero(modulus);
  for (const auto& e : elements) acc = add(acc, e);
  return acc;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& a) {
  return os << a.value() << " mod " << a.modulus();
}

std::int64_t symmetric_from_residue(std::int64_t residue, std::int64_t modulus) {
  const std::int64_t r = reduce(residue, modulus);
  return 2 * r <= modulus ? r : r - modulus;
}

std::int64_t residue_from_symmetric(std::int64_t symmetric, std::int64_t modulus) {
  return reduce(symmetric, modulus);
}

}  // namespace dmagic
