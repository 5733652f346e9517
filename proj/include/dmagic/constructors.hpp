#pragma once

/// Constructive labelings for K_n (n odd) and for K_m o complement(K_n), and
/// the decision procedure for the K_m o complement(K_n) family.
///
/// Every certificate returned here has passed verify().

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dmagic/verifier.hpp"

namespace dmagic {

/// Thrown when a construction is asked for on a graph that provably has no
/// labeling. what() names the obstruction.
class NotMagicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rotational tournament on Z_n (arc i->j iff (j - i) mod n in 1..(n-1)/2)
/// with l(i) = i. Even n throws NotMagicError.
MagicCertificate construct_complete(int n);

/// K_m o complement(K_n) with mn = 0 (mod 4), m, n >= 2. mu = mn/2.
MagicCertificate construct_case1(int m, int n);

/// K_m o complement(K_n) for odd m >= 3 and n = 2 (mod 4):
/// l(v^k_i) = (i-1) + (k-1)n, V^l -> V^k for l in k-(m-1)/2 .. k-1 (mod m).
MagicCertificate construct_case2(int m, int n);

/// Closed forms for the case 2 constant, reduced mod mn. The verified
/// constant is the negative one.
struct Case2ClosedForms {
  std::int64_t negative = 0;  // -n^2 (m^2 - 1) / 4
  std::int64_t positive = 0;  // +n^2 (m^2 - 1) / 4
};
Case2ClosedForms case2_closed_forms(int m, int n);

struct FamilyDecision {
  enum class Status { kMagic, kNotMagic, kSearchRequired };

  int m = 0;
  int n = 0;
  Status status = Status::kSearchRequired;
  /// Construction ("complete", "case1", "case2", "edgeless") or obstruction
  /// ("theorem1", "theorem2"); "search" when undecided.
  std::string method;
  std::optional<MagicCertificate> certificate;
};

/// Decision for K_m o complement(K_n), m, n >= 1.
FamilyDecision decide_kmokn(int m, int n);

std::string to_string(FamilyDecision::Status status);

}  // namespace dmagic
