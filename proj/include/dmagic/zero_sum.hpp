#pragma once

/// Zero-sum partitions of the symmetric set {-N/2, ..., -1, 1, ..., N/2}
/// and the set system used to label K_m o complement(K_n) when mn = 0 mod 4.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dmagic {

/// Parts of the symmetric integer set {+-1, ..., +-N/2}. The zero-sum
/// condition is over the integers, not modulo N.
struct ZeroSumPartition {
  std::int64_t N = 0;
  std::vector<std::vector<std::int64_t>> parts;
};

/// A^1..A^m over residues of Z_{mn}. sets[0] is A^1 and starts with mn/2;
/// sets[special_index - 1] is A^q and starts with mn/4.
struct Case1SetSystem {
  int m = 0;
  int n = 0;
  std::vector<std::vector<std::int64_t>> sets;
  int special_index = 0;  // q, 1-based
};

/// Partition {+-1, ..., +-N/2} into parts of the given sizes, each summing to
/// zero. Requires N even >= 2, every size >= 2, sizes summing to N; otherwise
/// UsageError. parts[i] has sizes[i] elements. Deterministic.
ZeroSumPartition zero_sum_partition(std::int64_t N, std::span<const int> sizes);

/// Requires m >= 2, n >= 2, mn = 0 (mod 4).
Case1SetSystem case1_sets(int m, int n);

/// nullopt when valid, otherwise the first violated invariant.
std::optional<std::string> validate_partition(const ZeroSumPartition& p);
/// As above, additionally checking |parts[i]| == sizes[i].
std::optional<std::string> validate_partition(const ZeroSumPartition& p, std::span<const int> sizes);
std::optional<std::string> validate_partition(const Case1SetSystem& s);

}  // namespace dmagic
