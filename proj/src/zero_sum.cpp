#include "dmagic/zero_sum.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "dmagic/errors.hpp"
#include "dmagic/group.hpp"

namespace dmagic {

namespace {

// Elements are listed by absolute value, positive before negative.
bool element_less(std::int64_t a, std::int64_t b) {
  return std::make_tuple(std::abs(a), a < 0) < std::make_tuple(std::abs(b), b < 0);
}

bool part_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), element_less);
}

void check_sizes(std::int64_t N, std::span<const int> sizes) {
  if (N < 2 || N % 2 != 0) throw UsageError("N must be even and at least 2");
  std::int64_t total = 0;
  for (int r : sizes) {
    if (r < 2) throw UsageError("every part size must be at least 2");
    total += r;
  }
  if (total != N) throw UsageError("part sizes must sum to N");
}

std::int64_t residue_sum(const std::vector<std::int64_t>& set, std::int64_t modulus) {
  std::int64_t s = 0;
  for (auto x : set) s = reduce(s + x, modulus);
  return s;
}

}  // namespace

// Reduce every size to one zero-sum triple (odd sizes) plus antipodal pairs
// {a, -a}. The number t of odd sizes is even; with s = t/2 the triples cover
// {+-1, ..., +-3s} exactly:
//   for i = 1..2s, with p(i) = 2i mod (2s+1):
//     {s + i, -(s + p(i)), p(i) - i}
// i -> 2i mod (2s+1) permutes {1..2s} and p(i) - i runs over {+-1, ..., +-s}
// once each, so the large values s+1..3s appear once with each sign and the
// small values +-1..+-s once each. Odd sizes are >= 3 so 3s <= N/2; the rest
// {3s+1, ..., N/2} is handed out as antipodal pairs.
ZeroSumPartition zero_sum_partition(std::int64_t N, std::span<const int> sizes) {
  check_sizes(N, sizes);
  const std::int64_t half = N / 2;

  std::vector<std::size_t> odd_parts;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] % 2 != 0) odd_parts.push_back(i);
  const std::int64_t s = static_cast<std::int64_t>(odd_parts.size()) / 2;

  std::vector<std::vector<std::int64_t>> parts(sizes.size());
  for (std::int64_t i = 1; i <= 2 * s; ++i) {
    const std::int64_t p = (2 * i) % (2 * s + 1);
    auto& part = parts[odd_parts[static_cast<std::size_t>(i - 1)]];
    part = {s + i, -(s + p), p - i};
  }

  std::int64_t next = 3 * s + 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    while (static_cast<int>(parts[i].size()) < sizes[i]) {
      parts[i].push_back(next);
      parts[i].push_back(-next);
      ++next;
    }
  }
  if (next != half + 1) throw std::logic_error("zero_sum_partition: symmetric set not exhausted");

  for (auto& part : parts) std::sort(part.begin(), part.end(), element_less);

  // Among parts of equal size, hand them out in canonical order.
  std::map<int, std::vector<std::size_t>> slots_by_size;
  for (std::size_t i = 0; i < sizes.size(); ++i) slots_by_size[sizes[i]].push_back(i);
  std::vector<std::vector<std::int64_t>> ordered(sizes.size());
  for (auto& [size, slots] : slots_by_size) {
    std::vector<std::vector<std::int64_t>> same;
    for (auto i : slots) same.push_back(std::move(parts[i]));
    std::sort(same.begin(), same.end(), part_less);
    for (std::size_t k = 0; k < slots.size(); ++k) ordered[slots[k]] = std::move(same[k]);
  }
  return ZeroSumPartition{N, std::move(ordered)};
}

Case1SetSystem case1_sets(int m, int n) {
  if (m < 2 || n < 2) throw UsageError("case 1 needs m >= 2 and n >= 2");
  const std::int64_t order = static_cast<std::int64_t>(m) * n;
  if (order % 4 != 0) throw UsageError("case 1 needs mn = 0 (mod 4)");
  const std::int64_t half = order / 2;
  const std::int64_t quarter = order / 4;

  // The symmetric set {+-1, ..., +-(mn/2 - 1)} is Z_mn minus {0, mn/2}.
  std::vector<int> sizes;
  if (n == 2) {
    sizes.assign(m - 1, 2);
  } else {
    sizes = {n - 1, n - 1};
    sizes.insert(sizes.end(), m - 2, n);
  }
  ZeroSumPartition p = zero_sum_partition(order - 2, sizes);

  auto to_residues = [&](const std::vector<std::int64_t>& part) {
    std::vector<std::int64_t> out;
    for (auto x : part) out.push_back(residue_from_symmetric(x, order));
    std::sort(out.begin(), out.end());
    return out;
  };

  Case1SetSystem system{m, n, {}, 0};
  if (n == 2) {
    system.sets.push_back({half, 0});
    for (const auto& part : p.parts) system.sets.push_back(to_residues(part));
  } else {
    auto contains_quarter = [&](const std::vector<std::int64_t>& part) {
      return std::find(part.begin(), part.end(), quarter) != part.end();
    };
    // mn/4 must not end up in A^1; the first two parts have equal size.
    if (contains_quarter(p.parts[0])) std::swap(p.parts[0], p.parts[1]);
    auto first = to_residues(p.parts[0]);
    first.insert(first.begin(), half);
    auto second = to_residues(p.parts[1]);
    second.insert(std::upper_bound(second.begin(), second.end(), 0), 0);
    system.sets.push_back(std::move(first));
    system.sets.push_back(std::move(second));
    for (std::size_t i = 2; i < p.parts.size(); ++i) system.sets.push_back(to_residues(p.parts[i]));
  }

  for (std::size_t i = 1; i < system.sets.size(); ++i) {
    auto& set = system.sets[i];
    auto it = std::find(set.begin(), set.end(), quarter);
    if (it != set.end()) {
      std::rotate(set.begin(), it, it + 1);
      system.special_index = static_cast<int>(i) + 1;
    }
  }
  if (system.special_index == 0) throw std::logic_error("case1_sets: mn/4 not placed");
  return system;
}

std::optional<std::string> validate_partition(const ZeroSumPartition& p) {
  if (p.N < 2 || p.N % 2 != 0) return "N must be even and at least 2";
  const std::int64_t half = p.N / 2;
  std::set<std::int64_t> seen;
  std::size_t total = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    const std::string tag = "part " + std::to_string(i);
    if (part.size() < 2) return tag + " has fewer than 2 elements";
    std::int64_t s = 0;
    for (auto x : part) {
      if (x == 0 || x < -half || x > half) return tag + " element " + std::to_string(x) + " out of range";
      if (!seen.insert(x).second) return tag + " repeats element " + std::to_string(x);
      s += x;
    }
    if (s != 0) return tag + " sum != 0 (sum " + std::to_string(s) + ")";
    total += part.size();
  }
  if (total != static_cast<std::size_t>(p.N)) return "parts do not cover the symmetric set";
  return std::nullopt;
}

std::optional<std::string> validate_partition(const ZeroSumPartition& p, std::span<const int> sizes) {
  if (auto v = validate_partition(p)) return v;
  if (sizes.size() != p.parts.size()) return "number of parts differs from number of sizes";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (static_cast<int>(p.parts[i].size()) != sizes[i]) {
      return "part " + std::to_string(i) + " has size " + std::to_string(p.parts[i].size()) + ", expected " +
             std::to_string(sizes[i]);
    }
  }
  return std::nullopt;
}

std::optional<std::string> validate_partition(const Case1SetSystem& s) {
  if (s.m < 2 || s.n < 2) return "m and n must be at least 2";
  const std::int64_t order = static_cast<std::int64_t>(s.m) * s.n;
  if (order % 4 != 0) return "mn must be 0 mod 4";
  if (s.special_index == 1) return "q must differ from 1";
  if (s.special_index < 2 || s.special_index > s.m) return "q out of range";
  if (static_cast<int>(s.sets.size()) != s.m) return "expected m sets";
  std::vector<bool> seen(static_cast<std::size_t>(order), false);
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    const std::string tag = "A^" + std::to_string(i + 1);
    if (static_cast<int>(s.sets[i].size()) != s.n) return tag + " does not have n elements";
    for (auto x : s.sets[i]) {
      if (x < 0 || x >= order) return tag + " element " + std::to_string(x) + " is not a residue";
      if (seen[static_cast<std::size_t>(x)]) return tag + " repeats residue " + std::to_string(x);
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  const std::int64_t half = order / 2;
  const auto& first = s.sets[0];
  if (std::find(first.begin(), first.end(), half) == first.end()) return "mn/2 not in A^1";
  if (residue_sum(first, order) != half) return "A^1 does not sum to mn/2";
  for (std::size_t i = 1; i < s.sets.size(); ++i)
    if (residue_sum(s.sets[i], order) != 0) return "A^" + std::to_string(i + 1) + " does not sum to 0";
  const auto& special = s.sets[static_cast<std::size_t>(s.special_index - 1)];
  if (std::find(special.begin(), special.end(), order / 4) == special.end()) return "mn/4 not in A^q";
  return std::nullopt;
}

}  // namespace dmagic
