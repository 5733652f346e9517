#pragma once

/// Exhaustive decision procedure for orientable Z_N-distance magic labelings
/// of small graphs (N <= 64).
///
/// Decisions are labels and arc directions, scheduled so that vertices are
/// completed as early as possible. Pruning:
///   (a) a completed vertex whose weight differs from mu (mu is the weight of
///       the first completed vertex);
///   (b) a vertex with all neighbours labelled whose remaining free arcs
///       cannot reach mu;
///   (c) label parities inconsistent with every parity vector that satisfies
///       the mod-2 weight system (see obstructions.hpp).
///
/// Symmetry reductions, each mapping witnesses to witnesses:
///   fix_first_arc  reversing every arc maps mu to -mu;
///   twin_ordering  permuting vertices with equal neighbourhoods is an
///                  automorphism, so labels increase along each twin class;
///   unit_scaling   multiplying labels by a unit maps mu to a*mu, so the first
///                  labelled vertex takes 0 or a divisor of N.

#include <cstdint>
#include <optional>
#include <string>

#include "dmagic/graph.hpp"
#include "dmagic/verifier.hpp"

namespace dmagic {

inline constexpr int kMaxSearchOrder = 64;

struct SearchConfig {
  std::uint64_t node_budget = std::uint64_t{1} << 40;
  double seconds = 600.0;
  int threads = 1;
  bool fix_first_arc = true;
  bool twin_ordering = true;
  bool unit_scaling = false;
  bool parity_pruning = true;
  std::uint64_t seed = 0;

  /// No symmetry reductions; pruning rules untouched.
  SearchConfig unreduced() const {
    SearchConfig c = *this;
    c.fix_first_arc = c.twin_ordering = c.unit_scaling = false;
    return c;
  }
};

enum class Verdict { kWitness, kExhaustedNoSolution, kInconclusive };

struct SearchStatistics {
  std::uint64_t nodes = 0;
  std::uint64_t weight_prunes = 0;  // rule (a)
  std::uint64_t range_prunes = 0;   // rule (b)
  std::uint64_t parity_prunes = 0;  // rule (c)
  std::uint64_t jobs = 0;
  double elapsed_seconds = 0.0;
};

struct SearchOutcome {
  Verdict verdict = Verdict::kInconclusive;
  std::optional<MagicCertificate> witness;
  SearchStatistics stats;
};

/// Requires 1 <= |V| <= 64, positive budgets and threads >= 1.
/// Witnesses are always re-verified. With threads > 1 the witness returned
/// may vary between runs; verdicts do not.
SearchOutcome decide_existence(const UndirectedGraph& g, const SearchConfig& config = {});

std::string to_string(Verdict verdict);

}  // namespace dmagic
