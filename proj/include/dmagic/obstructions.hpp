#pragma once

/// Nonexistence certificates.
///
/// theorem1_check: an r-regular graph with r odd on N = 2 (mod 4) vertices
/// has no orientable Z_N-distance magic labeling.
///
/// parity_feasibility: reducing w(x) = mu modulo 2 removes the orientation
/// (adding and subtracting agree mod 2). For even N the labels 0..N-1 contain
/// exactly N/2 odd values, so a labeling induces a 0/1 vector p with N/2 ones
/// and sum_{u ~ v} p(u) = c for every v, where c = mu mod 2. If no such p
/// exists for either c, the graph is not magic.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "dmagic/gf2.hpp"
#include "dmagic/graph.hpp"

namespace dmagic {

struct Theorem1Reason {
  int degree = 0;
  int order = 0;
};

struct ParityReason {
  std::string details;
};

struct ExhaustedSearchReason {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct NonexistenceCertificate {
  std::string graph;
  std::variant<Theorem1Reason, ParityReason, ExhaustedSearchReason> reason;

  /// "theorem1", "parity" or "search".
  std::string method() const;
};

std::string format_nonexistence(const NonexistenceCertificate& cert);

std::optional<NonexistenceCertificate> theorem1_check(const UndirectedGraph& g);

inline constexpr int kDefaultKernelCap = 24;

enum class ParityVerdict { kNotApplicable, kFeasible, kInfeasible, kInconclusive };

struct ParityTarget {
  int constant = 0;  // c
  bool solvable = false;
  int kernel_dimension = 0;
  bool enumerated = false;  // false when the kernel exceeded the cap
  bool feasible = false;    // a solution with exactly N/2 ones exists
};

struct ParityWitnessSpace {
  int order = 0;
  ParityVerdict verdict = ParityVerdict::kNotApplicable;
  std::array<ParityTarget, 2> targets{};
};

/// Invokes `visit` on every p with sum_{u ~ v} p(u) = c for all v (no
/// cardinality filter). Stops early when `visit` returns false. Returns false
/// without visiting anything if the kernel dimension exceeds `kernel_cap`.
bool for_each_parity_solution(const UndirectedGraph& g, int c, int kernel_cap,
                              const std::function<bool(const BitVector&)>& visit);

ParityWitnessSpace parity_feasibility(const UndirectedGraph& g, int kernel_cap = kDefaultKernelCap);

/// Certificate iff parity_feasibility reports kInfeasible.
std::optional<NonexistenceCertificate> parity_check(const UndirectedGraph& g, int kernel_cap = kDefaultKernelCap);

struct Unproven {
  std::string why;
};

/// n odd: theorem1_check certificate. n even: parity certificate; for n <= 5 it is
/// cross-checked against exhaustive search run without parity pruning, and a
/// disagreement throws std::logic_error. Falls back to search when parity is
/// inconclusive; never reports a certificate it cannot back.
std::variant<NonexistenceCertificate, Unproven> prism_nonexistence(int n);

}  // namespace dmagic
