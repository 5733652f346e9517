#include "dmagic/obstructions.hpp"

#include <bit>
#include <sstream>

#include "dmagic/errors.hpp"
#include "dmagic/search.hpp"

namespace dmagic {

std::string NonexistenceCertificate::method() const {
  struct Name {
    std::string operator()(const Theorem1Reason&) const { return "theorem1"; }
    std::string operator()(const ParityReason&) const { return "parity"; }
    std::string operator()(const ExhaustedSearchReason&) const { return "search"; }
  };
  return std::visit(Name{}, reason);
}

std::string format_nonexistence(const NonexistenceCertificate& cert) {
  std::ostringstream out;
  out << "nonexistence " << cert.graph << '\n';
  if (const auto* t = std::get_if<Theorem1Reason>(&cert.reason)) {
    out << "reason theorem1 r=" << t->degree << " N=" << t->order << '\n';
  } else if (const auto* p = std::get_if<ParityReason>(&cert.reason)) {
    out << "reason parity " << p->details << '\n';
  } else if (const auto* s = std::get_if<ExhaustedSearchReason>(&cert.reason)) {
    out << "reason search nodes=" << s->nodes << " elapsed=" << s->elapsed_seconds << "s\n";
  }
  return out.str();
}

std::optional<NonexistenceCertificate> theorem1_check(const UndirectedGraph& g) {
  const auto r = regularity(g);
  const int order = g.vertex_count();
  if (!r || *r % 2 == 0 || order % 4 != 2) return std::nullopt;
  return NonexistenceCertificate{describe(g), Theorem1Reason{*r, order}};
}

namespace {

std::optional<AffineSolution> solve_parity_system(const UndirectedGraph& g, int c) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto adj = g.adjacency();
  std::vector<BitVector> rows;
  for (std::size_t v = 0; v < n; ++v) {
    BitVector row(n);
    for (int u : adj[v]) row.set(static_cast<std::size_t>(u), true);
    rows.push_back(std::move(row));
  }
  BitVector rhs(n);
  for (std::size_t v = 0; v < n; ++v) rhs.set(v, c != 0);
  return solve_affine(rows, rhs, n);
}

// Gray code over the kernel: one xor per visited vector.
void enumerate_coset(const AffineSolution& sol, const std::function<bool(const BitVector&)>& visit) {
  BitVector p = sol.particular;
  if (!visit(p)) return;
  const std::uint64_t total = std::uint64_t{1} << sol.kernel.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    p ^= sol.kernel[static_cast<std::size_t>(std::countr_zero(i))];
    if (!visit(p)) return;
  }
}

}  // namespace

bool for_each_parity_solution(const UndirectedGraph& g, int c, int kernel_cap,
                              const std::function<bool(const BitVector&)>& visit) {
  const auto sol = solve_parity_system(g, c);
  if (!sol) return true;
  if (sol->kernel.size() > static_cast<std::size_t>(kernel_cap)) return false;
  enumerate_coset(*sol, visit);
  return true;
}

ParityWitnessSpace parity_feasibility(const UndirectedGraph& g, int kernel_cap) {
  ParityWitnessSpace space;
  space.order = g.vertex_count();
  if (g.vertex_count() < 2 || g.vertex_count() % 2 != 0) return space;
  const auto half = static_cast<std::size_t>(g.vertex_count()) / 2;

  bool inconclusive = false;
  for (int c = 0; c < 2; ++c) {
    ParityTarget& t = space.targets[c];
    t.constant = c;
    const auto sol = solve_parity_system(g, c);
    if (!sol) continue;
    t.solvable = true;
    t.kernel_dimension = static_cast<int>(sol->kernel.size());
    if (t.kernel_dimension > kernel_cap) {
      inconclusive = true;
      continue;
    }
    t.enumerated = true;
    enumerate_coset(*sol, [&](const BitVector& p) {
      if (p.popcount() == half) {
        t.feasible = true;
        return false;
      }
      return true;
    });
  }
  if (space.targets[0].feasible || space.targets[1].feasible) {
    space.verdict = ParityVerdict::kFeasible;
  } else {
    space.verdict = inconclusive ? ParityVerdict::kInconclusive : ParityVerdict::kInfeasible;
  }
  return space;
}

std::optional<NonexistenceCertificate> parity_check(const UndirectedGraph& g, int kernel_cap) {
  const auto space = parity_feasibility(g, kernel_cap);
  if (space.verdict != ParityVerdict::kInfeasible) return std::nullopt;
  std::ostringstream details;
  for (const auto& t : space.targets) {
    if (t.constant == 1) details << "; ";
    details << "c=" << t.constant << ": ";
    if (!t.solvable) {
      details << "no solution";
    } else {
      details << "kernel dimension " << t.kernel_dimension << ", no solution with " << space.order / 2
              << " odd labels";
    }
  }
  return NonexistenceCertificate{describe(g), ParityReason{details.str()}};
}

std::variant<NonexistenceCertificate, Unproven> prism_nonexistence(int n) {
  if (n < 3) throw UsageError("prism needs n >= 3");
  const UndirectedGraph g = prism(n);
  if (auto cert = theorem1_check(g)) return *cert;

  SearchConfig independent;
  independent.parity_pruning = false;
  if (auto cert = parity_check(g)) {
    if (n <= 5) {
      const auto outcome = decide_existence(g, independent);
      if (outcome.verdict == Verdict::kWitness) {
        throw std::logic_error("parity certificate contradicted by a search witness");
      }
      if (outcome.verdict == Verdict::kInconclusive) return Unproven{"cross-check search ran out of budget"};
    }
    return *cert;
  }
  const auto outcome = decide_existence(g, independent);
  if (outcome.verdict == Verdict::kExhaustedNoSolution) {
    return NonexistenceCertificate{describe(g),
                                   ExhaustedSearchReason{outcome.stats.nodes, outcome.stats.elapsed_seconds}};
  }
  if (outcome.verdict == Verdict::kWitness) {
    throw std::logic_error("prism " + std::to_string(n) + " has a witness");
  }
  return Unproven{"parity inconclusive and search budget exhausted"};
}

}  // namespace dmagic
