// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "dmagic/constructors.hpp"
#include "dmagic/obstructions.hpp"
#include "dmagic/search.hpp"
#include "dmagic/table.hpp"
#include "dmagic/zero_sum.hpp"

using namespace dmagic;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kCaseSeconds = 1.0;
constexpr double kSmallSearchSeconds = 1.0;
constexpr double kLargeSearchSeconds = 600.0;
constexpr double kWitnessSeconds = 300.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

UndirectedGraph kmokn(int m, int n) { return lexicographic(complete(m), empty_graph(n)); }

std::optional<std::int64_t> verified_mu(const MagicCertificate& c) {
  const auto r = verify(c.graph, c.orientation, c.labeling);
  if (!std::holds_alternative<MagicCertificate>(r)) return std::nullopt;
  return std::get<MagicCertificate>(r).mu.value();
}

struct Report {
  int failures = 0;
  void line(int id, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !pass;
  }
};

bool criterion1(std::string& detail) {
  int instances = 0, bad = 0;
  double worst = 0;
  for (int m = 2; m <= 12; ++m) {
    for (int n = 2; n <= 12; ++n) {
      if ((m * n) % 4 != 0) continue;
      const auto start = Clock::now();
      const auto c = construct_case1(m, n);
      const auto mu = verified_mu(c);
      const double t = seconds_since(start);
      worst = std::max(worst, t);
      ++instances;
      if (!mu || *mu != m * n / 2 || c.graph != kmokn(m, n) || t >= kCaseSeconds) ++bad;
    }
  }
  detail = std::to_string(instances) + " instances, mu = mn/2 exactly, slowest " + std::to_string(worst) + " s";
  return bad == 0;
}

bool criterion2(std::string& detail) {
  int instances = 0, bad = 0, sign_differs = 0;
  double worst = 0;
  for (int m = 3; m <= 11; m += 2) {
    for (int n : {2, 6, 10}) {
      const auto start = Clock::now();
      const auto c = construct_case2(m, n);
      const auto mu = verified_mu(c);
      const double t = seconds_since(start);
      worst = std::max(worst, t);
      ++instances;
      const std::int64_t N = std::int64_t{m} * n;
      const std::int64_t q = std::int64_t{n} * n * (std::int64_t{m} * m - 1) / 4;
      if (!mu || *mu != mod(-q, N) || c.graph != kmokn(m, n) || t >= kCaseSeconds) ++bad;
      if (mod(q, N) != mod(-q, N)) ++sign_differs;
    }
  }
  detail = std::to_string(instances) + " instances, mu = -n^2(m^2-1)/4 mod mn; the +n^2(m^2-1)/4 form differs on " +
           std::to_string(sign_differs) + " of them (sign difference), slowest " + std::to_string(worst) + " s";
  return bad == 0;
}

bool criterion3(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 15; n += 2) {
    const auto c = construct_complete(n);
    ok = ok && verified_mu(c).has_value() && c.graph == complete(n);
  }
  auto start = Clock::now();
  const auto k4 = decide_existence(complete(4));
  const double t4 = seconds_since(start);
  start = Clock::now();
  const auto k6 = decide_existence(complete(6));
  const double t6 = seconds_since(start);
  ok = ok && k4.verdict == Verdict::kExhaustedNoSolution && t4 < kSmallSearchSeconds;
  ok = ok && k6.verdict == Verdict::kExhaustedNoSolution && t6 < kLargeSearchSeconds;
  SearchConfig no_parity;
  no_parity.parity_pruning = false;
  start = Clock::now();
  const auto k6_plain = decide_existence(complete(6), no_parity);
  const double t6_plain = seconds_since(start);
  ok = ok && k6_plain.verdict == Verdict::kExhaustedNoSolution && t6_plain < kLargeSearchSeconds;
  detail = "K_n verified for odd n <= 15; K_4 " + to_string(k4.verdict) + " in " + std::to_string(t4) + " s; K_6 " +
           to_string(k6.verdict) + " in " + std::to_string(t6) + " s (" + std::to_string(t6_plain) +
           " s without parity pruning)";
  return ok;
}

bool criterion4(std::string& detail) {
  const auto p3 = theorem1_check(prism(3));
  const auto p5 = theorem1_check(prism(5));
  const auto p4 = parity_check(prism(4));
  SearchConfig independent;
  independent.parity_pruning = false;
  const auto start = Clock::now();
  const auto s4 = decide_existence(prism(4), independent);
  const double t = seconds_since(start);
  const bool ok = p3 && p5 && p4 && s4.verdict == Verdict::kExhaustedNoSolution && t < kLargeSearchSeconds;
  detail = std::string("prism(3) ") + (p3 ? "theorem1" : "none") + ", prism(5) " + (p5 ? "theorem1" : "none") +
           ", prism(4) " + (p4 ? "parity" : "none") + " and search without parity " + to_string(s4.verdict) + " in " +
           std::to_string(t) + " s";
  return ok;
}

bool criterion5(std::string& detail) {
  bool ok = true;
  std::ostringstream out;
  for (const std::vector<int>& sizes : {std::vector<int>{1, 2, 2}, {1, 2, 4}, {3, 2, 2}}) {
    const auto g = complete_multipartite(sizes);
    const auto start = Clock::now();
    const auto s = decide_existence(g);
    const double t = seconds_since(start);
    const bool good = s.verdict == Verdict::kWitness && s.witness && verified_mu(*s.witness) && t < kWitnessSeconds;
    ok = ok && good;
    out << "K_{" << sizes[0] << "," << sizes[1] << "," << sizes[2] << "} " << to_string(s.verdict) << " " << t << " s; ";
  }
  detail = out.str();
  return ok;
}

// Canonical (sorted) form of a partition, used to compare against the oracle.
using Canonical = std::vector<std::vector<std::int64_t>>;

Canonical canonical(std::vector<std::vector<std::int64_t>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::set<Canonical> oracle_partitions(int N, const std::vector<int>& sizes) {
  std::vector<std::int64_t> elems;
  for (int x = -N / 2; x <= N / 2; ++x)
    if (x != 0) elems.push_back(x);
  std::vector<bool> used(elems.size());
  std::multiset<int> left(sizes.begin(), sizes.end());
  std::vector<std::vector<std::int64_t>> blocks;
  std::set<Canonical> out;
  std::function<void()> open_block;
  std::function<void(std::vector<std::int64_t>&, std::size_t, int, std::int64_t)> grow =
      [&](std::vector<std::int64_t>& b, std::size_t from, int size, std::int64_t s) {
        if (static_cast<int>(b.size()) == size) {
          if (s == 0) {
            blocks.push_back(b);
            open_block();
            blocks.pop_back();
          }
          return;
        }
        for (std::size_t i = from; i < elems.size(); ++i) {
          if (used[i]) continue;
          used[i] = true;
          b.push_back(elems[i]);
          grow(b, i + 1, size, s + elems[i]);
          b.pop_back();
          used[i] = false;
        }
      };
  open_block = [&] {
    const auto it = std::find(used.begin(), used.end(), false);
    if (it == used.end()) {
      out.insert(canonical(blocks));
      return;
    }
    const auto i = static_cast<std::size_t>(it - used.begin());
    for (int size : std::set<int>(left.begin(), left.end())) {
      left.erase(left.find(size));
      used[i] = true;
      std::vector<std::int64_t> b{elems[i]};
      grow(b, i + 1, size, elems[i]);
      used[i] = false;
      left.insert(size);
    }
  };
  open_block();
  return out;
}

void size_vectors(int N, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (N == 0) out.push_back(cur);
  for (int p = std::min(N, cap); p >= 2; --p) {
    cur.push_back(p);
    size_vectors(N - p, p, cur, out);
    cur.pop_back();
  }
}

bool criterion6(std::string& detail) {
  std::mt19937_64 rng(20240601);
  int random_bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int N = 2 * (1 + static_cast<int>(rng() % 100));
    std::vector<int> sizes;
    for (int left = N; left > 0;) {
      int r = left <= 3 ? left : 2 + static_cast<int>(rng() % std::min(left - 1, 15));
      if (left - r == 1) ++r;
      sizes.push_back(r);
      left -= r;
    }
    std::shuffle(sizes.begin(), sizes.end(), rng);
    if (validate_partition(zero_sum_partition(N, sizes), sizes)) ++random_bad;
  }
  int oracle_cases = 0, oracle_bad = 0;
  for (int N = 2; N <= 16; N += 2) {
    std::vector<int> cur;
    std::vector<std::vector<int>> all;
    size_vectors(N, N, cur, all);
    for (auto sizes : all) {
      const auto solutions = oracle_partitions(N, sizes);
      for (int variant = 0; variant < 2; ++variant) {
        if (variant) std::reverse(sizes.begin(), sizes.end());
        const auto p = zero_sum_partition(N, sizes);
        ++oracle_cases;
        if (validate_partition(p, sizes) || !solutions.count(canonical(p.parts))) ++oracle_bad;
      }
    }
  }
  detail = "500 random inputs, " + std::to_string(random_bad) + " invalid; " + std::to_string(oracle_cases) +
           " oracle comparisons for N <= 16, " + std::to_string(oracle_bad) + " mismatches";
  return random_bad == 0 && oracle_bad == 0;
}

bool criterion7(std::string& detail) {
  TableOptions options;
  options.max_m = 8;
  options.max_n = 8;
  options.search_max_order = 8;
  SearchConfig independent;
  independent.parity_pruning = false;
  int certified = 0, contradictions = 0;
  auto check = [&](const UndirectedGraph& g) {
    if (!theorem1_check(g) && !parity_check(g)) return;
    ++certified;
    if (decide_existence(g, independent).verdict != Verdict::kExhaustedNoSolution) ++contradictions;
  };
  for (const auto& row : build_table(options)) {
    if (row.order > 8) continue;
    check(kmokn(row.m, row.n));
  }
  for (int n = 3; n <= 4; ++n) check(prism(n));
  detail = std::to_string(certified) + " certified not-magic instances of order <= 8 searched without parity pruning, " +
           std::to_string(contradictions) + " contradictions";
  return contradictions == 0 && certified > 0;
}

UndirectedGraph graph_from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.push_back({u, v});
  return UndirectedGraph(n, edges);
}

bool criterion8(std::string& detail) {
  int graphs = 0, mismatches = 0;
  for (bool parity : {true, false}) {
    SearchConfig all;
    all.parity_pruning = parity;
    SearchConfig arc_only = all.unreduced();
    arc_only.fix_first_arc = true;
    const SearchConfig none = all.unreduced();
    for (int n = 1; n <= 6; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        const auto g = graph_from_mask(n, mask);
        const auto base = decide_existence(g, none).verdict;
        ++graphs;
        if (decide_existence(g, arc_only).verdict != base || decide_existence(g, all).verdict != base) ++mismatches;
      }
    }
  }
  detail = std::to_string(graphs) + " graph runs of order <= 6 (parity pruning on and off), " +
           std::to_string(mismatches) + " verdict mismatches of fix-first-arc or all reductions vs unreduced";
  return mismatches == 0;
}

bool criterion9(std::string& detail) {
  std::vector<MagicCertificate> certs;
  for (int n = 1; n <= 23; n += 2) certs.push_back(construct_complete(n));
  for (int m = 2; m <= 12; ++m)
    for (int n = 2; n <= 12; ++n) {
      if (m * n > 24) continue;
      const auto d = decide_kmokn(m, n);
      if (d.certificate) certs.push_back(*d.certificate);
    }
  for (const std::vector<int>& sizes : {std::vector<int>{1, 2, 2}, {1, 2, 4}, {3, 2, 2}}) {
    const auto s = decide_existence(complete_multipartite(sizes));
    if (s.witness) certs.push_back(*s.witness);
  }
  int checks = 0, bad = 0;
  for (const auto& c : certs) {
    const auto N = c.labeling.modulus();
    const auto r = verify(c.graph, c.orientation.reversed(), c.labeling);
    ++checks;
    if (!std::holds_alternative<MagicCertificate>(r) || std::get<MagicCertificate>(r).mu != -c.mu) ++bad;
    for (std::int64_t a = 1; a < std::max<std::int64_t>(N, 2); ++a) {
      if (std::gcd(a, N) != 1) continue;
      const auto s = verify(c.graph, c.orientation, c.labeling.scaled(a));
      ++checks;
      if (!std::holds_alternative<MagicCertificate>(s) || std::get<MagicCertificate>(s).mu != c.mu.scaled(a)) ++bad;
    }
  }
  detail = std::to_string(certs.size()) + " certificates with N <= 24, " + std::to_string(checks) + " checks, " +
           std::to_string(bad) + " failures";
  return bad == 0;
}

}  // namespace

int main() {
  Report report;
  const std::vector<std::function<bool(std::string&)>> criteria{criterion1, criterion2, criterion3,
                                                               criterion4, criterion5, criterion6,
                                                               criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i](detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report.line(static_cast<int>(i + 1), pass, detail);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - report.failures, criteria.size());
  return report.failures == 0 ? 0 : 1;
}
