#include "dmagic/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <span>
#include <thread>
#include <tuple>

#include "dmagic/errors.hpp"
#include "dmagic/obstructions.hpp"

namespace dmagic {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kSplitDepth = 2;
constexpr std::size_t kMaxParityVectors = std::size_t{1} << 16;
constexpr std::uint64_t kFlushInterval = 1024;

struct Step {
  bool is_label = true;
  int vertex = -1;  // label steps
  int edge = -1;    // orient steps
};

// After a step, `vertex` has every neighbour labelled; `pending` lists the
// neighbours whose shared edge is still unoriented. Empty pending means the
// vertex is complete.
struct Check {
  int vertex = 0;
  std::vector<int> pending;
};

struct Incidence {
  int neighbour = 0;
  int edge = 0;
};

struct Plan {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Incidence>> incident;
  std::vector<Step> steps;
  std::vector<std::vector<Check>> checks;
  std::vector<int> prev_twin;
  int scaled_vertex = -1;
  int fixed_orient_step = -1;
  bool mu_zero_from_start = false;
  std::vector<std::vector<int>> label_candidates;
  bool parity_active = false;
  std::array<std::vector<std::uint64_t>, 2> parity_vectors;
  std::size_t split_depth = 0;
};

// Complete vertices one at a time: pick the incomplete vertex with the fewest
// unlabelled neighbours (then most labelled neighbours, then lowest index),
// label its neighbours and orient its remaining edges.
void schedule(Plan& plan, const std::vector<std::vector<int>>& adj) {
  const int n = plan.n;
  std::vector<bool> labeled(n, false), oriented(plan.edges.size(), false), done(n, false);
  auto complete = [&](int x) {
    for (const auto& inc : plan.incident[x])
      if (!labeled[inc.neighbour] || !oriented[inc.edge]) return false;
    return true;
  };
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) {
      done[v] = true;
      plan.mu_zero_from_start = true;
    }
  }
  for (;;) {
    int best = -1;
    std::tuple<int, int> best_key{0, 0};
    for (int x = 0; x < n; ++x) {
      if (done[x]) continue;
      int unlabeled = 0;
      for (int u : adj[x]) unlabeled += labeled[u] ? 0 : 1;
      const std::tuple<int, int> key{unlabeled, -(static_cast<int>(adj[x].size()) - unlabeled)};
      if (best < 0 || key < best_key) {
        best = x;
        best_key = key;
      }
    }
    if (best < 0) break;
    for (int u : adj[best]) {
      if (labeled[u]) continue;
      plan.steps.push_back({true, u, -1});
      labeled[u] = true;
    }
    for (const auto& inc : plan.incident[best]) {
      if (oriented[inc.edge]) continue;
      plan.steps.push_back({false, -1, inc.edge});
      oriented[inc.edge] = true;
    }
    for (int x = 0; x < n; ++x)
      if (!done[x] && complete(x)) done[x] = true;
  }
  for (int v = 0; v < n; ++v)
    if (!labeled[v]) plan.steps.push_back({true, v, -1});
}

void compute_checks(Plan& plan, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> labeled(plan.n, false), oriented(plan.edges.size(), false);
  plan.checks.assign(plan.steps.size(), {});
  for (std::size_t s = 0; s < plan.steps.size(); ++s) {
    const Step& step = plan.steps[s];
    std::vector<int> touched;
    if (step.is_label) {
      labeled[step.vertex] = true;
      touched = adj[step.vertex];
    } else {
      oriented[step.edge] = true;
      touched = {plan.edges[step.edge].u, plan.edges[step.edge].v};
    }
    for (int x : touched) {
      bool ready = true;
      for (int u : adj[x]) ready = ready && labeled[u];
      if (!ready) continue;
      Check check{x, {}};
      for (const auto& inc : plan.incident[x])
        if (!oriented[inc.edge]) check.pending.push_back(inc.neighbour);
      plan.checks[s].push_back(std::move(check));
    }
  }
}

// Twins (equal open or equal closed neighbourhoods) can be permuted freely.
void compute_twins(Plan& plan, const std::vector<std::vector<int>>& adj, bool unit_scaling) {
  plan.prev_twin.assign(plan.n, -1);
  std::vector<int> label_step(plan.n, 0);
  for (std::size_t s = 0; s < plan.steps.size(); ++s)
    if (plan.steps[s].is_label) label_step[plan.steps[s].vertex] = static_cast<int>(s);

  std::map<std::vector<int>, std::vector<int>> open_classes, closed_classes;
  for (int v = 0; v < plan.n; ++v) {
    open_classes[adj[v]].push_back(v);
    auto closed = adj[v];
    closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
    closed_classes[closed].push_back(v);
  }
  auto chain = [&](std::vector<int> members) {
    if (unit_scaling) std::erase(members, plan.scaled_vertex);
    std::sort(members.begin(), members.end(), [&](int a, int b) { return label_step[a] < label_step[b]; });
    for (std::size_t i = 1; i < members.size(); ++i) plan.prev_twin[members[i]] = members[i - 1];
  };
  for (auto& [key, members] : open_classes)
    if (members.size() > 1) chain(members);
  for (auto& [key, members] : closed_classes)
    if (members.size() > 1) chain(members);
}

void compute_parity(Plan& plan, const UndirectedGraph& g) {
  if (plan.n < 2 || plan.n % 2 != 0) return;
  const std::size_t half = static_cast<std::size_t>(plan.n) / 2;
  std::size_t total = 0;
  for (int c = 0; c < 2; ++c) {
    bool overflow = false;
    const bool enumerated = for_each_parity_solution(g, c, kDefaultKernelCap, [&](const BitVector& p) {
      if (p.popcount() != half) return true;
      if (++total > kMaxParityVectors) {
        overflow = true;
        return false;
      }
      plan.parity_vectors[c].push_back(p.words()[0]);
      return true;
    });
    if (!enumerated || overflow) {
      plan.parity_vectors = {};
      return;
    }
  }
  plan.parity_active = true;
}

Plan build_plan(const UndirectedGraph& g, const SearchConfig& config) {
  Plan plan;
  plan.n = g.vertex_count();
  plan.edges.assign(g.edges().begin(), g.edges().end());
  plan.incident.assign(plan.n, {});
  for (std::size_t e = 0; e < plan.edges.size(); ++e) {
    const auto [u, v] = plan.edges[e];
    plan.incident[u].push_back({v, static_cast<int>(e)});
    plan.incident[v].push_back({u, static_cast<int>(e)});
  }
  for (auto& list : plan.incident)
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
  const auto adj = g.adjacency();

  schedule(plan, adj);
  compute_checks(plan, adj);

  for (std::size_t s = 0; s < plan.steps.size(); ++s) {
    if (plan.steps[s].is_label && plan.scaled_vertex < 0) plan.scaled_vertex = plan.steps[s].vertex;
    if (!plan.steps[s].is_label && plan.fixed_orient_step < 0) plan.fixed_orient_step = static_cast<int>(s);
  }
  if (!config.unit_scaling) plan.scaled_vertex = -1;
  if (!config.fix_first_arc) plan.fixed_orient_step = -1;
  if (config.twin_ordering) {
    compute_twins(plan, adj, config.unit_scaling);
  } else {
    plan.prev_twin.assign(plan.n, -1);
  }

  plan.label_candidates.assign(plan.steps.size(), {});
  for (std::size_t s = 0; s < plan.steps.size(); ++s) {
    if (!plan.steps[s].is_label) continue;
    auto& order = plan.label_candidates[s];
    order.resize(static_cast<std::size_t>(plan.n));
    for (int r = 0; r < plan.n; ++r) order[r] = r;
    if (config.seed != 0) {
      std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ULL + s);
      std::shuffle(order.begin(), order.end(), rng);
    }
  }
  if (config.parity_pruning) compute_parity(plan, g);
  plan.split_depth = std::min(kSplitDepth, plan.steps.size());
  return plan;
}

struct Shared {
  std::atomic<bool> found{false};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_budget = 0;
  Clock::time_point deadline;
};

struct RawWitness {
  std::vector<int> labels;
  std::vector<int> directions;
};

class Worker {
 public:
  Worker(const Plan& plan, Shared& shared) : plan_(plan), shared_(shared) { reset(); }

  void reset() {
    label_.assign(plan_.n, -1);
    dir_.assign(plan_.edges.size(), -1);
    weight_.assign(plan_.n, 0);
    mu_set_at_.assign(plan_.steps.size(), false);
    used_ = parity_mask_ = parity_bits_ = 0;
    mu_ = plan_.mu_zero_from_start ? 0 : -1;
    choices_.clear();
    stats = {};
    witness.reset();
    aborted = false;
  }

  void collect(std::vector<std::vector<int>>& prefixes) {
    prefixes_ = &prefixes;
    dfs(0);
    prefixes_ = nullptr;
    flush();
  }

  void run_job(const std::vector<int>& prefix) {
    reset();
    for (std::size_t s = 0; s < prefix.size(); ++s) {
      if (!try_apply(s, prefix[s])) throw std::logic_error("search: job prefix no longer applies");
      choices_.push_back(prefix[s]);
    }
    stats = {};
    dfs(prefix.size());
    flush();
  }

  SearchStatistics stats;
  std::optional<RawWitness> witness;
  bool aborted = false;

 private:
  bool halted() const { return witness.has_value() || aborted || shared_.found.load(std::memory_order_relaxed); }

  void flush() {
    shared_.nodes.fetch_add(unflushed_, std::memory_order_relaxed);
    unflushed_ = 0;
  }

  bool count_node() {
    ++stats.nodes;
    ++unflushed_;
    if (shared_.nodes.load(std::memory_order_relaxed) + unflushed_ > shared_.node_budget) {
      shared_.out_of_budget = true;
    }
    if (unflushed_ >= kFlushInterval) {
      flush();
      if (Clock::now() > shared_.deadline) shared_.out_of_budget = true;
    }
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) {
      aborted = true;
      return false;
    }
    return !shared_.found.load(std::memory_order_relaxed);
  }

  int add_mod(int a, int b) const {
    const int s = a + b;
    return s >= plan_.n ? s - plan_.n : s;
  }
  int sub_mod(int a, int b) const {
    const int s = a - b;
    return s < 0 ? s + plan_.n : s;
  }

  std::uint64_t rotate(std::uint64_t x, int k) const {
    if (k == 0) return x;
    const std::uint64_t mask = plan_.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << plan_.n) - 1;
    return ((x << k) | (x >> (plan_.n - k))) & mask;
  }

  bool reachable(const Check& check) const {
    const int target = sub_mod(mu_, weight_[check.vertex]);
    std::uint64_t reach = 1;
    for (int u : check.pending) {
      const int y = label_[u];
      reach = rotate(reach, y) | rotate(reach, y == 0 ? 0 : plan_.n - y);
    }
    return (reach >> target) & 1U;
  }

  bool parity_consistent() const {
    for (int c = 0; c < 2; ++c) {
      if (mu_ >= 0 && (mu_ & 1) != c) continue;
      for (auto p : plan_.parity_vectors[c])
        if ((p & parity_mask_) == parity_bits_) return true;
    }
    return false;
  }

  // Arc tail -> head adds l(tail) to w(head) and subtracts l(head) from w(tail).
  void apply_label(int v, int r, bool forward) {
    label_[v] = forward ? r : -1;
    used_ ^= std::uint64_t{1} << r;
    for (const auto& inc : plan_.incident[v]) {
      const int d = dir_[inc.edge];
      if (d < 0) continue;
      const bool v_is_tail = (plan_.edges[inc.edge].u == v) == (d == 0);
      const bool add = v_is_tail == forward;
      weight_[inc.neighbour] = add ? add_mod(weight_[inc.neighbour], r) : sub_mod(weight_[inc.neighbour], r);
    }
    if (plan_.parity_active) {
      parity_mask_ ^= std::uint64_t{1} << v;
      if (r & 1) parity_bits_ ^= std::uint64_t{1} << v;
    }
  }

  void apply_orient(int e, int d, bool forward) {
    dir_[e] = forward ? d : -1;
    const int tail = d == 0 ? plan_.edges[e].u : plan_.edges[e].v;
    const int head = d == 0 ? plan_.edges[e].v : plan_.edges[e].u;
    if (label_[tail] >= 0) {
      weight_[head] = forward ? add_mod(weight_[head], label_[tail]) : sub_mod(weight_[head], label_[tail]);
    }
    if (label_[head] >= 0) {
      weight_[tail] = forward ? sub_mod(weight_[tail], label_[head]) : add_mod(weight_[tail], label_[head]);
    }
  }

  void raw_undo(std::size_t s, int choice) {
    const Step& step = plan_.steps[s];
    if (step.is_label) {
      apply_label(step.vertex, choice, false);
    } else {
      apply_orient(step.edge, choice, false);
    }
  }

  void undo(std::size_t s, int choice) {
    if (mu_set_at_[s]) {
      mu_ = -1;
      mu_set_at_[s] = false;
    }
    raw_undo(s, choice);
  }

  bool try_apply(std::size_t s, int choice) {
    const Step& step = plan_.steps[s];
    if (step.is_label) {
      apply_label(step.vertex, choice, true);
      if (plan_.parity_active && !parity_consistent()) {
        ++stats.parity_prunes;
        raw_undo(s, choice);
        return false;
      }
    } else {
      apply_orient(step.edge, choice, true);
    }
    bool mu_set = false;
    bool ok = true;
    for (const auto& check : plan_.checks[s]) {
      if (check.pending.empty()) {
        if (mu_ < 0) {
          mu_ = weight_[check.vertex];
          mu_set = true;
        } else if (weight_[check.vertex] != mu_) {
          ++stats.weight_prunes;
          ok = false;
          break;
        }
      } else if (mu_ >= 0 && !reachable(check)) {
        ++stats.range_prunes;
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (mu_set) mu_ = -1;
      raw_undo(s, choice);
      return false;
    }
    mu_set_at_[s] = mu_set;
    return true;
  }

  bool label_allowed(int v, int r) const {
    if ((used_ >> r) & 1U) return false;
    const int prev = plan_.prev_twin[v];
    if (prev >= 0 && r <= label_[prev]) return false;
    if (v == plan_.scaled_vertex && r != 0 && plan_.n % r != 0) return false;
    return true;
  }

  void descend(std::size_t s, int choice) {
    if (!try_apply(s, choice)) return;
    choices_.push_back(choice);
    if (prefixes_ != nullptr && s + 1 == plan_.split_depth) {
      prefixes_->push_back(choices_);
    } else {
      dfs(s + 1);
    }
    choices_.pop_back();
    undo(s, choice);
  }

  void dfs(std::size_t s) {
    if (s == plan_.steps.size()) {
      witness = RawWitness{label_, dir_};
      shared_.found = true;
      return;
    }
    const Step& step = plan_.steps[s];
    if (step.is_label) {
      for (int r : plan_.label_candidates[s]) {
        if (!label_allowed(step.vertex, r)) continue;
        if (!count_node()) return;
        descend(s, r);
        if (halted()) return;
      }
    } else {
      const int last = static_cast<int>(s) == plan_.fixed_orient_step ? 0 : 1;
      for (int d = 0; d <= last; ++d) {
        if (!count_node()) return;
        descend(s, d);
        if (halted()) return;
      }
    }
  }

  const Plan& plan_;
  Shared& shared_;
  std::vector<int> label_, dir_, weight_;
  std::vector<bool> mu_set_at_;
  std::uint64_t used_ = 0, parity_mask_ = 0, parity_bits_ = 0;
  int mu_ = -1;
  std::vector<int> choices_;
  std::vector<std::vector<int>>* prefixes_ = nullptr;
  std::uint64_t unflushed_ = 0;
};

void accumulate(SearchStatistics& into, const SearchStatistics& from) {
  into.nodes += from.nodes;
  into.weight_prunes += from.weight_prunes;
  into.range_prunes += from.range_prunes;
  into.parity_prunes += from.parity_prunes;
}

struct JobResult {
  SearchStatistics stats;
  std::optional<RawWitness> witness;
  bool skipped = false;
};

}  // namespace

SearchOutcome decide_existence(const UndirectedGraph& g, const SearchConfig& config) {
  if (g.vertex_count() < 1) throw UsageError("search needs at least one vertex");
  if (g.vertex_count() > kMaxSearchOrder) throw UsageError("search supports at most 64 vertices");
  if (config.node_budget == 0 || !(config.seconds > 0.0)) throw UsageError("search budgets must be positive");
  if (config.threads < 1) throw UsageError("search needs at least one thread");

  const auto start = Clock::now();
  const Plan plan = build_plan(g, config);
  Shared shared;
  shared.node_budget = config.node_budget;
  shared.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.seconds));

  SearchOutcome outcome;
  std::vector<std::vector<int>> prefixes;
  {
    Worker root(plan, shared);
    root.collect(prefixes);
    outcome.stats = root.stats;
  }

  std::vector<JobResult> results(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Worker worker(plan, shared);
    for (std::size_t j = next++; j < prefixes.size(); j = next++) {
      if (shared.found || shared.out_of_budget) {
        results[j].skipped = true;
        continue;
      }
      worker.run_job(prefixes[j]);
      results[j] = {worker.stats, worker.witness, worker.aborted};
    }
  };
  const auto thread_count = std::min<std::size_t>(static_cast<std::size_t>(config.threads), prefixes.size());
  if (thread_count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const auto& r : results) accumulate(outcome.stats, r.stats);
  outcome.stats.jobs = prefixes.size();
  for (const auto& r : results) {
    if (!r.witness) continue;
    std::vector<std::int64_t> labels(r.witness->labels.begin(), r.witness->labels.end());
    std::vector<bool> directions;
    for (int d : r.witness->directions) directions.push_back(d == 1);
    outcome.witness = certify(g, Orientation(g, std::move(directions)), Labeling(g.vertex_count(), std::move(labels)));
    outcome.verdict = Verdict::kWitness;
    break;
  }
  if (!outcome.witness) {
    outcome.verdict = shared.out_of_budget ? Verdict::kInconclusive : Verdict::kExhaustedNoSolution;
  }
  outcome.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return outcome;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kWitness:
      return "witness";
    case Verdict::kExhaustedNoSolution:
      return "exhausted-no-solution";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace dmagic
