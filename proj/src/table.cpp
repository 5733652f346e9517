#include "dmagic/table.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "dmagic/constructors.hpp"
#include "dmagic/errors.hpp"
#include "dmagic/obstructions.hpp"
#include "dmagic/text_format.hpp"

namespace dmagic {

namespace {

void write_certificate(TableRow& row, const MagicCertificate& cert, const TableOptions& options) {
  if (!options.certificate_dir) return;
  const std::string stem = "kmokn_m" + std::to_string(row.m) + "_n" + std::to_string(row.n);
  row.graph_path = *options.certificate_dir / (stem + ".graph");
  row.certificate_path = *options.certificate_dir / (stem + ".cert");
  write_file_atomic(*row.graph_path, format_graph(cert.graph));
  write_file_atomic(*row.certificate_path, format_certificate(cert));
}

}  // namespace

TableRow table_cell(int m, int n, const TableOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TableRow row;
  row.m = m;
  row.n = n;
  row.order = m * n;

  const FamilyDecision d = decide_kmokn(m, n);
  switch (d.status) {
    case FamilyDecision::Status::kMagic:
      row.status = "magic";
      row.mu = d.certificate->mu.value();
      row.method = d.method;
      write_certificate(row, *d.certificate, options);
      break;
    case FamilyDecision::Status::kNotMagic: {
      row.status = "not-magic";
      const UndirectedGraph g = lexicographic(complete(m), empty_graph(n));
      if (theorem1_check(g)) {
        row.method = "theorem1";
      } else if (parity_check(g)) {
        row.method = "parity";
      } else {
        row.method = d.method;
      }
      break;
    }
    case FamilyDecision::Status::kSearchRequired: {
      if (row.order > options.search_max_order || row.order > kMaxSearchOrder) {
        row.status = "unknown";
        break;
      }
      const UndirectedGraph g = lexicographic(complete(m), empty_graph(n));
      SearchConfig cfg = options.search;
      cfg.threads = 1;
      const SearchOutcome outcome = decide_existence(g, cfg);
      row.method = "search";
      row.nodes = outcome.stats.nodes;
      if (outcome.verdict == Verdict::kWitness) {
        row.status = "magic";
        row.mu = outcome.witness->mu.value();
        write_certificate(row, *outcome.witness, options);
      } else {
        row.status = outcome.verdict == Verdict::kExhaustedNoSolution ? "not-magic" : "unknown";
      }
      break;
    }
  }
  row.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<TableRow> build_table(const TableOptions& options) {
  if (options.max_m < 1 || options.max_n < 1) throw UsageError("table bounds must be at least 1");
  std::vector<std::pair<int, int>> cells;
  for (int m = 1; m <= options.max_m; ++m)
    for (int n = 1; n <= options.max_n; ++n) cells.emplace_back(m, n);

  std::vector<TableRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = table_cell(cells[i].first, cells[i].second, options);
  };
  const auto thread_count = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, options.threads)), cells.size());
  if (thread_count <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string format_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << kTableHeader << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.m << ',' << r.n << ',' << r.order << ',' << r.status << ',';
    if (r.mu) out << *r.mu;
    out << ',' << r.method << ',';
    if (r.nodes) out << *r.nodes;
    out << ',' << r.time_ms << '\n';
  }
  return out.str();
}

}  // namespace dmagic
