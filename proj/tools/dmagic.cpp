// dmagic: construct, verify, decide and search orientable Z_n-distance magic
// labelings.
//
// Exit codes: 0 success / witness / certificate, 1 violation or proven
// nonexistence, 2 inconclusive, 3 usage, parse or I/O error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dmagic/constructors.hpp"
#include "dmagic/errors.hpp"
#include "dmagic/obstructions.hpp"
#include "dmagic/search.hpp"
#include "dmagic/table.hpp"
#include "dmagic/text_format.hpp"
#include "dmagic/zero_sum.hpp"

namespace {

using namespace dmagic;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(path, content);
  }
}

UndirectedGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

struct ConstructArgs {
  std::string family = "kmokn";
  int m = 0;
  int n = 0;
  std::string graph_out;
  std::string cert_out;
};

int cmd_construct(const ConstructArgs& a) {
  MagicCertificate cert;
  if (a.family == "complete") {
    cert = construct_complete(a.n);
  } else if (a.family == "kmokn") {
    const FamilyDecision d = decide_kmokn(a.m, a.n);
    if (d.status == FamilyDecision::Status::kNotMagic) {
      std::cout << "not-magic " << d.method << '\n';
      return kExitNegative;
    }
    if (d.status == FamilyDecision::Status::kSearchRequired) {
      std::cout << "unknown search-required\n";
      return kExitInconclusive;
    }
    cert = *d.certificate;
  } else {
    throw UsageError("unknown family '" + a.family + "' (expected complete or kmokn)");
  }
  emit(a.graph_out, format_graph(cert.graph));
  emit(a.cert_out, format_certificate(cert));
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  const UndirectedGraph g = load_graph(graph_path);
  const ParsedCertificate parsed = parse_certificate(read_file(cert_path), g);
  std::variant<MagicCertificate, Violation> result;
  try {
    result = verify(g, parsed.orientation, parsed.labeling);
  } catch (const NotALabeling& e) {
    std::cout << "invalid " << e.what() << '\n';
    return kExitNegative;
  }
  if (const auto* v = std::get_if<Violation>(&result)) {
    std::cout << "violation vertex " << v->vertex << " weight " << v->weight.value() << " expected "
              << v->expected.value() << '\n';
    return kExitNegative;
  }
  const auto& cert = std::get<MagicCertificate>(result);
  if (cert.mu.value() != parsed.claimed_mu) {
    std::cout << "violation mu " << cert.mu.value() << " but certificate claims " << parsed.claimed_mu << '\n';
    return kExitNegative;
  }
  std::cout << "ok mu=" << cert.mu.value() << '\n';
  return kExitOk;
}

int cmd_decide(const std::string& family, int m, int n) {
  if (family != "kmokn") throw UsageError("decide supports --family kmokn");
  const FamilyDecision d = decide_kmokn(m, n);
  switch (d.status) {
    case FamilyDecision::Status::kMagic:
      std::cout << "magic " << d.method << " mu=" << d.certificate->mu.value() << '\n';
      break;
    case FamilyDecision::Status::kNotMagic:
      std::cout << "not-magic " << d.method << '\n';
      break;
    case FamilyDecision::Status::kSearchRequired:
      std::cout << "unknown search-required\n";
      break;
  }
  return kExitOk;
}

struct SearchArgs {
  std::string graph;
  std::string cert_out;
  std::uint64_t nodes = 0;
  double seconds = 0;
  int threads = 1;
  bool no_reduce = false;
  bool no_parity = false;
  bool unit_scaling = false;
  std::uint64_t seed = 0;
};

int cmd_search(const SearchArgs& a) {
  const UndirectedGraph g = load_graph(a.graph);
  SearchConfig cfg;
  if (a.nodes > 0) cfg.node_budget = a.nodes;
  if (a.seconds > 0) cfg.seconds = a.seconds;
  cfg.threads = a.threads;
  cfg.seed = a.seed;
  cfg.unit_scaling = a.unit_scaling;
  cfg.parity_pruning = !a.no_parity;
  if (a.no_reduce) cfg = cfg.unreduced();
  const SearchOutcome out = decide_existence(g, cfg);
  std::cerr << to_string(out.verdict) << " nodes=" << out.stats.nodes << " weight_prunes=" << out.stats.weight_prunes
            << " range_prunes=" << out.stats.range_prunes << " parity_prunes=" << out.stats.parity_prunes
            << " jobs=" << out.stats.jobs << " elapsed=" << out.stats.elapsed_seconds << "s\n";
  switch (out.verdict) {
    case Verdict::kWitness:
      emit(a.cert_out, format_certificate(*out.witness));
      return kExitOk;
    case Verdict::kExhaustedNoSolution:
      std::cout << "exhausted-no-solution\n";
      return kExitNegative;
    case Verdict::kInconclusive:
      std::cout << "inconclusive\n";
      return kExitInconclusive;
  }
  return kExitError;
}

int cmd_obstruct(const std::string& graph_path) {
  const UndirectedGraph g = load_graph(graph_path);
  auto cert = theorem1_check(g);
  if (!cert) cert = parity_check(g);
  if (!cert) {
    std::cout << "inconclusive\n";
    return kExitInconclusive;
  }
  std::cout << format_nonexistence(*cert);
  return kExitOk;
}

int cmd_partition(std::int64_t n, const std::vector<int>& sizes) {
  const ZeroSumPartition p = zero_sum_partition(n, sizes);
  for (const auto& part : p.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) std::cout << (i ? " " : "") << part[i];
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_table(TableOptions options, const std::string& csv_out) {
  if (options.certificate_dir) std::filesystem::create_directories(*options.certificate_dir);
  emit(csv_out, format_csv(build_table(options)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orientable Z_n-distance magic labelings: construct, verify, decide, search"};
  app.set_version_flag("--version", std::string("dmagic ") + DMAGIC_VERSION);
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a verified labeling for a family instance");
  construct->add_option("--family", construct_args.family, "complete or kmokn")->required();
  construct->add_option("--m", construct_args.m, "Number of parts (kmokn)");
  construct->add_option("--n", construct_args.n, "Order (complete) or part size (kmokn)")->required();
  construct->add_option("--graph", construct_args.graph_out, "Graph output file (stdout if omitted)");
  construct->add_option("--cert", construct_args.cert_out, "Certificate output file (stdout if omitted)");

  std::string verify_graph, verify_cert;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("--graph", verify_graph)->required();
  verify_cmd->add_option("--cert", verify_cert)->required();

  std::string decide_family = "kmokn";
  int decide_m = 0, decide_n = 0;
  auto* decide = app.add_subcommand("decide", "Decide K_m o complement(K_n)");
  decide->add_option("--family", decide_family)->required();
  decide->add_option("--m", decide_m)->required();
  decide->add_option("--n", decide_n)->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exhaustive search for a labeling");
  search->add_option("--graph", search_args.graph)->required();
  search->add_option("--cert", search_args.cert_out, "Witness output file (stdout if omitted)");
  search->add_option("--nodes", search_args.nodes, "Node budget");
  search->add_option("--seconds", search_args.seconds, "Wall-clock budget");
  search->add_option("--threads", search_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--no-reduce", search_args.no_reduce, "Disable symmetry reductions");
  search->add_flag("--no-parity", search_args.no_parity, "Disable parity pruning");
  search->add_flag("--unit-scaling", search_args.unit_scaling, "Enable the unit-scaling reduction");
  search->add_option("--seed", search_args.seed, "Tie-breaking seed");

  std::string obstruct_graph;
  auto* obstruct = app.add_subcommand("obstruct", "Look for an analytic nonexistence certificate");
  obstruct->add_option("--graph", obstruct_graph)->required();

  std::int64_t partition_n = 0;
  std::vector<int> partition_sizes;
  auto* partition = app.add_subcommand("partition", "Zero-sum partition of {+-1, ..., +-N/2}");
  partition->add_option("--N", partition_n)->required();
  partition->add_option("--sizes", partition_sizes)->required()->delimiter(',');

  TableOptions table_options;
  std::string table_csv, table_dir;
  std::uint64_t table_seed = 0;
  auto* table = app.add_subcommand("table", "CSV status table for K_m o complement(K_n)");
  table->add_option("--max-m", table_options.max_m)->required();
  table->add_option("--max-n", table_options.max_n)->required();
  table->add_option("--search-max-order", table_options.search_max_order, "Largest order resolved by search");
  table->add_option("--threads", table_options.threads)->check(CLI::PositiveNumber);
  table->add_option("--out-dir", table_dir, "Directory for certificates of magic cells");
  table->add_option("--csv", table_csv, "CSV output file (stdout if omitted)");
  table->add_option("--seed", table_seed, "Tie-breaking seed for searched cells");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return cmd_construct(construct_args);
    if (*verify_cmd) return cmd_verify(verify_graph, verify_cert);
    if (*decide) return cmd_decide(decide_family, decide_m, decide_n);
    if (*search) return cmd_search(search_args);
    if (*obstruct) return cmd_obstruct(obstruct_graph);
    if (*partition) return cmd_partition(partition_n, partition_sizes);
    if (*table) {
      if (!table_dir.empty()) table_options.certificate_dir = table_dir;
      table_options.search.seed = table_seed;
      return cmd_table(table_options, table_csv);
    }
  } catch (const NotMagicError& e) {
    std::cout << "not-magic " << e.what() << '\n';
    return kExitNegative;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
