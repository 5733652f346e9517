#pragma once

/// Status table for the K_m o complement(K_n) family.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dmagic/search.hpp"

namespace dmagic {

struct TableOptions {
  int max_m = 1;
  int max_n = 1;
  /// Cells left open by the constructions are searched up to this order.
  int search_max_order = 9;
  SearchConfig search;
  /// Where magic cells write `<stem>.graph` and `<stem>.cert`; none if unset.
  std::optional<std::filesystem::path> certificate_dir;
  int threads = 1;
};

struct TableRow {
  std::string family = "kmokn";
  int m = 0;
  int n = 0;
  int order = 0;
  std::string status;  // magic / not-magic / unknown
  std::optional<std::int64_t> mu;
  std::string method;
  std::optional<std::uint64_t> nodes;
  std::int64_t time_ms = 0;
  std::optional<std::filesystem::path> graph_path;
  std::optional<std::filesystem::path> certificate_path;
};

inline constexpr const char* kTableHeader = "family,m,n,order,status,mu,method,nodes,time_ms";

TableRow table_cell(int m, int n, const TableOptions& options);
/// Rows in (m, n) order regardless of how cells were scheduled.
std::vector<TableRow> build_table(const TableOptions& options);
std::string format_csv(const std::vector<TableRow>& rows);

}  // namespace dmagic
