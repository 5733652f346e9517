#include "dmagic/text_format.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>
#include <unistd.h>
#include <vector>

#include "dmagic/errors.hpp"

namespace dmagic {

namespace {

// One non-comment line split into whitespace-separated tokens.
struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

struct ScannedText {
  std::vector<Line> lines;
  std::vector<std::pair<int, std::string>> comments;
};

ScannedText scan(std::string_view text) {
  ScannedText out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') {
      out.comments.emplace_back(number, raw.substr(first));
      continue;
    }
    Line line{number, {}};
    std::istringstream words(raw);
    for (std::string w; words >> w;) line.tokens.push_back(w);
    out.lines.push_back(std::move(line));
  }
  return out;
}

std::int64_t parse_int(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) throw ParseError(line.number, "missing field");
  const std::string& tok = line.tokens[index];
  std::size_t consumed = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &consumed);
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
  if (consumed != tok.size()) throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  return value;
}

void expect_shape(const Line& line, std::string_view keyword, std::size_t fields) {
  if (line.tokens.empty() || line.tokens[0] != keyword) {
    throw ParseError(line.number, "expected '" + std::string(keyword) + "'");
  }
  if (line.tokens.size() != fields + 1) {
    throw ParseError(line.number, "'" + std::string(keyword) + "' takes " + std::to_string(fields) + " fields");
  }
}

}  // namespace

std::string format_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

UndirectedGraph parse_graph(std::string_view text) {
  const auto scanned = scan(text);
  if (scanned.lines.empty()) throw ParseError(1, "missing 'graph' header");
  const Line& header = scanned.lines.front();
  expect_shape(header, "graph", 2);
  const auto n = parse_int(header, 1);
  const auto m = parse_int(header, 2);
  if (n < 0 || m < 0) throw ParseError(header.number, "negative count");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < scanned.lines.size(); ++i) {
    const Line& line = scanned.lines[i];
    expect_shape(line, "e", 2);
    const auto u = parse_int(line, 1);
    const auto v = parse_int(line, 2);
    if (u < 0 || v >= n || u >= v) throw ParseError(line.number, "edge must satisfy 0 <= u < v < vertex_count");
    const Edge e{static_cast<int>(u), static_cast<int>(v)};
    for (const auto& prev : edges)
      if (prev == e) throw ParseError(line.number, "duplicate edge");
    edges.push_back(e);
  }
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(header.number, "header announces " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  }
  return UndirectedGraph(static_cast<int>(n), std::move(edges));
}

std::string format_certificate(const MagicCertificate& cert) {
  std::ostringstream out;
  out << "certificate " << cert.labeling.modulus() << '\n';
  out << "# weight convention: " << kWeightConvention << '\n';
  out << "mu " << cert.mu.value() << '\n';
  for (int v = 0; v < cert.graph.vertex_count(); ++v) out << "l " << v << ' ' << cert.labeling.values()[v] << '\n';
  for (std::size_t e = 0; e < cert.graph.edge_count(); ++e) {
    auto [tail, head] = cert.orientation.arc(cert.graph, e);
    out << "a " << tail << ' ' << head << '\n';
  }
  return out.str();
}

ParsedCertificate parse_certificate(std::string_view text, const UndirectedGraph& g) {
  const auto scanned = scan(text);
  const std::string convention_tag = "# weight convention:";
  for (const auto& [number, comment] : scanned.comments) {
    if (comment.rfind(convention_tag, 0) == 0) {
      std::string value = comment.substr(convention_tag.size());
      value.erase(0, value.find_first_not_of(" \t"));
      if (value != kWeightConvention) throw ParseError(number, "unsupported weight convention '" + value + "'");
    }
  }
  if (scanned.lines.size() < 2) throw ParseError(1, "missing 'certificate' or 'mu' line");
  const Line& header = scanned.lines[0];
  expect_shape(header, "certificate", 1);
  const auto modulus = parse_int(header, 1);
  if (modulus != g.vertex_count()) {
    throw ParseError(header.number, "certificate order " + std::to_string(modulus) + " differs from graph order " +
                                        std::to_string(g.vertex_count()));
  }
  const Line& mu_line = scanned.lines[1];
  expect_shape(mu_line, "mu", 1);
  const auto mu = parse_int(mu_line, 1);
  if (mu < 0 || mu >= modulus) throw ParseError(mu_line.number, "mu must be a residue");

  std::vector<std::optional<std::int64_t>> labels(static_cast<std::size_t>(modulus));
  std::vector<bool> seen_edge(g.edge_count(), false);
  Orientation orientation(g);
  for (std::size_t i = 2; i < scanned.lines.size(); ++i) {
    const Line& line = scanned.lines[i];
    if (!line.tokens.empty() && line.tokens[0] == "l") {
      expect_shape(line, "l", 2);
      const auto v = parse_int(line, 1);
      const auto label = parse_int(line, 2);
      if (v < 0 || v >= modulus) throw ParseError(line.number, "vertex out of range");
      if (label < 0 || label >= modulus) throw ParseError(line.number, "label must be a residue");
      if (labels[static_cast<std::size_t>(v)]) throw ParseError(line.number, "vertex labelled twice");
      labels[static_cast<std::size_t>(v)] = label;
    } else {
      expect_shape(line, "a", 2);
      const auto tail = parse_int(line, 1);
      const auto head = parse_int(line, 2);
      if (tail < 0 || head < 0 || tail >= modulus || head >= modulus) {
        throw ParseError(line.number, "arc endpoint out of range");
      }
      auto idx = g.edge_index(static_cast<int>(tail), static_cast<int>(head));
      if (!idx) throw ParseError(line.number, "arc is not an edge of the graph");
      if (seen_edge[*idx]) throw ParseError(line.number, "edge oriented twice");
      seen_edge[*idx] = true;
      orientation.orient(g, static_cast<int>(tail), static_cast<int>(head));
    }
  }
  const int last = scanned.lines.back().number;
  std::vector<std::int64_t> values;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) throw ParseError(last, "vertex " + std::to_string(v) + " has no label");
    values.push_back(*labels[v]);
  }
  for (std::size_t e = 0; e < seen_edge.size(); ++e) {
    if (!seen_edge[e]) throw ParseError(last, "edge " + std::to_string(e) + " has no arc");
  }
  return ParsedCertificate{modulus, mu, Labeling(modulus, std::move(values)), std::move(orientation)};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  // Symlinks and special files are written through; a rename would replace them.
  std::error_code status_ec;
  const auto st = std::filesystem::symlink_status(path, status_ec);
  if (std::filesystem::exists(st) && !std::filesystem::is_regular_file(st)) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
    return;
  }
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace dmagic
