#pragma once

/// Text formats for graphs and certificates.
///
/// Graph:
///   graph <vertex_count> <edge_count>
///   e <u> <v>            one per edge, u < v, canonical order
///
/// Certificate:
///   certificate <N>
///   # weight convention: in-minus-out
///   mu <value>
///   l <v> <label>        one per vertex, ascending v
///   a <tail> <head>      one per edge, canonical edge order
///
/// Lines starting with '#' are comments. Parse failures throw ParseError
/// naming the offending line.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dmagic/graph.hpp"
#include "dmagic/verifier.hpp"

namespace dmagic {

std::string format_graph(const UndirectedGraph& g);
UndirectedGraph parse_graph(std::string_view text);

/// A certificate as read from disk; nothing here has been verified.
struct ParsedCertificate {
  std::int64_t modulus = 0;
  std::int64_t claimed_mu = 0;
  Labeling labeling;
  Orientation orientation;
};

std::string format_certificate(const MagicCertificate& cert);
/// Arcs are resolved against `g`; a missing or repeated arc is a ParseError.
ParsedCertificate parse_certificate(std::string_view text, const UndirectedGraph& g);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace dmagic
