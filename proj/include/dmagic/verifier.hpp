#pragma once

/// Ground-truth evaluation of orientable Z_N-distance magic labelings.
///
/// Sign convention: every arc u->v adds l(u) to w(v) and subtracts l(v) from
/// w(u). In other words w(x) is the label sum of in-neighbours minus the label
/// sum of out-neighbours.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "dmagic/graph.hpp"
#include "dmagic/group.hpp"

namespace dmagic {

inline constexpr std::string_view kWeightConvention = "in-minus-out";

/// Vertex -> Z_N. Values are reduced on construction; bijectivity is checked
/// by verify(), not here, so that malformed inputs can be reported.
class Labeling {
 public:
  Labeling() = default;
  Labeling(std::int64_t modulus, std::vector<std::int64_t> labels);

  /// l(v) = v.
  static Labeling identity(std::int64_t modulus);

  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return labels_.size(); }
  GroupElement operator[](int vertex) const { return GroupElement(labels_.at(vertex), modulus_); }
  std::span<const std::int64_t> values() const noexcept { return labels_; }

  bool is_bijective() const;
  /// Every label multiplied by `unit`.
  Labeling scaled(std::int64_t unit) const;

  bool operator==(const Labeling&) const = default;

 private:
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> labels_;
};

struct MagicCertificate {
  UndirectedGraph graph;
  Orientation orientation;
  Labeling labeling;
  GroupElement mu{0, 1};
};

/// Weight of `vertex` differs from the weight of vertex 0.
struct Violation {
  int vertex = 0;
  GroupElement weight{0, 1};
  GroupElement expected{0, 1};
};

/// Labels are not a bijection onto Z_N.
class NotALabeling : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupElement weight(const UndirectedGraph& g, const Orientation& o, const Labeling& l, int vertex);
std::vector<GroupElement> weights(const UndirectedGraph& g, const Orientation& o, const Labeling& l);

/// Certificate with mu = w(0) when all weights agree, else the lowest-indexed
/// vertex whose weight differs. Throws NotALabeling before evaluating any
/// weight, and UsageError on size mismatches or an empty graph.
std::variant<MagicCertificate, Violation> verify(const UndirectedGraph& g, const Orientation& o,
                                                 const Labeling& l);

/// verify() that throws std::logic_error on a violation. Constructors use it
/// so they never hand out an unverified certificate.
MagicCertificate certify(const UndirectedGraph& g, const Orientation& o, const Labeling& l);

}  // namespace dmagic
