#include "dmagic/verifier.hpp"

#include <string>

#include "dmagic/errors.hpp"

namespace dmagic {

namespace {

void check_shapes(const UndirectedGraph& g, const Orientation& o, const Labeling& l) {
  if (o.size() != g.edge_count()) throw UsageError("orientation does not match graph");
  if (static_cast<int>(l.size()) != g.vertex_count()) throw UsageError("labeling size differs from graph order");
  if (l.modulus() != g.vertex_count()) throw UsageError("labeling modulus differs from graph order");
}

}  // namespace

Labeling::Labeling(std::int64_t modulus, std::vector<std::int64_t> labels)
    : modulus_(modulus), labels_(std::move(labels)) {
  if (modulus < 1) throw UsageError("labeling modulus must be positive");
  for (auto& x : labels_) x = reduce(x, modulus_);
}

Labeling Labeling::identity(std::int64_t modulus) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(modulus));
  for (std::int64_t v = 0; v < modulus; ++v) labels[static_cast<std::size_t>(v)] = v;
  return Labeling(modulus, std::move(labels));
}

bool Labeling::is_bijective() const {
  if (static_cast<std::int64_t>(labels_.size()) != modulus_) return false;
  std::vector<bool> seen(labels_.size(), false);
  for (auto x : labels_) {
    if (seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Labeling Labeling::scaled(std::int64_t unit) const {
  std::vector<std::int64_t> out(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) out[v] = GroupElement(labels_[v], modulus_).scaled(unit).value();
  return Labeling(modulus_, std::move(out));
}

std::vector<GroupElement> weights(const UndirectedGraph& g, const Orientation& o, const Labeling& l) {
  check_shapes(g, o, l);
  const std::int64_t n = l.modulus();
  std::vector<std::int64_t> w(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [tail, head] = o.arc(g, e);
    w[head] = reduce(w[head] + l.values()[tail], n);
    w[tail] = reduce(w[tail] - l.values()[head], n);
  }
  std::vector<GroupElement> out;
  out.reserve(w.size());
  for (auto x : w) out.emplace_back(x, n);
  return out;
}

GroupElement weight(const UndirectedGraph& g, const Orientation& o, const Labeling& l, int vertex) {
  check_shapes(g, o, l);
  if (vertex < 0 || vertex >= g.vertex_count()) throw UsageError("vertex out of range");
  GroupElement w = GroupElement::zero(l.modulus());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [tail, head] = o.arc(g, e);
    if (head == vertex) w = w + l[tail];
    if (tail == vertex) w = w - l[head];
  }
  return w;
}

std::variant<MagicCertificate, Violation> verify(const UndirectedGraph& g, const Orientation& o,
                                                 const Labeling& l) {
  check_shapes(g, o, l);
  if (g.vertex_count() < 1) throw UsageError("cannot verify an empty graph");
  if (!l.is_bijective()) throw NotALabeling("not a labeling: labels are not a bijection onto Z_" +
                                            std::to_string(l.modulus()));
  const auto w = weights(g, o, l);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (w[v] != w[0]) return Violation{v, w[v], w[0]};
  }
  return MagicCertificate{g, o, l, w[0]};
}

MagicCertificate certify(const UndirectedGraph& g, const Orientation& o, const Labeling& l) {
  auto result = verify(g, o, l);
  if (auto* v = std::get_if<Violation>(&result)) {
    throw std::logic_error("construction failed verification at vertex " + std::to_string(v->vertex));
  }
  return std::get<MagicCertificate>(std::move(result));
}

}  // namespace dmagic
