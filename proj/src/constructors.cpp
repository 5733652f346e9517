#include "dmagic/constructors.hpp"

#include "dmagic/errors.hpp"
#include "dmagic/zero_sum.hpp"

namespace dmagic {

namespace {

UndirectedGraph kmokn_graph(int m, int n) { return lexicographic(complete(m), empty_graph(n)); }

}  // namespace

MagicCertificate construct_complete(int n) {
  if (n < 1) throw UsageError("complete graph needs n >= 1");
  if (n % 2 == 0) throw NotMagicError("even complete graph");
  const UndirectedGraph g = complete(n);
  Orientation o(g);
  const int reach = (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= reach; ++d) o.orient(g, i, (i + d) % n);
  return certify(g, o, Labeling::identity(n));
}

MagicCertificate construct_case1(int m, int n) {
  const Case1SetSystem sets = case1_sets(m, n);
  const ProductIndexing idx{m, n};
  const UndirectedGraph g = kmokn_graph(m, n);

  // sets[0][0] = mn/2 lands on v^1_1 and sets[q-1][0] = mn/4 on v^q_1.
  std::vector<std::int64_t> labels(static_cast<std::size_t>(m) * n);
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= n; ++i) labels[idx.vertex(k, i)] = sets.sets[k - 1][i - 1];

  const int q = sets.special_index;
  Orientation o(g);
  for (int k = 1; k <= m; ++k) {
    for (int l = k + 1; l <= m; ++l) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          o.orient(g, idx.vertex(k, i), idx.vertex(l, j));
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    o.orient(g, idx.vertex(1, i), idx.vertex(q, 1));
    for (int j = 2; j <= n; ++j) o.orient(g, idx.vertex(q, j), idx.vertex(1, i));
  }
  return certify(g, o, Labeling(static_cast<std::int64_t>(m) * n, std::move(labels)));
}

MagicCertificate construct_case2(int m, int n) {
  if (m < 3 || m % 2 == 0) throw UsageError("case 2 needs odd m >= 3");
  if (n < 2 || n % 4 != 2) throw UsageError("case 2 needs n = 2 (mod 4)");
  const ProductIndexing idx{m, n};
  const UndirectedGraph g = kmokn_graph(m, n);

  std::vector<std::int64_t> labels(static_cast<std::size_t>(m) * n);
  for (int k = 1; k <= m; ++k)
    for (int i = 1; i <= n; ++i) labels[idx.vertex(k, i)] = (i - 1) + static_cast<std::int64_t>(k - 1) * n;

  // Every part precedes the (m-1)/2 parts that follow it cyclically; set
  // indices stay in 1..m.
  Orientation o(g);
  const int reach = (m - 1) / 2;
  for (int k = 1; k <= m; ++k) {
    for (int d = 1; d <= reach; ++d) {
      const int l = (k - 1 - d + m) % m + 1;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) o.orient(g, idx.vertex(l, j), idx.vertex(k, i));
    }
  }
  return certify(g, o, Labeling(static_cast<std::int64_t>(m) * n, std::move(labels)));
}

Case2ClosedForms case2_closed_forms(int m, int n) {
  const std::int64_t order = static_cast<std::int64_t>(m) * n;
  const std::int64_t magnitude = static_cast<std::int64_t>(n) * n * ((static_cast<std::int64_t>(m) * m - 1) / 4);
  return {reduce(-magnitude, order), reduce(magnitude, order)};
}

FamilyDecision decide_kmokn(int m, int n) {
  if (m < 1 || n < 1) throw UsageError("m and n must be at least 1");
  FamilyDecision d{m, n, FamilyDecision::Status::kSearchRequired, "search", std::nullopt};
  auto magic = [&](std::string method, MagicCertificate cert) {
    d.status = FamilyDecision::Status::kMagic;
    d.method = std::move(method);
    d.certificate = std::move(cert);
    return d;
  };
  auto not_magic = [&](std::string method) {
    d.status = FamilyDecision::Status::kNotMagic;
    d.method = std::move(method);
    return d;
  };

  if (n == 1) {
    if (m % 2 == 0) return not_magic("theorem2");
    return magic("complete", construct_complete(m));
  }
  if (m == 1) {
    // n isolated vertices: every weight is an empty sum.
    const UndirectedGraph g = empty_graph(n);
    return magic("edgeless", certify(g, Orientation(g), Labeling::identity(n)));
  }
  if (n % 2 == 1 && m % 4 == 2) return not_magic("theorem1");
  const std::int64_t order = static_cast<std::int64_t>(m) * n;
  if (order % 2 == 1) return d;
  if (order % 4 == 0) return magic("case1", construct_case1(m, n));
  // Remaining: m odd, n = 2 (mod 4).
  return magic("case2", construct_case2(m, n));
}

std::string to_string(FamilyDecision::Status status) {
  switch (status) {
    case FamilyDecision::Status::kMagic:
      return "magic";
    case FamilyDecision::Status::kNotMagic:
      return "not-magic";
    case FamilyDecision::Status::kSearchRequired:
      return "unknown";
  }
  return "unknown";
}

}  // namespace dmagic
