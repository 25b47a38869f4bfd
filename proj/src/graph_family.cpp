#include "sgspec/graph_family.hpp"

#include <string>

namespace sgspec::family {

FamilyParams make_params(int h, int p, int k) {
  if (h < 2) throw InvalidParams("h must satisfy h >= 2 (got " + std::to_string(h) + ")");
  if (p < 1 || p > h) throw InvalidParams("p must satisfy 1 <= p <= h (got p=" + std::to_string(p) +
                                          ", h=" + std::to_string(h) + ")");
  if (k < 1) throw InvalidParams("k must satisfy k >= 1 (got " + std::to_string(k) + ")");
  return FamilyParams(h, p, k);
}

VertexLabel label_of(const FamilyParams& params, int index) {
  if (index < 0 || index >= params.n()) throw InvalidParams("vertex index out of range");
  const int private_count = params.private_blocks() * params.p();
  if (index < private_count) {
    return {VertexLabel::Kind::private_vertex, index / params.p() + 1, index % params.p() + 1};
  }
  return {VertexLabel::Kind::hub, 0, index - private_count + 1};
}

int index_of(const FamilyParams& params, const VertexLabel& label) {
  if (label.kind == VertexLabel::Kind::private_vertex) {
    if (label.clique < 1 || label.clique > params.private_blocks() || label.slot < 1 ||
        label.slot > params.p()) {
      throw InvalidParams("private vertex label out of range");
    }
    return (label.clique - 1) * params.p() + (label.slot - 1);
  }
  if (label.slot < 1 || label.slot > params.h()) throw InvalidParams("hub label out of range");
  return params.private_blocks() * params.p() + label.slot - 1;
}

IntMatrix adjacency_matrix(const FamilyParams& params) {
  const auto n = static_cast<std::size_t>(params.n());
  const auto p = static_cast<std::size_t>(params.p());
  const auto h = static_cast<std::size_t>(params.h());
  const std::size_t hub0 = n - h;
  const std::size_t common = h - p;
  IntMatrix a(n, n);
  auto connect = [&a](std::size_t u, std::size_t v) {
    if (u != v) a(u, v) = a(v, u) = 1;
  };
  // K_h block.
  for (std::size_t u = hub0; u < n; ++u)
    for (std::size_t v = hub0; v < n; ++v) connect(u, v);
  for (std::size_t blk = 0; blk < static_cast<std::size_t>(params.private_blocks()); ++blk) {
    const std::size_t r0 = blk * p;
    // K_p block on the diagonal.
    for (std::size_t u = r0; u < r0 + p; ++u)
      for (std::size_t v = r0; v < r0 + p; ++v) connect(u, v);
    // X_p coupling: every private vertex sees the whole common clique.
    for (std::size_t u = r0; u < r0 + p; ++u)
      for (std::size_t v = hub0; v < hub0 + common; ++v) connect(u, v);
  }
  return a;
}

IntMatrix seidel_matrix(const FamilyParams& params) {
  const auto n = static_cast<std::size_t>(params.n());
  IntMatrix s = IntMatrix::ones(n) - IntMatrix::identity(n) - Int(2) * adjacency_matrix(params);
  return s;
}

IntMatrix x_prime_matrix(const FamilyParams& params) {
  if (params.k() < 2) throw DegenerateFamily("k = 1: the family has no private blocks");
  const auto rows = static_cast<std::size_t>(params.private_blocks() * params.p());
  const auto h = static_cast<std::size_t>(params.h());
  const auto common = static_cast<std::size_t>(params.h() - params.p());
  IntMatrix x(rows, h, Int(1));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < common; ++j) x(i, j) = -1;
  return x;
}

int x_prime_row_sum(const FamilyParams& params) { return 2 * params.p() - params.h(); }

std::vector<SignedEdge> signed_edges(const FamilyParams& params) {
  const IntMatrix a = adjacency_matrix(params);
  const int n = params.n();
  std::vector<SignedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back({u, v, a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) == 1 ? -1 : 1});
  return edges;
}

}  // namespace sgspec::family
