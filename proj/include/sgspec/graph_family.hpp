#pragma once

#include <cstddef>
#include <vector>

#include "sgspec/matrix.hpp"

namespace sgspec::family {

/// One member of the family: k cliques of order h sharing a common
/// (h - p)-clique, each with p private vertices. The order n is derived.
class FamilyParams {
 public:
  int h() const { return h_; }
  int p() const { return p_; }
  int k() const { return k_; }
  int n() const { return h_ + (k_ - 1) * p_; }
  /// Number of vertex-disjoint private blocks, (n - h) / p.
  int private_blocks() const { return k_ - 1; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  friend FamilyParams make_params(int h, int p, int k);
  FamilyParams(int h, int p, int k) : h_(h), p_(p), k_(k) {}
  int h_;
  int p_;
  int k_;
};

/// Throws InvalidParams naming the violated bound.
FamilyParams make_params(int h, int p, int k);

/// Vertex position in the block layout: the k - 1 private blocks of size p
/// come first, followed by the K_h hub block. Hub slots 1..h-p form the
/// common clique, slots h-p+1..h are the k-th clique's private vertices.
struct VertexLabel {
  enum class Kind { private_vertex, hub };
  Kind kind;
  int clique = 0;  // 1..k-1 for private vertices
  int slot = 0;    // 1..p for private vertices, 1..h for hub vertices

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

VertexLabel label_of(const FamilyParams& params, int index);
int index_of(const FamilyParams& params, const VertexLabel& label);

/// 0/1 adjacency of the negative-edge graph G in block layout.
IntMatrix adjacency_matrix(const FamilyParams& params);

/// S = J - I - 2A, the signed complete graph's adjacency.
IntMatrix seidel_matrix(const FamilyParams& params);

/// X' = [-J_{(k-1)p, h-p}  J_{(k-1)p, p}]. Throws DegenerateFamily for k = 1.
IntMatrix x_prime_matrix(const FamilyParams& params);

/// Common row sum of X', 2p - h.
int x_prime_row_sum(const FamilyParams& params);

struct SignedEdge {
  int u;  // u < v
  int v;
  int sign;  // -1 for edges of G, +1 otherwise

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// All n(n-1)/2 edges of the signed complete graph, ordered by (u, v).
std::vector<SignedEdge> signed_edges(const FamilyParams& params);

}  // namespace sgspec::family
