#include <doctest.h>

#include <set>
#include <utility>

#include "sgspec/graph_family.hpp"

using namespace sgspec;
using namespace sgspec::family;

namespace {

// Edge set built straight from the clique description, independent of the
// block-layout construction: clique j < k holds its private block plus the
// common hub slots, clique k is the whole hub block.
std::set<std::pair<int, int>> clique_union_edges(int h, int p, int k) {
  const auto fp = make_params(h, p, k);
  std::set<std::pair<int, int>> edges;
  auto add_clique = [&edges](const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edges.insert(std::minmax(vs[i], vs[j]));
  };
  std::vector<int> common;
  for (int slot = 1; slot <= h - p; ++slot) common.push_back(index_of(fp, {VertexLabel::Kind::hub, 0, slot}));
  for (int j = 1; j < k; ++j) {
    std::vector<int> clique = common;
    for (int i = 1; i <= p; ++i) clique.push_back(index_of(fp, {VertexLabel::Kind::private_vertex, j, i}));
    add_clique(clique);
  }
  std::vector<int> hub;
  for (int slot = 1; slot <= h; ++slot) hub.push_back(index_of(fp, {VertexLabel::Kind::hub, 0, slot}));
  add_clique(hub);
  return edges;
}

template <class F>
void for_grid(F&& f) {
  for (int h = 2; h <= 6; ++h)
    for (int p = 1; p <= h; ++p)
      for (int k = 1; k <= 5; ++k) f(make_params(h, p, k));
}

}  // namespace

TEST_CASE("make_params derives n and validates bounds") {
  CHECK(make_params(3, 1, 2).n() == 4);
  CHECK(make_params(2, 1, 3).n() == 4);
  CHECK(make_params(2, 2, 1).n() == 2);
  CHECK_THROWS_WITH_AS(make_params(3, 4, 2), doctest::Contains("1 <= p <= h"), InvalidParams);
  CHECK_THROWS_AS(make_params(1, 1, 2), InvalidParams);
  CHECK_THROWS_AS(make_params(3, 0, 2), InvalidParams);
  CHECK_THROWS_AS(make_params(3, 1, 0), InvalidParams);
}

TEST_CASE("vertex labels are a bijection onto [0, n)") {
  for_grid([](const FamilyParams& fp) {
    for (int v = 0; v < fp.n(); ++v) CHECK(index_of(fp, label_of(fp, v)) == v);
  });
  const auto fp = make_params(3, 1, 3);
  CHECK(label_of(fp, 0) == VertexLabel{VertexLabel::Kind::private_vertex, 1, 1});
  CHECK(label_of(fp, 1) == VertexLabel{VertexLabel::Kind::private_vertex, 2, 1});
  CHECK(label_of(fp, 2) == VertexLabel{VertexLabel::Kind::hub, 0, 1});
  CHECK_THROWS_AS(label_of(fp, 5), InvalidParams);
}

TEST_CASE("adjacency examples") {
  // Two triangles sharing an edge: K_4 minus the edge between the private vertices.
  const IntMatrix a = adjacency_matrix(make_params(3, 1, 2));
  CHECK(a == IntMatrix::from_rows({{0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 0}}));

  // Star K_{1,3}: three K_2 sharing one vertex (hub slot 1 = index 2).
  const IntMatrix star = adjacency_matrix(make_params(2, 1, 3));
  CHECK(star == IntMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 1, 0}, {1, 1, 0, 1}, {0, 0, 1, 0}}));

  CHECK(adjacency_matrix(make_params(2, 2, 1)) == IntMatrix::complete_graph(2));
}

TEST_CASE("adjacency is the union of the k cliques") {
  for_grid([](const FamilyParams& fp) {
    const IntMatrix a = adjacency_matrix(fp);
    const auto expected = clique_union_edges(fp.h(), fp.p(), fp.k());
    std::set<std::pair<int, int>> actual;
    for (int u = 0; u < fp.n(); ++u)
      for (int v = u + 1; v < fp.n(); ++v)
        if (a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) == 1) actual.insert({u, v});
    CHECK(actual == expected);
    CHECK(a.is_symmetric());
    // k C(h,2) - (k-1) C(h-p,2) edges.
    const int h = fp.h(), p = fp.p(), k = fp.k();
    CHECK(static_cast<int>(actual.size()) == k * h * (h - 1) / 2 - (k - 1) * (h - p) * (h - p - 1) / 2);
  });
}

TEST_CASE("Seidel matrix examples and structure") {
  const IntMatrix s = seidel_matrix(make_params(3, 1, 2));
  CHECK(s == IntMatrix::from_rows({{0, -1, -1, 1}, {-1, 0, -1, -1}, {-1, -1, 0, -1}, {1, -1, -1, 0}}));
  CHECK(seidel_matrix(make_params(2, 2, 1)) == IntMatrix::from_rows({{0, -1}, {-1, 0}}));

  for_grid([](const FamilyParams& fp) {
    const auto n = static_cast<std::size_t>(fp.n());
    const IntMatrix s = seidel_matrix(fp);
    const IntMatrix a = adjacency_matrix(fp);
    CHECK(s == IntMatrix::ones(n) - IntMatrix::identity(n) - Int(2) * a);
    CHECK(s.is_symmetric());
    CHECK(s.trace() == 0);
    Int sq = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        sq += s(i, j) * s(i, j);
        if (i != j) CHECK((s(i, j) == (a(i, j) == 1 ? -1 : 1)));
      }
    CHECK(sq == Int(fp.n()) * (fp.n() - 1));
  });
}

TEST_CASE("negative degrees") {
  for_grid([](const FamilyParams& fp) {
    const IntMatrix s = seidel_matrix(fp);
    const int n = fp.n();
    for (int v = 0; v < n; ++v) {
      int neg = 0;
      for (int u = 0; u < n; ++u)
        if (s(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) == -1) ++neg;
      const auto lbl = label_of(fp, v);
      const bool common = lbl.kind == VertexLabel::Kind::hub && lbl.slot <= fp.h() - fp.p();
      CHECK(neg == (common ? (fp.h() - fp.p() - 1) + fp.k() * fp.p() : fp.h() - 1));
    }
  });
}

TEST_CASE("X' examples") {
  CHECK(x_prime_matrix(make_params(3, 1, 2)) == IntMatrix::from_rows({{-1, -1, 1}}));
  CHECK(x_prime_matrix(make_params(2, 2, 2)) == IntMatrix::ones(2));
  CHECK(x_prime_matrix(make_params(2, 1, 3)) == IntMatrix::from_rows({{-1, 1}, {-1, 1}}));
  CHECK_THROWS_AS(x_prime_matrix(make_params(2, 1, 1)), DegenerateFamily);
}

TEST_CASE("X' is the coupling block of S and has row sum 2p - h") {
  CHECK(x_prime_row_sum(make_params(3, 1, 2)) == -1);
  CHECK(x_prime_row_sum(make_params(2, 1, 3)) == 0);
  CHECK(x_prime_row_sum(make_params(2, 2, 2)) == 2);
  for_grid([](const FamilyParams& fp) {
    if (fp.k() < 2) return;
    const auto rows = static_cast<std::size_t>(fp.n() - fp.h());
    const auto h = static_cast<std::size_t>(fp.h());
    const IntMatrix x = x_prime_matrix(fp);
    CHECK(x == seidel_matrix(fp).block(0, rows, rows, h));
    const Int rs = x_prime_row_sum(fp);
    CHECK(x * IntMatrix::ones(h) == rs * IntMatrix::ones(rows, h));
    CHECK(IntMatrix::ones(h, h) * x.transpose() == rs * IntMatrix::ones(h, rows));
  });
}

TEST_CASE("signed edge list") {
  const auto edges = signed_edges(make_params(3, 1, 2));
  CHECK(edges.size() == 6);
  int negatives = 0;
  for (const auto& e : edges) {
    CHECK(e.u < e.v);
    if (e.sign < 0) ++negatives;
  }
  CHECK(negatives == 5);
  CHECK(edges.front() == SignedEdge{0, 1, -1});
  CHECK(edges[2] == SignedEdge{0, 3, 1});
}
