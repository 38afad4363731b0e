#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "seshadri/linsys.hpp"  // splitmix64
#include "seshadri/toric.hpp"

using namespace seshadri;

namespace {

LatticePolytope make(int dim, std::vector<std::vector<long>> pts) {
  std::vector<std::vector<Int>> v;
  for (auto& p : pts) {
    std::vector<Int> row;
    for (long c : p) row.emplace_back(c);
    v.push_back(std::move(row));
  }
  return LatticePolytope::from_vertices(dim, std::move(v));
}

// Hexagon of the degree-six del Pezzo surface: the plane cubic polytope
// with all three corners cut at depth one. Every edge has lattice length 1.
LatticePolytope delpezzo6_hexagon() {
  return make(2, {{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}});
}

LatticePolytope scaled_simplex(int dim, long k) {
  std::vector<std::vector<long>> pts(1, std::vector<long>(dim, 0));
  for (int i = 0; i < dim; ++i) {
    std::vector<long> e(dim, 0);
    e[i] = k;
    pts.push_back(e);
  }
  return make(dim, std::move(pts));
}

// Random unimodular affine map: a product of elementary row operations
// plus a translation.
struct UnimodularMap {
  std::vector<std::vector<long>> mat;
  std::vector<long> shift;
};

UnimodularMap random_unimodular(std::uint64_t& state, int dim) {
  UnimodularMap u;
  u.mat.assign(dim, std::vector<long>(dim, 0));
  for (int i = 0; i < dim; ++i) u.mat[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    int i = static_cast<int>(splitmix64(state) % dim);
    int j = static_cast<int>(splitmix64(state) % dim);
    long c = static_cast<long>(splitmix64(state) % 5) - 2;
    if (i == j) continue;
    for (int col = 0; col < dim; ++col) u.mat[i][col] += c * u.mat[j][col];
  }
  u.shift.assign(dim, 0);
  for (int i = 0; i < dim; ++i)
    u.shift[i] = static_cast<long>(splitmix64(state) % 21) - 10;
  return u;
}

LatticePolytope apply(const UnimodularMap& u, const LatticePolytope& p) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : p.vertices()) {
    std::vector<Int> w(p.dim(), Int(0));
    for (int i = 0; i < p.dim(); ++i) {
      for (int j = 0; j < p.dim(); ++j) w[i] += Int(u.mat[i][j]) * v[j];
      w[i] += u.shift[i];
    }
    out.push_back(std::move(w));
  }
  return LatticePolytope::from_vertices(p.dim(), std::move(out));
}

}  // namespace

TEST_CASE("hull construction validates input") {
  CHECK_THROWS_AS(make(2, {{0, 0}, {1, 0}, {2, 0}}), DomainError);  // flat
  CHECK_THROWS_AS(make(2, {{0, 0}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(make(2, {{0, 0}, {1, 0}, {0, 1}, {0, 0}}), DomainError);
  // interior / edge-interior points are rejected
  CHECK_THROWS_AS(make(2, {{0, 0}, {2, 0}, {0, 2}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(make(2, {{0, 0}, {3, 0}, {0, 3}, {1, 1}}), DomainError);
}

TEST_CASE("unit simplex and defective triangle Delzant checks") {
  LatticePolytope simplex = make(2, {{0, 0}, {1, 0}, {0, 1}});
  DelzantReport rep = is_delzant(simplex);
  CHECK(rep.is_delzant);

  LatticePolytope bad = make(2, {{0, 0}, {1, 0}, {0, 2}});
  rep = is_delzant(bad);
  CHECK(!rep.is_delzant);
  REQUIRE(rep.failures.size() == 1);
  // determinant failure at the vertex (1,0)
  CHECK(bad.vertices()[rep.failures[0].vertex][0] == 1);
  CHECK(bad.vertices()[rep.failures[0].vertex][1] == 0);
  CHECK(rep.failures[0].reason == DelzantFailure::Reason::BasisDeterminant);
}

TEST_CASE("hexagon of the degree-six del Pezzo surface") {
  LatticePolytope hex = delpezzo6_hexagon();
  CHECK(hex.edges().size() == 6);
  CHECK(is_delzant(hex).is_delzant);
  for (const auto& e : hex.edges()) CHECK(edge_lattice_length(hex, e) == 1);
  for (int v = 0; v < 6; ++v) CHECK(seshadri_at_fixed_point(hex, v) == 1);
  CHECK(seshadri_global_toric(hex) == 1);
}

TEST_CASE("edge lattice lengths") {
  LatticePolytope p = make(2, {{0, 0}, {3, 0}, {0, 1}});
  bool found = false;
  for (const auto& e : p.edges()) {
    const auto& a = p.vertices()[e.first];
    const auto& b = p.vertices()[e.second];
    if ((a[1] == 0 && b[1] == 0)) {
      CHECK(edge_lattice_length(p, e) == 3);
      found = true;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(edge_lattice_length(p, {0, 0}), DomainError);

  LatticePolytope two_simplex = scaled_simplex(2, 2);
  for (const auto& e : two_simplex.edges())
    CHECK(edge_lattice_length(two_simplex, e) == 2);
}

TEST_CASE("scaled simplices: per-vertex value k, global value k") {
  for (int dim = 1; dim <= 3; ++dim) {
    for (long k = 1; k <= 5; ++k) {
      LatticePolytope p = scaled_simplex(dim, k);
      CHECK(is_delzant(p).is_delzant);
      for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v)
        CHECK(seshadri_at_fixed_point(p, v) == k);
      CHECK(seshadri_global_toric(p) == k);
    }
  }
}

TEST_CASE("box with uneven edge lengths") {
  LatticePolytope box = make(2, {{0, 0}, {1, 0}, {1, 3}, {0, 3}});
  CHECK(is_delzant(box).is_delzant);
  for (int v = 0; v < 4; ++v) CHECK(seshadri_at_fixed_point(box, v) == 1);
  CHECK(seshadri_global_toric(box) == 1);
}

TEST_CASE("non-Delzant polytopes are rejected by the evaluators") {
  LatticePolytope bad = make(2, {{0, 0}, {1, 0}, {0, 2}});
  CHECK_THROWS_AS(seshadri_at_fixed_point(bad, 0), DomainError);
  CHECK_THROWS_AS(seshadri_global_toric(bad), DomainError);
}

TEST_CASE("values are invariant under unimodular affine maps") {
  std::uint64_t state = 2024;
  std::vector<LatticePolytope> bases;
  bases.push_back(delpezzo6_hexagon());
  bases.push_back(scaled_simplex(2, 3));
  bases.push_back(scaled_simplex(3, 2));
  bases.push_back(make(2, {{0, 0}, {1, 0}, {1, 3}, {0, 3}}));
  for (int iter = 0; iter < 25; ++iter) {
    for (const LatticePolytope& p : bases) {
      UnimodularMap u = random_unimodular(state, p.dim());
      LatticePolytope q = apply(u, p);
      CHECK(seshadri_global_toric(q) == seshadri_global_toric(p));
      // vertex correspondence: vertex i of p maps to the image point
      for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
        std::vector<Int> image(p.dim(), Int(0));
        for (int i = 0; i < p.dim(); ++i) {
          for (int j = 0; j < p.dim(); ++j)
            image[i] += Int(u.mat[i][j]) * p.vertices()[v][j];
          image[i] += u.shift[i];
        }
        int target = -1;
        for (int w = 0; w < static_cast<int>(q.vertices().size()); ++w)
          if (q.vertices()[w] == image) target = w;
        REQUIRE(target >= 0);
        CHECK(seshadri_at_fixed_point(q, target) ==
              seshadri_at_fixed_point(p, v));
      }
    }
  }
}

TEST_CASE("scaling the polytope scales the Seshadri constant") {
  LatticePolytope hex = delpezzo6_hexagon();
  for (long t = 1; t <= 4; ++t) {
    std::vector<std::vector<Int>> scaled;
    for (const auto& v : hex.vertices()) {
      std::vector<Int> w;
      for (const Int& c : v) w.push_back(c * t);
      scaled.push_back(std::move(w));
    }
    LatticePolytope tp = LatticePolytope::from_vertices(2, std::move(scaled));
    CHECK(seshadri_global_toric(tp) == t * seshadri_global_toric(hex));
  }
}

TEST_CASE("per-vertex values are at least one on Delzant polytopes") {
  std::uint64_t state = 555;
  std::vector<LatticePolytope> bases;
  bases.push_back(delpezzo6_hexagon());
  bases.push_back(scaled_simplex(2, 1));
  bases.push_back(scaled_simplex(3, 4));
  for (const LatticePolytope& p : bases) {
    UnimodularMap u = random_unimodular(state, p.dim());
    LatticePolytope q = apply(u, p);
    for (int v = 0; v < static_cast<int>(q.vertices().size()); ++v)
      CHECK(seshadri_at_fixed_point(q, v) >= 1);
  }
}
