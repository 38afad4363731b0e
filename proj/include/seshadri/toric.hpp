#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seshadri/exactnum.hpp"

namespace seshadri {

/// Full-dimensional integral polytope given by its vertex set, with the edge
/// graph and facet description derived by exact convex-hull computation.
/// Encodes a polarized toric variety: facets correspond to invariant
/// divisors, edges to invariant curves, vertices to torus-fixed points.
class LatticePolytope {
 public:
  struct Facet {
    std::vector<Int> normal;  // primitive inner normal
    Int offset;               // facet is {x : <normal, x> = offset}
    std::vector<int> incident_vertices;
  };

  /// Builds the polytope from a vertex list. Throws DomainError when the
  /// points are not full-dimensional or some point is not a vertex of the
  /// hull.
  static LatticePolytope from_vertices(int dim,
                                       std::vector<std::vector<Int>> vertices);

  int dim() const { return dim_; }
  const std::vector<std::vector<Int>>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::vector<int> incident_edges(int vertex) const;

 private:
  int dim_ = 0;
  std::vector<std::vector<Int>> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Facet> facets_;
};

struct DelzantFailure {
  int vertex;
  enum class Reason { EdgeCount, BasisDeterminant } reason;
};

struct DelzantReport {
  bool is_delzant = false;
  std::vector<DelzantFailure> failures;
};

/// Checks the two smoothness conditions at every vertex: exactly n incident
/// edges whose primitive direction vectors form a lattice basis.
DelzantReport is_delzant(const LatticePolytope& p);

/// Number of lattice points on the edge minus one (gcd of the coordinate
/// differences of its endpoints).
Int edge_lattice_length(const LatticePolytope& p, std::pair<int, int> e);

/// Seshadri constant of the polarization at the torus-fixed point of the
/// given vertex: the minimal lattice length among incident edges, which is
/// also the top jet order generated there. Requires a Delzant polytope.
Int seshadri_at_fixed_point(const LatticePolytope& p, int vertex);

/// Global Seshadri constant: the minimum over all fixed points. Always an
/// integer.
Int seshadri_global_toric(const LatticePolytope& p);

}  // namespace seshadri
