#include "seshadri/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "seshadri/linalg.hpp"

namespace seshadri {

namespace {

// Integer normal of the hyperplane through dim affinely independent points,
// via cofactor expansion of the (dim-1) x dim difference matrix. Returns the
// zero vector when the points are affinely dependent.
std::vector<Int> hyperplane_normal(const std::vector<std::vector<Int>>& pts,
                                   const std::vector<int>& subset, int dim) {
  std::vector<std::vector<Int>> diff;
  for (std::size_t k = 1; k < subset.size(); ++k) {
    std::vector<Int> row(dim);
    for (int j = 0; j < dim; ++j)
      row[j] = pts[subset[k]][j] - pts[subset[0]][j];
    diff.push_back(std::move(row));
  }
  std::vector<Int> normal(dim);
  for (int drop = 0; drop < dim; ++drop) {
    IMatrix minor(dim - 1, dim - 1);
    for (int i = 0; i < dim - 1; ++i) {
      int cc = 0;
      for (int j = 0; j < dim; ++j) {
        if (j == drop) continue;
        minor.at(i, cc++) = diff[i][j];
      }
    }
    Int d = determinant(std::move(minor));
    normal[drop] = (drop % 2 == 0) ? d : Int(-d);
  }
  return normal;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::size_t normal_rank(const LatticePolytope& p,
                        const std::vector<int>& facet_ids) {
  std::vector<std::vector<Int>> rows;
  for (int f : facet_ids) rows.push_back(p.facets()[f].normal);
  return rows.empty() ? 0 : int_rank(rows);
}

}  // namespace

LatticePolytope LatticePolytope::from_vertices(
    int dim, std::vector<std::vector<Int>> vertices) {
  if (dim < 1) throw DomainError("polytope dimension must be >= 1");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      throw DomainError("vertex coordinate count does not match dimension");
  std::set<std::vector<Int>> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw DomainError("duplicate vertex");
  const int n = static_cast<int>(vertices.size());
  if (n < dim + 1)
    throw DomainError("polytope is not full-dimensional");

  // Full dimension: the differences from vertex 0 must have rank dim.
  {
    std::vector<std::vector<Int>> diffs;
    for (int i = 1; i < n; ++i) {
      std::vector<Int> row(dim);
      for (int j = 0; j < dim; ++j) row[j] = vertices[i][j] - vertices[0][j];
      diffs.push_back(std::move(row));
    }
    if (int_rank(diffs) != static_cast<std::size_t>(dim))
      throw DomainError("polytope is not full-dimensional");
  }

  LatticePolytope p;
  p.dim_ = dim;
  p.vertices_ = std::move(vertices);

  // Facet enumeration: every dim-subset spanning a hyperplane with all
  // points on one side. Fine for the small vertex counts used here.
  std::map<std::pair<std::vector<Int>, Int>, std::vector<int>> facet_map;
  // iterate over all dim-subsets of [0, n)
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  while (true) {
    std::vector<Int> normal = hyperplane_normal(p.vertices_, idx, dim);
    bool nonzero = std::any_of(normal.begin(), normal.end(),
                               [](const Int& x) { return x != 0; });
    if (nonzero) {
      Int offset = dot(normal, p.vertices_[idx[0]]);
      bool has_above = false, has_below = false;
      for (int i = 0; i < n; ++i) {
        int s = sgn(Int(dot(normal, p.vertices_[i]) - offset));
        if (s > 0) has_above = true;
        if (s < 0) has_below = true;
        if (has_above && has_below) break;
      }
      if (!(has_above && has_below)) {
        if (has_below) {
          for (Int& x : normal) x = -x;
          offset = -offset;
        }
        make_primitive(normal);
        offset = dot(normal, p.vertices_[idx[0]]);
        auto key = std::make_pair(normal, offset);
        if (!facet_map.count(key)) {
          std::vector<int> incident;
          for (int i = 0; i < n; ++i)
            if (dot(normal, p.vertices_[i]) == offset) incident.push_back(i);
          facet_map.emplace(std::move(key), std::move(incident));
        }
      }
    }
    // next subset
    int k = dim - 1;
    while (k >= 0 && idx[k] == n - dim + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }

  for (auto& [key, incident] : facet_map) {
    Facet f;
    f.normal = key.first;
    f.offset = key.second;
    f.incident_vertices = incident;
    p.facets_.push_back(std::move(f));
  }
  if (p.facets_.empty()) throw DomainError("polytope is not full-dimensional");

  // Facets containing each point; a point is a vertex iff those normals
  // span the whole space.
  std::vector<std::vector<int>> facets_of(n);
  for (std::size_t f = 0; f < p.facets_.size(); ++f)
    for (int v : p.facets_[f].incident_vertices)
      facets_of[v].push_back(static_cast<int>(f));
  for (int v = 0; v < n; ++v)
    if (normal_rank(p, facets_of[v]) != static_cast<std::size_t>(dim))
      throw DomainError("input point is not a vertex of the hull");

  // Edge test: the facets shared by two vertices cut out a face of
  // dimension dim - rank(normals); an edge is a common face of dimension 1.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> shared;
      std::set_intersection(facets_of[u].begin(), facets_of[u].end(),
                            facets_of[v].begin(), facets_of[v].end(),
                            std::back_inserter(shared));
      if (normal_rank(p, shared) == static_cast<std::size_t>(dim) - 1)
        p.edges_.emplace_back(u, v);
    }
  }
  return p;
}

std::vector<int> LatticePolytope::incident_edges(int vertex) const {
  std::vector<int> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first == vertex || edges_[e].second == vertex)
      out.push_back(static_cast<int>(e));
  return out;
}

DelzantReport is_delzant(const LatticePolytope& p) {
  DelzantReport report;
  const int n = p.dim();
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    std::vector<int> inc = p.incident_edges(v);
    if (static_cast<int>(inc.size()) != n) {
      report.failures.push_back(
          {v, DelzantFailure::Reason::EdgeCount});
      continue;
    }
    IMatrix dirs(n, n);
    for (int k = 0; k < n; ++k) {
      auto [a, b] = p.edges()[inc[k]];
      int other = (a == v) ? b : a;
      std::vector<Int> d(n);
      for (int j = 0; j < n; ++j)
        d[j] = p.vertices()[other][j] - p.vertices()[v][j];
      make_primitive(d);
      for (int j = 0; j < n; ++j) dirs.at(k, j) = d[j];
    }
    Int det = determinant(std::move(dirs));
    if (det != 1 && det != -1)
      report.failures.push_back(
          {v, DelzantFailure::Reason::BasisDeterminant});
  }
  report.is_delzant = report.failures.empty();
  return report;
}

Int edge_lattice_length(const LatticePolytope& p, std::pair<int, int> e) {
  bool found = false;
  for (const auto& edge : p.edges())
    if ((edge.first == e.first && edge.second == e.second) ||
        (edge.first == e.second && edge.second == e.first)) {
      found = true;
      break;
    }
  if (!found) throw DomainError("not an edge of this polytope");
  Int g = 0;
  for (int j = 0; j < p.dim(); ++j)
    g = gcd(g, Int(p.vertices()[e.first][j] - p.vertices()[e.second][j]));
  return g;
}

Int seshadri_at_fixed_point(const LatticePolytope& p, int vertex) {
  if (vertex < 0 || vertex >= static_cast<int>(p.vertices().size()))
    throw DomainError("vertex index out of range");
  DelzantReport report = is_delzant(p);
  if (!report.is_delzant)
    throw DomainError("polytope is not Delzant");
  Int best = -1;
  for (int e : p.incident_edges(vertex)) {
    Int len = edge_lattice_length(p, p.edges()[e]);
    if (best < 0 || len < best) best = len;
  }
  return best;
}

Int seshadri_global_toric(const LatticePolytope& p) {
  DelzantReport report = is_delzant(p);
  if (!report.is_delzant)
    throw DomainError("polytope is not Delzant");
  Int best = -1;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    Int s = seshadri_at_fixed_point(p, v);
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace seshadri
