// Bounded rational convex polytopes as half-space intersections, with exact
// vertex enumeration, pulling triangulation, volume and linear moments.
#pragma once

#include <vector>

#include "divstab/rational.hpp"

namespace divstab {

// { u : <u, normal> >= offset }
struct HalfSpace {
  RatVector normal;
  Rational offset;

  HalfSpace(RatVector n, Rational c);
  bool contains(const RatVector& u) const { return normal.dot(u) >= offset; }
  bool active_at(const RatVector& u) const { return normal.dot(u) == offset; }
};

struct VertexEnumeration {
  std::vector<RatVector> vertices;  // deduplicated, lexicographically sorted
  bool degenerate;                  // empty or of affine dimension < dim
};

// Exhaustive intersection of all dim-subsets of facets with feasibility
// filtering. dim must be in [1, 4]; throws unbounded_error when a nonzero
// recession direction exists.
VertexEnumeration vertex_enumerate(const std::vector<HalfSpace>& halfspaces, int dim);

using Simplex = std::vector<int>;  // dim+1 vertex indices

class Polytope {
 public:
  static Polytope from_halfspaces(std::vector<HalfSpace> halfspaces, int dim);

  int dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Simplex>& triangulation() const { return triangulation_; }
  bool degenerate() const { return degenerate_; }
  bool contains(const RatVector& u) const;

 private:
  Polytope() = default;
  int dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<RatVector> vertices_;
  std::vector<Simplex> triangulation_;
  bool degenerate_ = true;
};

// Exact Lebesgue volume for the measure with covolume-1 lattice; 0 when
// degenerate.
Rational volume(const Polytope& p);

// Exact first moment along w: the integral of <u, w> over p.
Rational moment(const Polytope& p, const RatVector& w);

// moment/volume componentwise; throws zero_volume_error when volume(p) = 0.
RatVector barycenter(const Polytope& p);

// The intersection p ∩ h, re-enumerated; possibly degenerate or empty.
Polytope halfspace_slice(const Polytope& p, const HalfSpace& h);

}  // namespace divstab
