#include "divstab/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "divstab/linalg.hpp"

namespace divstab {

HalfSpace::HalfSpace(RatVector n, Rational c) : normal(std::move(n)), offset(std::move(c)) {
  if (normal.is_zero()) throw error("half-space with zero normal");
  if (normal.dim() == 0) throw dimension_error("half-space in dimension zero");
}

namespace {

bool feasible(const RatVector& u, const std::vector<HalfSpace>& hs) {
  for (const auto& h : hs)
    if (!h.contains(u)) return false;
  return true;
}

bool recession_direction_ok(const RatVector& d, const std::vector<HalfSpace>& hs) {
  for (const auto& h : hs)
    if (h.normal.dot(d).sign() < 0) return false;
  return true;
}

// A nonzero d with <d, normal> >= 0 for every half-space witnesses
// unboundedness. If the recession cone contains a line, the full normal
// matrix has a kernel vector; otherwise any extreme ray lies on dim-1
// linearly independent normals, so some (dim-1)-subset has a 1-dimensional
// kernel spanned by it.
bool has_recession_direction(const std::vector<HalfSpace>& hs, int dim) {
  linalg::Matrix all;
  for (const auto& h : hs) all.push_back(h.normal);
  for (const auto& d : linalg::kernel_basis(all, dim))
    if (!d.is_zero()) return true;
  const int f = static_cast<int>(hs.size());
  const int k = dim - 1;
  std::vector<int> idx(static_cast<size_t>(k));
  auto check_subset = [&](const std::vector<int>& sel) {
    linalg::Matrix rows;
    for (int i : sel) rows.push_back(hs[static_cast<size_t>(i)].normal);
    const auto kern = linalg::kernel_basis(rows, dim);
    if (kern.size() != 1) return false;
    const RatVector& d = kern[0];
    return recession_direction_ok(d, hs) || recession_direction_ok(d.scaled(Rational(-1)), hs);
  };
  if (k == 0) return check_subset({});
  std::vector<int> sel;
  // iterative combination walk over all k-subsets of {0..f-1}
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  if (f < k) return false;
  while (true) {
    if (check_subset(idx)) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == f - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return false;
}

}  // namespace

VertexEnumeration vertex_enumerate(const std::vector<HalfSpace>& halfspaces, int dim) {
  if (dim < 1 || dim > 4)
    throw precondition_error("vertex enumeration supports dimensions 1 through 4");
  if (halfspaces.empty()) throw precondition_error("vertex enumeration needs half-spaces");
  for (const auto& h : halfspaces)
    if (h.normal.dim() != dim) throw dimension_error("half-space dimension mismatch");

  if (has_recession_direction(halfspaces, dim))
    throw unbounded_error("half-space intersection is unbounded");

  const int f = static_cast<int>(halfspaces.size());
  std::vector<RatVector> found;
  std::vector<int> idx(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) idx[static_cast<size_t>(i)] = i;
  if (f >= dim) {
    while (true) {
      linalg::Matrix rows;
      std::vector<Rational> rhs;
      for (int i : idx) {
        rows.push_back(halfspaces[static_cast<size_t>(i)].normal);
        rhs.push_back(halfspaces[static_cast<size_t>(i)].offset);
      }
      if (auto u = linalg::solve(rows, rhs); u && feasible(*u, halfspaces))
        found.push_back(std::move(*u));
      int pos = dim - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == f - dim + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (int j = pos + 1; j < dim; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());

  VertexEnumeration out;
  out.vertices = std::move(found);
  std::vector<int> all(out.vertices.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  out.degenerate = linalg::affine_dim(out.vertices, all) < dim;
  return out;
}

namespace {

// Lexicographic pulling: cone over the lex-smallest vertex of each face,
// recursing into the facets that avoid it. Faces are vertex index sets.
class Triangulator {
 public:
  Triangulator(const std::vector<RatVector>& vertices, const std::vector<HalfSpace>& halfspaces)
      : vertices_(vertices), halfspaces_(halfspaces) {}

  std::vector<Simplex> run(int dim) {
    std::vector<int> all(vertices_.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return face(all, dim);
  }

 private:
  std::vector<Simplex> face(const std::vector<int>& indices, int k) {
    if (static_cast<int>(indices.size()) == k + 1) return {indices};
    // vertices are lex-sorted, so the smallest index is the lex-min vertex
    const int apex = indices.front();
    std::set<std::vector<int>> facets;
    for (const auto& h : halfspaces_) {
      std::vector<int> s;
      for (int i : indices)
        if (h.active_at(vertices_[static_cast<size_t>(i)])) s.push_back(i);
      if (s.size() < static_cast<size_t>(k)) continue;
      if (std::find(s.begin(), s.end(), apex) != s.end()) continue;
      if (linalg::affine_dim(vertices_, s) != k - 1) continue;
      facets.insert(std::move(s));
    }
    std::vector<Simplex> out;
    for (const auto& s : facets) {
      for (auto t : face(s, k - 1)) {
        t.push_back(apex);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  const std::vector<RatVector>& vertices_;
  const std::vector<HalfSpace>& halfspaces_;
};

Rational simplex_volume(const std::vector<RatVector>& vertices, const Simplex& s, int dim) {
  linalg::Matrix rows;
  for (size_t i = 1; i < s.size(); ++i)
    rows.push_back(vertices[static_cast<size_t>(s[i])] - vertices[static_cast<size_t>(s[0])]);
  return linalg::determinant(std::move(rows)).abs() / Rational(factorial(dim));
}

}  // namespace

Polytope Polytope::from_halfspaces(std::vector<HalfSpace> halfspaces, int dim) {
  auto enumeration = vertex_enumerate(halfspaces, dim);
  Polytope p;
  p.dim_ = dim;
  p.halfspaces_ = std::move(halfspaces);
  p.vertices_ = std::move(enumeration.vertices);
  p.degenerate_ = enumeration.degenerate;
  if (!p.degenerate_) p.triangulation_ = Triangulator(p.vertices_, p.halfspaces_).run(dim);
  return p;
}

bool Polytope::contains(const RatVector& u) const { return feasible(u, halfspaces_); }

Rational volume(const Polytope& p) {
  Rational acc;
  for (const auto& s : p.triangulation()) acc += simplex_volume(p.vertices(), s, p.dim());
  return acc;
}

Rational moment(const Polytope& p, const RatVector& w) {
  if (w.dim() != p.dim()) throw dimension_error("moment direction dimension mismatch");
  // the integrand is linear, so each simplex contributes volume * <centroid, w>
  Rational acc;
  const Rational inv(1, static_cast<long long>(p.dim()) + 1);
  for (const auto& s : p.triangulation()) {
    RatVector centroid(p.dim());
    for (int i : s) centroid = centroid + p.vertices()[static_cast<size_t>(i)];
    acc += simplex_volume(p.vertices(), s, p.dim()) * centroid.scaled(inv).dot(w);
  }
  return acc;
}

RatVector barycenter(const Polytope& p) {
  const Rational vol = volume(p);
  if (vol.is_zero()) throw zero_volume_error("barycenter of a zero-volume polytope");
  RatVector b(p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    RatVector e(p.dim());
    e[i] = Rational(1);
    b[i] = moment(p, e) / vol;
  }
  return b;
}

Polytope halfspace_slice(const Polytope& p, const HalfSpace& h) {
  auto hs = p.halfspaces();
  hs.push_back(h);
  return Polytope::from_halfspaces(std::move(hs), p.dim());
}

}  // namespace divstab
