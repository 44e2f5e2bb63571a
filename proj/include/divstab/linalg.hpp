// Exact rational linear algebra: small dense solves, rank, kernels.
#pragma once

#include <optional>
#include <vector>

#include "divstab/rational.hpp"

namespace divstab::linalg {

using Matrix = std::vector<RatVector>;  // row-major

int rank(Matrix rows);

// Solves rows * u = rhs for square systems; nullopt when singular.
std::optional<RatVector> solve(const Matrix& rows, const std::vector<Rational>& rhs);

// Basis of { d : rows * d = 0 } in the given ambient dimension.
std::vector<RatVector> kernel_basis(const Matrix& rows, int dim);

// Affine dimension of a point set (rank of differences to the first point);
// -1 for the empty set, 0 for a single point.
int affine_dim(const std::vector<RatVector>& points, const std::vector<int>& subset);

Rational determinant(Matrix rows);

}  // namespace divstab::linalg
