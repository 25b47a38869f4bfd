#pragma once

#include <vector>

#include "sgspec/matrix.hpp"
#include "sgspec/simd/kernels.hpp"

namespace sgspec::verify {

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Iterates until the off-diagonal Frobenius norm is <= tol.
/// Throws NotSymmetric unless m is exactly symmetric, NotConverged if the
/// sweep limit is reached.
std::vector<double> eig_numeric(const RealMatrix& m, double tol = 1e-9);
std::vector<double> eig_numeric(const IntMatrix& m, double tol = 1e-9);
/// Same, with an explicit kernel table (used by the equivalence tests).
std::vector<double> eig_numeric(const RealMatrix& m, double tol, const simd::KernelTable& kernels);

}  // namespace sgspec::verify
