#pragma once

#include <vector>

#include "starlex/matrix.hpp"
#include "starlex/rational.hpp"

namespace starlex {

/// Outcome of an eigenvalue solve: the largest eigenvalue, the infinity-norm
/// residual of its eigenpair, and the work spent (Jacobi sweeps or power
/// steps). For the nonnegative matrices used throughout, the largest
/// eigenvalue is the spectral radius.
struct RadiusResult {
    double value = 0.0;
    double residual = 0.0;
    long iterations = 0;
};

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations,
/// swept until the off-diagonal Frobenius norm drops below 1e-13 times the
/// Frobenius norm of the input. Rejects asymmetric input (mismatch above
/// 1e-12 relative to the largest entry).
RadiusResult radius_symmetric(const DenseMatrix& m);

/// Largest eigenvalue of an entrywise-nonnegative matrix (symmetric or not)
/// by power iteration on M + cI with c = max diagonal + 1; the shift keeps
/// the dominant eigenvalue of the iteration matrix positive and dominant.
/// Stops when the eigenpair residual drops below 1e-11 * max(1, ||M||_inf);
/// throws std::runtime_error if 1e6 steps do not get there.
RadiusResult radius_power(const DenseMatrix& m);

/// The largest root of the n-th branch polynomial, found by bisecting
/// [theta_{n-1}, 2] down to absolute width 1e-13. The roots strictly
/// interlace, so each bracket holds exactly one root; theta_1 = alpha.
double branch_root(int n, const Rat& alpha);

/// theta_1 .. theta_max_n in one pass.
std::vector<double> branch_root_sequence(int max_n, const Rat& alpha);

}  // namespace starlex
