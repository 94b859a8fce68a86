#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dynheat {

/// LU solver for a tridiagonal matrix bordered by two corner entries,
/// A[0][2] and A[n-1][n-3], as produced by the one-sided second-order
/// boundary stencils. The corners are removed by exact row elimination
/// against rows 1 and n-2 (which keeps the system strictly tridiagonal),
/// then a Thomas factorization is stored for repeated solves.
///
/// Requires n >= 5 and nonzero upper[1], lower[n-2]; throws
/// std::invalid_argument otherwise, or on a vanishing pivot.
class CornerTridiagonalSolver {
public:
    CornerTridiagonalSolver(std::vector<double> lower, std::vector<double> diag,
                            std::vector<double> upper, double corner_top,
                            double corner_bottom);

    std::size_t size() const { return diag_.size(); }

    /// Solve A x = rhs in place.
    void solve(std::span<double> rhs) const;

private:
    std::vector<double> lower_;   // lower_[i] multiplies x_{i-1} in row i (i>=1)
    std::vector<double> diag_;    // after factorization: U diagonal
    std::vector<double> upper_;   // upper_[i] multiplies x_{i+1} in row i
    std::vector<double> lmult_;   // L multipliers from the forward sweep
    double m_top_ = 0.0;          // corner elimination multipliers
    double m_bottom_ = 0.0;
};

}  // namespace dynheat
