#include "dynheat/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace dynheat {

CornerTridiagonalSolver::CornerTridiagonalSolver(std::vector<double> lower,
                                                 std::vector<double> diag,
                                                 std::vector<double> upper,
                                                 double corner_top,
                                                 double corner_bottom)
    : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)) {
    const std::size_t n = diag_.size();
    if (n < 5 || lower_.size() != n || upper_.size() != n)
        throw std::invalid_argument("CornerTridiagonalSolver: need matching bands, n >= 5");

    // Row operations removing the corner entries; exact, no approximation.
    if (upper_[1] == 0.0 || lower_[n - 2] == 0.0)
        throw std::invalid_argument("CornerTridiagonalSolver: zero elimination pivot");
    m_top_ = corner_top / upper_[1];
    diag_[0] -= m_top_ * lower_[1];
    upper_[0] -= m_top_ * diag_[1];
    m_bottom_ = corner_bottom / lower_[n - 2];
    diag_[n - 1] -= m_bottom_ * upper_[n - 2];
    lower_[n - 1] -= m_bottom_ * diag_[n - 2];

    // Thomas factorization, multipliers stored for reuse.
    lmult_.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        if (diag_[i - 1] == 0.0 || !std::isfinite(diag_[i - 1]))
            throw std::invalid_argument("CornerTridiagonalSolver: vanishing pivot");
        lmult_[i] = lower_[i] / diag_[i - 1];
        diag_[i] -= lmult_[i] * upper_[i - 1];
    }
    if (diag_[n - 1] == 0.0 || !std::isfinite(diag_[n - 1]))
        throw std::invalid_argument("CornerTridiagonalSolver: vanishing pivot");
}

void CornerTridiagonalSolver::solve(std::span<double> rhs) const {
    const std::size_t n = diag_.size();
    if (rhs.size() != n)
        throw std::invalid_argument("CornerTridiagonalSolver: rhs size mismatch");

    rhs[0] -= m_top_ * rhs[1];
    rhs[n - 1] -= m_bottom_ * rhs[n - 2];

    for (std::size_t i = 1; i < n; ++i) rhs[i] -= lmult_[i] * rhs[i - 1];

    rhs[n - 1] /= diag_[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        rhs[i] = (rhs[i] - upper_[i] * rhs[i + 1]) / diag_[i];
}

}  // namespace dynheat
