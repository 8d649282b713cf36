#ifndef HANKEL1_CADZOW_HPP
#define HANKEL1_CADZOW_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hankel1/common.hpp"
#include "hankel1/hankel_core.hpp"

namespace hankel1
{

enum class CadzowTerminal
{
    ZeroLimit,
    Rank1HankelFixedPoint,
    MaxIterations,
};

std::string_view to_string(CadzowTerminal t) noexcept;

struct CadzowOptions
{
    double tol           = 1e-12;   ///< fixed-point threshold, relative to sigma_j
    double tol_zero      = 1e-12;   ///< zero-limit threshold, relative to |A|_F
    std::size_t max_iter = 100000;
};

/// Record of one alternating-projection run.
struct CadzowTrace
{
    std::vector<double> sigmas;          ///< sigma_j for j = 0 .. iterations
    std::vector<double> iterate_deltas;  ///< |A_j - A_{j-1}|_F for j >= 1
    CadzowTerminal terminal = CadzowTerminal::MaxIterations;
    std::size_t iterations = 0;
    CMatrix final_iterate;
    std::optional<Rank1HankelParams> params;  ///< set on a fixed point
    double error_frobenius = 0.0;             ///< |A - A_final|_F
    double error_spectral  = 0.0;
    double tail_ratio      = 0.0;             ///< sigma_1 / sigma_0 of the last projected iterate

    /// sigma_{j+1} / sigma_j, for empirical inspection of the rate.
    std::vector<double> sigma_ratios() const;
};

///
/// Alternating projection between rank-1 matrices and Hankel matrices.
///
/// Starts at the truncated SVD of `A` and repeats `A_j = T(P(A_{j-1}))`,
/// where `P` averages anti-diagonals and `T` keeps the leading singular triple.
/// A run stops at a fixed point (iterate change and Hankel residual both at
/// most `tol * sigma_j`), at a collapse to zero (`sigma_j <= tol_zero |A|_F`),
/// or after `max_iter` steps. Throws RankZero for the zero matrix.
///
CadzowTrace cadzow_iterate(const CMatrix& a, const CadzowOptions& opts = {});

/// `|P(X) - X|_F / max(1, |X|_F)`.
double fixed_point_residual(const CMatrix& x);

}  // namespace hankel1

#endif  // HANKEL1_CADZOW_HPP
