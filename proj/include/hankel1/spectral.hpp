#ifndef HANKEL1_SPECTRAL_HPP
#define HANKEL1_SPECTRAL_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hankel1/common.hpp"
#include "hankel1/hankel_core.hpp"
#include "hankel1/numerics.hpp"

namespace hankel1
{

///
/// ### SecularFunction
///
/// For a symmetric `A = V diag(lambda) V^T` and a real (or infinite) `z`,
///
///   f(z, s) = sum'_j mu_j^2 / (lambda_j^2 - s),   mu_j = v_j^T z_N(z),
///
/// which equals `z_N^T (A^2 - s I)^{-1} z_N` whenever `s` is not an
/// eigenvalue of `A^2`. The primed sum omits terms whose denominator and
/// numerator both vanish. A term whose denominator is within
/// `collision_tol * lambda_0^2` of zero counts as vanishing; with the default
/// of zero only exact collisions do.
///
class SecularFunction
{
public:
    explicit SecularFunction(SymmetricEigen eig);

    /// `mu = V^T z_N(z)`.
    RVector coordinates(const ExtendedScalar& z) const;
    /// `mu = V^T J_N z_N(z)`.
    RVector flipped_coordinates(const ExtendedScalar& z) const;

    double value(const ExtendedScalar& z, double lambda_sq, double collision_tol = 0.0,
                 double zero_tol = 1e-12) const;
    /// `f^{(1)}(z, s) = f(1/z, s)`.
    double flipped_value(const ExtendedScalar& z, double lambda_sq, double collision_tol = 0.0,
                         double zero_tol = 1e-12) const;

    /// Evaluates the sum for given coordinates `mu`.
    double sum(const RVector& mu, double lambda_sq, double collision_tol, double zero_tol) const;

    const SymmetricEigen& eig() const noexcept { return eig_; }

private:
    SymmetricEigen eig_;
};

/// `f(z, lambda^2)`; throws PoleHit when a colliding term has `mu_j^2 > tol`.
double secular_eval(const SymmetricEigen& eig, const ExtendedScalar& z, double lambda_sq,
                    double tol = 1e-12);

/// `B = D + sign * c b b^T` with `sign = +1` when the rank-1 term is added.
struct DiagPlusRank1
{
    RVector diagonal;
    RVector b;
    double c = 0.0;
    bool added = true;

    Eigen::MatrixXd dense() const;
};

/// `det(D) + sign * c * sum_j b_j^2 prod_{k != j} d_k`.
double diag_rank1_det(const DiagPlusRank1& d);

///
/// Positive semidefiniteness test for the two diagonal-plus-rank-1 shapes
/// arising at the spectral optimum (c > 0):
///   - rank-1 term added, exactly one negative diagonal entry:
///       psd  <=>  b_j = 0 where d_j = 0  and  sum' b_j^2 / (-d_j) >= 1/c;
///   - rank-1 term subtracted, non-negative diagonal with a positive entry:
///       psd  <=>  b_j = 0 where d_j = 0  and  sum' b_j^2 / d_j <= 1/c.
/// Entries with modulus at most `zero_tol` count as zero. Throws
/// HypothesisMismatch for any other shape.
///
bool psd_check(const DiagPlusRank1& d, double zero_tol = 1e-14);

/// Interval of admissible `c`; closed unless an end is flagged open.
struct CInterval
{
    double lo;
    double hi;
    bool lo_open = false;
    bool hi_open = false;
};

struct Case1Result
{
    ExtendedScalar z;
    CInterval c_interval;
};

///
/// Checks whether the unstructured error `|lambda_1|` is reachable: looks for a
/// joint real zero (or infinity) of `v_j(z) = v_j^T (1, z, ..., z^{N-1})` over
/// all `j` with `|lambda_j| = |lambda_1|` at which `f(z, lambda_1^2) >= 0`.
///
std::optional<Case1Result> case1_test(const SymmetricEigen& eig, double tol = 1e-9,
                                      double tie_tol = Tolerances{}.tie);

/// Real zeros of `v_j(z)` for eigenvector `j`, plus whether infinity is a zero.
struct EigenvectorZeros
{
    std::vector<double> finite;
    bool at_infinity;
};

EigenvectorZeros eigenvector_zeros(const SymmetricEigen& eig, Index j, double tol = 1e-9);

enum class SpectralCase
{
    AchievedLambda1,
    Bisection,
    DegenerateSameSign,
    DegenerateOppositeSign,
};

std::string_view to_string(SpectralCase c) noexcept;

struct SpectralOptions
{
    std::optional<double> eps;  ///< bisection width; default 1e-12 * lambda_0
    std::size_t grid = 2048;    ///< grid of each inner maximization
    double inner_tol = 1e-12;
    double eps_w = 1e-10;        ///< |W| lambda_0^2 below this ends the bisection
    double tie_tol = Tolerances{}.tie;
    double zero_tol = 1e-9;      ///< joint-zero acceptance for case 1
    double flip_clip = 1e-12;    ///< the flipped branch searches (-1 + clip, 1 - clip)
    ExtendedScalar z_choice = ExtendedScalar(0.0);  ///< used by the degenerate branch
};

struct SpectralSolution
{
    double lambda_tilde;
    std::optional<Rank1HankelParams> params;  ///< empty for DegenerateOppositeSign
    SpectralCase spectral_case;
    std::optional<CInterval> c_interval;
    std::size_t bisection_iterations = 0;

    /// Parameters, or NoRank1Solution for the opposite-sign degenerate case.
    const Rank1HankelParams& require_params() const;
};

SpectralSolution solve_spectral(const RMatrix& a, const SpectralOptions& opts = {});

/// Degenerate branch for `|lambda_0| = |lambda_1|` (eigenvalues sorted, `lambda_0 > 0`).
SpectralSolution degenerate_top(const SymmetricEigen& eig, const ExtendedScalar& z_choice = ExtendedScalar(0.0),
                                double tie_tol = Tolerances{}.tie);

/// `M_1 = lambda I - Lambda + c mu mu^T` and `M_2 = lambda I + Lambda - c mu mu^T`.
struct ShiftedErrorMatrices
{
    DiagPlusRank1 m1;
    DiagPlusRank1 m2;
};

ShiftedErrorMatrices shifted_error_matrices(const SymmetricEigen& eig, const ExtendedScalar& z, double c,
                                            double lambda);

}  // namespace hankel1

#endif  // HANKEL1_SPECTRAL_HPP
