#ifndef HANKEL1_NUMERICS_HPP
#define HANKEL1_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hankel1/common.hpp"

namespace hankel1
{

///
/// Eigendecomposition of a real symmetric matrix.
///
/// Eigenvalues are ordered by non-increasing modulus. Values whose moduli
/// agree within the tie tolerance keep the positive value first, then the
/// original (ascending) order. Each eigenvector is sign-normalized so that its
/// first entry of maximal modulus is positive.
///
struct SymmetricEigen
{
    RVector values;
    Eigen::MatrixXd vectors;  ///< column j pairs with values[j]

    Index size() const noexcept { return values.size(); }
};

SymmetricEigen eig_symmetric(const RMatrix& a, double tol = Tolerances{}.structural,
                             double tie_tol = Tolerances{}.tie);

///
/// Thin singular value decomposition `A = U diag(sigma) V^*`.
///
/// The phase of each singular pair is fixed by making the first entry of
/// maximal modulus of `u_j` real and positive, so the leading pair is
/// reproducible across calls.
///
struct Svd
{
    Eigen::MatrixXcd u;
    RVector sigma;
    Eigen::MatrixXcd v;

    /// Best rank-1 approximation `sigma_0 u_0 v_0^*`.
    CMatrix leading_term() const;
};

Svd svd(const CMatrix& a);

/// Closed interval; either bound may be infinite.
struct Interval
{
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Real polynomials are stored as ascending coefficient lists.
using Polynomial = std::vector<double>;

double poly_eval(std::span<const double> p, double x) noexcept;
Polynomial poly_derivative(std::span<const double> p);
Polynomial poly_multiply(std::span<const double> p, std::span<const double> q);
Polynomial poly_axpy(double alpha, std::span<const double> p, std::span<const double> q);

/// Real zeros of a polynomial together with the residual bound used to accept them.
struct RootSet
{
    std::vector<double> roots;   ///< ascending, multiple roots reported once
    double residual_bound = 0.0; ///< relative to max|coeff| * max(1,|r|)^deg
};

///
/// All real roots of `coeffs` (ascending order) inside `interval`.
///
/// Roots are isolated between consecutive critical points (the real roots of
/// the derivative, found recursively) and refined by bisection to full
/// precision. Roots of modulus above one are found on the reversed polynomial
/// so evaluation never leaves the unit interval.
///
RootSet real_roots(std::span<const double> coeffs, std::optional<Interval> interval = std::nullopt);

struct Maximum
{
    double argmax;
    double value;
};

///
/// Maximize `f` over a closed interval: uniform grid scan with `grid` points
/// (endpoints included) followed by golden-section refinement of the best
/// cell. Values within a relative 1e-12 of each other are ties and resolve to
/// the smaller argument. Grid evaluations may run in parallel, so `f` must be
/// safe to call concurrently.
///
Maximum maximize_1d(const std::function<double(double)>& f, Interval interval, std::size_t grid,
                    double tol = 1e-12);

/// Number of worker threads allowed by HANKEL1_THREADS (0 or 1 = sequential).
std::size_t thread_limit();

/// Runs `body(i)` for i in [0, n), possibly spread over threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hankel1

#endif  // HANKEL1_NUMERICS_HPP
