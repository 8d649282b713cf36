#ifndef HANKEL1_HANKEL_CORE_HPP
#define HANKEL1_HANKEL_CORE_HPP

#include <optional>
#include <vector>

#include "hankel1/common.hpp"

namespace hankel1
{

///
/// A point of the extended complex plane: a finite value or infinity.
///
/// Infinity parametrizes the last standard basis vector, which is the limit of
/// the normalized geometric vector along the real axis.
///
class ExtendedScalar
{
public:
    ExtendedScalar() = default;
    ExtendedScalar(Complex z) : value_(z) {}
    ExtendedScalar(double z) : value_(Complex(z, 0.0)) {}

    static ExtendedScalar infinity() noexcept
    {
        ExtendedScalar s;
        s.value_.reset();
        return s;
    }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }

    /// Finite value; throws InvalidArgument for infinity.
    Complex value() const;

    /// `1/z` with `1/0 = inf` and `1/inf = 0`.
    ExtendedScalar reciprocal() const;

    /// `|z|`, +inf for infinity.
    double modulus() const noexcept;

    friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) noexcept
    {
        return a.value_ == b.value_;
    }

private:
    std::optional<Complex> value_ = Complex(0.0, 0.0);
};

/// Unit vector `(1, z, ..., z^{N-1}) / norm`, or `e_N` for infinity.
struct StructuredVector
{
    Index size;
    ExtendedScalar generator;
    CVector entries;
};

StructuredVector structured_vector(const ExtendedScalar& z, Index n);

/// Parameters of the rank-1 Hankel matrix `c z_M z_N^T` (or `c e_M e_N^T`).
struct Rank1HankelParams
{
    Complex c;
    ExtendedScalar z;
    Index rows;
    Index cols;
};

CMatrix build_rank1(const Rank1HankelParams& params);

/// Orthogonal projection onto Hankel matrices: each anti-diagonal replaced by its mean.
CMatrix hankel_project(const CMatrix& a);

bool is_hankel(const CMatrix& a, double tol = Tolerances{}.structural);

/// `A J_N`: reverses the column order, mapping Toeplitz matrices to Hankel ones.
CMatrix toeplitz_flip(const CMatrix& a);

/// `J_M A J_N`.
CMatrix reverse_both(const CMatrix& a);

/// `h_l = sum_{j+k=l} a_{j,k}` for l = 0 .. M+N-2, with the anti-diagonal lengths.
struct AntiDiagonalSums
{
    std::vector<Complex> values;
    std::vector<Index> counts;
};

AntiDiagonalSums antidiagonal_sums(const CMatrix& a);

///
/// Recovers `(c, z)` from a numerically rank-1 Hankel matrix.
///
/// The ratio `z` is the least-squares fit `x_{k+1} ~ z x_k` over the
/// dominant singular vector along the longer dimension. The infinity
/// parametrization competes, and whichever reproduces `H` better wins.
///
Rank1HankelParams extract_params(const CMatrix& h, double tol = Tolerances{}.structural);

}  // namespace hankel1

#endif  // HANKEL1_HANKEL_CORE_HPP
