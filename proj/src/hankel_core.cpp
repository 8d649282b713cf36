#include "hankel1/hankel_core.hpp"

#include <algorithm>
#include <cmath>

#include "hankel1/numerics.hpp"

namespace hankel1
{

Complex ExtendedScalar::value() const
{
    if (!value_)
        throw Error(ErrorKind::InvalidArgument, "value() called on infinity");
    return *value_;
}

ExtendedScalar ExtendedScalar::reciprocal() const
{
    if (!value_)
        return ExtendedScalar(0.0);
    if (*value_ == Complex(0.0, 0.0))
        return infinity();
    return ExtendedScalar(Complex(1.0, 0.0) / *value_);
}

double ExtendedScalar::modulus() const noexcept
{
    return value_ ? std::abs(*value_) : std::numeric_limits<double>::infinity();
}

StructuredVector structured_vector(const ExtendedScalar& z, Index n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "structured vector size must be positive");
    CVector v = CVector::Zero(n);
    if (z.is_infinite())
    {
        v(n - 1) = 1.0;
        return {n, z, v};
    }
    const Complex zv = z.value();
    const double r   = std::abs(zv);
    if (r <= 1.0)
    {
        Complex p = 1.0;
        for (Index k = 0; k < n; ++k, p *= zv)
            v(k) = p;
        v /= v.norm();
        return {n, z, v};
    }
    // (1, z, ..., z^{n-1}) = z^{n-1} J (1, w, ..., w^{n-1}) with w = 1/z.
    const Complex w     = 1.0 / zv;
    const Complex phase = zv / r;
    Complex p = 1.0;
    for (Index k = 0; k < n; ++k, p *= w)
        v(n - 1 - k) = p;
    v /= v.norm();
    Complex ph = 1.0;
    for (Index k = 0; k + 1 < n; ++k)
        ph *= phase;
    v *= ph;
    return {n, z, v};
}

CMatrix build_rank1(const Rank1HankelParams& params)
{
    const CVector zm = structured_vector(params.z, params.rows).entries;
    const CVector zn = structured_vector(params.z, params.cols).entries;
    return params.c * zm * zn.transpose();
}

AntiDiagonalSums antidiagonal_sums(const CMatrix& a)
{
    const Index m = a.rows(), n = a.cols();
    AntiDiagonalSums s;
    s.values.assign(static_cast<std::size_t>(m + n - 1), Complex(0.0, 0.0));
    s.counts.assign(static_cast<std::size_t>(m + n - 1), 0);
    for (Index j = 0; j < m; ++j)
        for (Index k = 0; k < n; ++k)
        {
            s.values[static_cast<std::size_t>(j + k)] += a(j, k);
            s.counts[static_cast<std::size_t>(j + k)] += 1;
        }
    return s;
}

CMatrix hankel_project(const CMatrix& a)
{
    const AntiDiagonalSums s = antidiagonal_sums(a);
    CMatrix p(a.rows(), a.cols());
    for (Index j = 0; j < a.rows(); ++j)
        for (Index k = 0; k < a.cols(); ++k)
        {
            const auto l = static_cast<std::size_t>(j + k);
            p(j, k)      = s.values[l] / static_cast<double>(s.counts[l]);
        }
    return p;
}

bool is_hankel(const CMatrix& a, double tol)
{
    const CMatrix p    = hankel_project(a);
    const double scale = std::max(1.0, a.size() ? a.cwiseAbs().maxCoeff() : 0.0);
    return (a - p).size() == 0 || (a - p).cwiseAbs().maxCoeff() <= tol * scale;
}

CMatrix toeplitz_flip(const CMatrix& a) { return a.rowwise().reverse(); }

CMatrix reverse_both(const CMatrix& a) { return a.reverse(); }

namespace
{

/// Least-squares ratio of consecutive entries, computed on the side that keeps it at most one in modulus.
ExtendedScalar ratio_estimate(const CVector& x)
{
    const Index k = x.size();
    if (k < 2)
        return ExtendedScalar(0.0);
    Complex fwd = 0.0, bwd = 0.0;
    double head = 0.0, tail = 0.0;
    for (Index i = 0; i + 1 < k; ++i)
    {
        fwd += std::conj(x(i)) * x(i + 1);
        bwd += std::conj(x(i + 1)) * x(i);
        head += std::norm(x(i));
        tail += std::norm(x(i + 1));
    }
    if (head >= tail)
        return ExtendedScalar(fwd / head);
    if (tail == 0.0)
        return ExtendedScalar(0.0);
    return ExtendedScalar(bwd / tail).reciprocal();
}

struct Fit
{
    Rank1HankelParams params;
    double residual;
};

Fit fit_coefficient(const CMatrix& h, const ExtendedScalar& z)
{
    const CVector zm = structured_vector(z, h.rows()).entries;
    const CVector zn = structured_vector(z, h.cols()).entries;
    const Complex c  = zm.adjoint() * h * zn.conjugate();
    Rank1HankelParams params{c, z, h.rows(), h.cols()};
    return {params, (h - build_rank1(params)).norm()};
}

}  // namespace

Rank1HankelParams extract_params(const CMatrix& h, double tol)
{
    require_valid(h);
    if (h.norm() == 0.0)
        throw Error(ErrorKind::NotRank1, "zero matrix has no rank-1 parametrization");
    const Svd s = svd(h);
    if (s.sigma.size() > 1 && s.sigma(1) > tol * s.sigma(0))
        throw Error(ErrorKind::NotRank1, "second singular value exceeds tolerance");
    if (!is_hankel(h, tol))
        throw Error(ErrorKind::NotHankel, "matrix is not Hankel within tolerance");

    const CVector x = h.rows() >= h.cols() ? CVector(s.u.col(0)) : CVector(s.v.col(0).conjugate());
    Fit best        = fit_coefficient(h, ExtendedScalar::infinity());
    const ExtendedScalar z = ratio_estimate(x);
    const Fit finite       = fit_coefficient(h, z);
    if (finite.residual <= best.residual)
        best = finite;

    if (best.residual > std::sqrt(tol) * h.norm())
        throw Error(ErrorKind::NotHankel, "matrix is not a rank-1 Hankel matrix");
    return best.params;
}

}  // namespace hankel1
