#ifndef HANKEL1_TESTS_SUPPORT_HPP
#define HANKEL1_TESTS_SUPPORT_HPP

// Test-only oracles. They use dense Eigen products on explicitly formed
// vectors and never call the solver internals they are meant to check.

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hankel1/hankel1.hpp"

namespace testing
{

using hankel1::CMatrix;
using hankel1::Complex;
using hankel1::Index;
using hankel1::RMatrix;

inline RMatrix random_real(std::mt19937_64& rng, Index m, Index n)
{
    std::normal_distribution<double> g;
    RMatrix a(m, n);
    for (Index j = 0; j < m; ++j)
        for (Index k = 0; k < n; ++k)
            a(j, k) = g(rng);
    return a;
}

inline CMatrix random_complex(std::mt19937_64& rng, Index m, Index n)
{
    std::normal_distribution<double> g;
    CMatrix a(m, n);
    for (Index j = 0; j < m; ++j)
        for (Index k = 0; k < n; ++k)
            a(j, k) = Complex(g(rng), g(rng));
    return a;
}

inline RMatrix random_symmetric(std::mt19937_64& rng, Index n)
{
    const RMatrix b = random_real(rng, n, n);
    return 0.5 * (b + b.transpose());
}

/// Normalized (1, z, ..., z^{n-1}), formed directly; e_n for |z| = inf.
inline Eigen::VectorXcd geometric(Complex z, Index n)
{
    Eigen::VectorXcd v(n);
    if (!std::isfinite(std::abs(z)))
    {
        v.setZero();
        v(n - 1) = 1.0;
        return v;
    }
    Complex p = 1.0;
    for (Index k = 0; k < n; ++k, p *= z)
        v(k) = p;
    return v / v.norm();
}

/// Best Frobenius error over c for a fixed generator: sqrt(|A|^2 - |z_M^* A conj z_N|^2).
inline double frobenius_error_at(const CMatrix& a, Complex z)
{
    const Eigen::VectorXcd zm = geometric(z, a.rows());
    const Eigen::VectorXcd zn = geometric(z, a.cols());
    const Complex c           = zm.adjoint() * a * zn.conjugate();
    const CMatrix e           = a - c * zm * zn.transpose();
    return e.norm();
}

/// Dense real-line scan through z = t and z = 1/t, t in [-1, 1], plus infinity.
inline double brute_frobenius_real(const CMatrix& a, int samples = 20001)
{
    double best = frobenius_error_at(a, std::numeric_limits<double>::infinity());
    for (int i = 0; i < samples; ++i)
    {
        const double t = -1.0 + 2.0 * i / (samples - 1);
        best = std::min(best, frobenius_error_at(a, t));
        if (t != 0.0)
            best = std::min(best, frobenius_error_at(a, 1.0 / t));
    }
    return best;
}

/// Uniform grid on [lo, hi] plus the point at infinity.
inline double brute_frobenius_interval(const CMatrix& a, double lo, double hi, int samples)
{
    double best = frobenius_error_at(a, std::numeric_limits<double>::infinity());
    for (int i = 0; i < samples; ++i)
        best = std::min(best, frobenius_error_at(a, lo + (hi - lo) * i / (samples - 1)));
    return best;
}

/// Dense polar scan of the disc and of its image under z -> 1/z.
inline double brute_frobenius_complex(const CMatrix& a, int radii = 201, int angles = 720)
{
    double best = frobenius_error_at(a, std::numeric_limits<double>::infinity());
    for (int i = 0; i < radii; ++i)
        for (int j = 0; j < angles; ++j)
        {
            const Complex z = std::polar(static_cast<double>(i) / (radii - 1), 2.0 * M_PI * j / angles);
            best = std::min(best, frobenius_error_at(a, z));
            if (i > 0)
                best = std::min(best, frobenius_error_at(a, 1.0 / z));
        }
    return best;
}

/// Largest eigenvalue modulus of a symmetric matrix.
inline double sym_norm(const Eigen::MatrixXd& s)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(s, Eigen::EigenvaluesOnly);
    return e.eigenvalues().cwiseAbs().maxCoeff();
}

/// min over real c of |A - c z z^T|_2 by golden section (the map is convex in c).
inline double spectral_error_at(const Eigen::MatrixXd& a, const Eigen::VectorXd& z, double bound, double* c_out = nullptr)
{
    const Eigen::MatrixXd zz = z * z.transpose();
    auto f = [&](double c) { return sym_norm(a - c * zz); };
    double lo = -bound, hi = bound;
    const double g = 0.6180339887498949;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 90; ++it)
    {
        if (f1 <= f2)
        {
            hi = x2; x2 = x1; f2 = f1; x1 = hi - g * (hi - lo); f1 = f(x1);
        }
        else
        {
            lo = x1; x1 = x2; f1 = f2; x2 = lo + g * (hi - lo); f2 = f(x2);
        }
    }
    if (c_out)
        *c_out = f1 <= f2 ? x1 : x2;
    return std::min(f1, f2);
}

inline Eigen::VectorXd real_geometric(double z, Index n)
{
    return geometric(Complex(z, 0.0), n).real();
}

///
/// Nested-grid upper bound on the spectral optimum: an outer scan of real z
/// through z = t and z = 1/t plus infinity, golden search over c inside, and a
/// golden refinement in t around the best scan point.
///
/// Uniform z grid on [lo, hi] plus infinity, with c found by a 1-D search per z.
inline double grid_spectral_oracle(const RMatrix& a_in, double lo, double hi, int samples)
{
    const Eigen::MatrixXd a = a_in;
    const double bound      = 2.0 * sym_norm(a) + 1.0;
    double best = spectral_error_at(a, real_geometric(std::numeric_limits<double>::infinity(), a.rows()), bound);
    for (int i = 0; i < samples; ++i)
        best = std::min(best, spectral_error_at(a, real_geometric(lo + (hi - lo) * i / (samples - 1), a.rows()), bound));
    return best;
}

inline double nested_spectral_oracle(const RMatrix& a_in, int samples = 801)
{
    const Eigen::MatrixXd a = a_in;
    const Index n           = a.rows();
    const double bound      = 2.0 * sym_norm(a) + 1.0;
    auto at_t = [&](double t, bool inverted) {
        if (inverted)
            return t == 0.0 ? real_geometric(std::numeric_limits<double>::infinity(), n) : real_geometric(1.0 / t, n);
        return real_geometric(t, n);
    };
    double best = spectral_error_at(a, at_t(0.0, true), bound);
    double best_t = 0.0;
    bool best_inv = true;
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < samples; ++i)
        {
            const double t = -1.0 + 2.0 * i / (samples - 1);
            const double v = spectral_error_at(a, at_t(t, b == 1), bound);
            if (v < best)
            {
                best = v;
                best_t = t;
                best_inv = b == 1;
            }
        }
    const double h = 2.0 / (samples - 1);
    double lo = std::max(-1.0, best_t - h), hi = std::min(1.0, best_t + h);
    const double g = 0.6180339887498949;
    for (int it = 0; it < 60; ++it)
    {
        const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        const double f1 = spectral_error_at(a, at_t(x1, best_inv), bound);
        const double f2 = spectral_error_at(a, at_t(x2, best_inv), bound);
        best = std::min(best, std::min(f1, f2));
        if (f1 <= f2)
            hi = x2;
        else
            lo = x1;
    }
    return best;
}

inline double min_eigenvalue(const Eigen::MatrixXd& s)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(s, Eigen::EigenvaluesOnly);
    return e.eigenvalues().minCoeff();
}

}  // namespace testing

#endif  // HANKEL1_TESTS_SUPPORT_HPP
