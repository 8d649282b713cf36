#include "hankel1/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hankel1
{

namespace
{

RVector structured_real(const ExtendedScalar& z, Index n)
{
    if (z.is_finite() && z.value().imag() != 0.0)
        throw Error(ErrorKind::InvalidArgument, "spectral parameters must be real");
    return structured_vector(z, n).entries.real();
}

double lambda0_sq(const SymmetricEigen& eig)
{
    const double l0 = eig.values.size() ? std::abs(eig.values(0)) : 0.0;
    return std::max(l0 * l0, std::numeric_limits<double>::min());
}

}  // namespace

SecularFunction::SecularFunction(SymmetricEigen eig) : eig_(std::move(eig)) {}

RVector SecularFunction::coordinates(const ExtendedScalar& z) const
{
    return eig_.vectors.transpose() * structured_real(z, eig_.size());
}

RVector SecularFunction::flipped_coordinates(const ExtendedScalar& z) const
{
    const RVector v = structured_real(z, eig_.size());
    return eig_.vectors.transpose() * RVector(v.reverse());
}

double SecularFunction::sum(const RVector& mu, double lambda_sq, double collision_tol, double zero_tol) const
{
    const double cut = collision_tol * lambda0_sq(eig_);
    double acc       = 0.0;
    for (Index j = 0; j < mu.size(); ++j)
    {
        const double l = eig_.values(j);
        const double d = l * l - lambda_sq;
        const double m = mu(j) * mu(j);
        if (std::abs(d) <= cut)
        {
            if (m <= zero_tol)
                continue;
            throw Error(ErrorKind::PoleHit, "secular function evaluated at a pole");
        }
        acc += m / d;
    }
    return acc;
}

double SecularFunction::value(const ExtendedScalar& z, double lambda_sq, double collision_tol, double zero_tol) const
{
    return sum(coordinates(z), lambda_sq, collision_tol, zero_tol);
}

double SecularFunction::flipped_value(const ExtendedScalar& z, double lambda_sq, double collision_tol,
                                      double zero_tol) const
{
    return sum(flipped_coordinates(z), lambda_sq, collision_tol, zero_tol);
}

double secular_eval(const SymmetricEigen& eig, const ExtendedScalar& z, double lambda_sq, double tol)
{
    return SecularFunction(eig).value(z, lambda_sq, 1e-12, tol);
}

Eigen::MatrixXd DiagPlusRank1::dense() const
{
    const double s = added ? c : -c;
    return Eigen::MatrixXd(diagonal.asDiagonal()) + s * b * b.transpose();
}

double diag_rank1_det(const DiagPlusRank1& d)
{
    const Index n = d.diagonal.size();
    const double s = d.added ? d.c : -d.c;
    double det = 1.0;
    for (Index k = 0; k < n; ++k)
        det *= d.diagonal(k);
    double acc = 0.0;
    for (Index j = 0; j < n; ++j)
    {
        double prod = d.b(j) * d.b(j);
        for (Index k = 0; k < n; ++k)
            if (k != j)
                prod *= d.diagonal(k);
        acc += prod;
    }
    return det + s * acc;
}

bool psd_check(const DiagPlusRank1& d, double zero_tol)
{
    if (!(d.c > 0))
        throw Error(ErrorKind::HypothesisMismatch, "psd_check needs c > 0");
    const Index n = d.diagonal.size();
    Index negative = 0, positive = 0;
    for (Index j = 0; j < n; ++j)
    {
        if (d.diagonal(j) < -zero_tol)
            ++negative;
        else if (d.diagonal(j) > zero_tol)
            ++positive;
    }
    const bool case_added      = d.added && negative == 1;
    const bool case_subtracted = !d.added && negative == 0 && positive >= 1;
    if (!case_added && !case_subtracted)
        throw Error(ErrorKind::HypothesisMismatch, "diagonal sign pattern fits neither psd criterion");

    double acc = 0.0;
    for (Index j = 0; j < n; ++j)
    {
        const double dj = d.diagonal(j);
        if (std::abs(dj) <= zero_tol)
        {
            if (std::abs(d.b(j)) > zero_tol)
                return false;
            continue;
        }
        acc += d.b(j) * d.b(j) / (case_added ? -dj : dj);
    }
    return case_added ? acc >= 1.0 / d.c : acc <= 1.0 / d.c;
}

EigenvectorZeros eigenvector_zeros(const SymmetricEigen& eig, Index j, double tol)
{
    const RVector v = eig.vectors.col(j);
    EigenvectorZeros out{{}, std::abs(v(v.size() - 1)) <= tol};
    out.finite = real_roots(std::span<const double>(v.data(), static_cast<std::size_t>(v.size()))).roots;
    return out;
}

std::optional<Case1Result> case1_test(const SymmetricEigen& eig, double tol, double tie_tol)
{
    const Index n = eig.size();
    if (n < 2)
        return std::nullopt;
    const double l0 = eig.values(0), l1 = std::abs(eig.values(1));
    std::vector<Index> tied;
    for (Index j = 1; j < n; ++j)
        if (std::abs(std::abs(eig.values(j)) - l1) <= tie_tol * std::abs(l0))
            tied.push_back(j);
    auto in_tied = [&](Index j) { return std::find(tied.begin(), tied.end(), j) != tied.end(); };

    const EigenvectorZeros first = eigenvector_zeros(eig, tied.front(), tol);
    std::vector<ExtendedScalar> joint;
    const SecularFunction sf(eig);
    for (double x : first.finite)
    {
        const RVector mu = sf.coordinates(ExtendedScalar(x));
        bool common      = true;
        for (Index j : tied)
            common = common && std::abs(mu(j)) <= tol;
        if (common)
            joint.emplace_back(x);
    }
    bool inf_common = true;
    for (Index j : tied)
        inf_common = inf_common && std::abs(eig.vectors(n - 1, j)) <= tol;
    if (inf_common)
        joint.push_back(ExtendedScalar::infinity());

    for (const ExtendedScalar& z : joint)
    {
        const RVector mu = sf.coordinates(z);
        double f = 0.0, s_minus = 0.0, s_plus = 0.0;
        for (Index j = 0; j < n; ++j)
        {
            if (in_tied(j))
                continue;
            const double lj = eig.values(j), m = mu(j) * mu(j);
            f += m / (lj * lj - l1 * l1);
            s_minus += m / (lj - l1);
            s_plus += m / (lj + l1);
        }
        if (f >= 0.0)
            return Case1Result{z, CInterval{1.0 / s_minus, 1.0 / s_plus}};
    }
    return std::nullopt;
}

std::string_view to_string(SpectralCase c) noexcept
{
    switch (c)
    {
    case SpectralCase::AchievedLambda1: return "achieved-lambda1";
    case SpectralCase::Bisection: return "bisection";
    case SpectralCase::DegenerateSameSign: return "degenerate-same-sign";
    case SpectralCase::DegenerateOppositeSign: return "degenerate-opposite-sign";
    }
    return "unknown";
}

const Rank1HankelParams& SpectralSolution::require_params() const
{
    if (!params)
        throw Error(ErrorKind::NoRank1Solution,
                    "top eigenvalues of opposite sign: no real rank-1 Hankel matrix is guaranteed");
    return *params;
}

SpectralSolution degenerate_top(const SymmetricEigen& eig, const ExtendedScalar& z_choice, double tie_tol)
{
    const Index n   = eig.size();
    const double l0 = eig.values(0);
    SpectralSolution sol{std::abs(l0), std::nullopt, SpectralCase::DegenerateSameSign, std::nullopt, 0};
    for (Index j = 1; j < n; ++j)
        if (std::abs(std::abs(eig.values(j)) - std::abs(l0)) <= tie_tol * std::abs(l0) &&
            (eig.values(j) > 0) != (l0 > 0))
        {
            sol.spectral_case = SpectralCase::DegenerateOppositeSign;
            return sol;
        }

    const RVector mu = SecularFunction(eig).coordinates(z_choice);
    double s = 0.0;
    for (Index k = 0; k < n; ++k)
        s += mu(k) * mu(k) / (std::abs(l0) + (l0 > 0 ? eig.values(k) : -eig.values(k)));
    const double c = 1.0 / s;
    const double sign = l0 > 0 ? 1.0 : -1.0;
    sol.params     = Rank1HankelParams{Complex(sign * c, 0.0), z_choice, n, n};
    sol.c_interval = sign > 0 ? CInterval{0.0, c, true, false} : CInterval{-c, 0.0, false, true};
    return sol;
}

ShiftedErrorMatrices shifted_error_matrices(const SymmetricEigen& eig, const ExtendedScalar& z, double c,
                                            double lambda)
{
    const RVector mu = SecularFunction(eig).coordinates(z);
    const RVector ones = RVector::Constant(eig.size(), lambda);
    return {DiagPlusRank1{ones - eig.values, mu, c, true}, DiagPlusRank1{ones + eig.values, mu, c, false}};
}

namespace
{

struct BranchMax
{
    Maximum direct;
    Maximum flipped;
};

BranchMax inner_maxima(const SecularFunction& sf, double x, const SpectralOptions& opts)
{
    const double s = x * x;
    BranchMax out;
    out.direct  = maximize_1d([&](double z) { return sf.sum(sf.coordinates(ExtendedScalar(z)), s, 0.0, 0.0); },
                              Interval{-1.0, 1.0}, opts.grid, opts.inner_tol);
    out.flipped = maximize_1d(
        [&](double z) { return sf.sum(sf.flipped_coordinates(ExtendedScalar(z)), s, 0.0, 0.0); },
        Interval{-1.0 + opts.flip_clip, 1.0 - opts.flip_clip}, opts.grid, opts.inner_tol);
    return out;
}

SpectralSolution solve_positive(const RMatrix& a, const SymmetricEigen& eig, const SpectralOptions& opts)
{
    const Index n   = eig.size();
    const double l0 = eig.values(0);
    const double l1 = n > 1 ? std::abs(eig.values(1)) : 0.0;

    if (l1 <= opts.tie_tol * l0)
    {
        try
        {
            const Rank1HankelParams p = extract_params(to_complex(a), Tolerances{}.structural);
            if (p.z.is_infinite() || p.z.value().imag() == 0.0)
            {
                const double c = p.c.real();
                return {l1, Rank1HankelParams{Complex(c, 0.0), p.z, n, n}, SpectralCase::AchievedLambda1,
                        CInterval{c, c}, 0};
            }
        }
        catch (const Error&)
        {
        }
    }
    if (n == 1 || l0 - l1 <= opts.tie_tol * l0)
        return degenerate_top(eig, opts.z_choice, opts.tie_tol);

    if (const auto hit = case1_test(eig, opts.zero_tol, opts.tie_tol))
    {
        const double c = hit->c_interval.lo;
        return {l1, Rank1HankelParams{Complex(c, 0.0), hit->z, n, n}, SpectralCase::AchievedLambda1,
                hit->c_interval, 0};
    }

    const SecularFunction sf(eig);
    const double eps   = opts.eps.value_or(1e-12 * l0);
    double lo = l1, hi = l0;
    std::size_t iterations = 0;
    std::optional<double> exact;
    while (hi - lo > eps)
    {
        const double x      = 0.5 * (lo + hi);
        const BranchMax m   = inner_maxima(sf, x, opts);
        const double w      = std::max(m.direct.value, m.flipped.value);
        ++iterations;
        if (std::abs(w) * l0 * l0 <= opts.eps_w)
        {
            exact = x;
            break;
        }
        if (w > 0)
            hi = x;
        else
            lo = x;
        if (iterations > 10000)
            break;
    }
    const double lt     = exact.value_or(0.5 * (lo + hi));
    const BranchMax m   = inner_maxima(sf, lt, opts);
    const double scale  = std::max({std::abs(m.direct.value), std::abs(m.flipped.value), 1.0 / (l0 * l0)});
    const bool use_direct = m.direct.value >= m.flipped.value - 1e-9 * scale;
    const ExtendedScalar z =
        use_direct ? ExtendedScalar(m.direct.argmax) : ExtendedScalar(m.flipped.argmax).reciprocal();

    const RVector mu = sf.coordinates(z);
    double s = 0.0;
    for (Index k = 0; k < n; ++k)
        s += mu(k) * mu(k) / (eig.values(k) - lt);
    return {lt, Rank1HankelParams{Complex(1.0 / s, 0.0), z, n, n}, SpectralCase::Bisection, std::nullopt,
            iterations};
}

}  // namespace

SpectralSolution solve_spectral(const RMatrix& a, const SpectralOptions& opts)
{
    require_valid(a);
    if (a.rows() != a.cols())
        throw Error(ErrorKind::AsymmetricInput, "spectral solver needs a square matrix");
    if (a.norm() == 0.0)
        throw Error(ErrorKind::RankZero, "the zero matrix has no rank-1 Hankel approximation");
    SymmetricEigen eig;
    try
    {
        eig = eig_symmetric(a, Tolerances{}.structural, opts.tie_tol);
    }
    catch (const Error& e)
    {
        if (e.kind() == ErrorKind::NonSymmetric)
            throw Error(ErrorKind::AsymmetricInput, "spectral solver needs a symmetric matrix");
        throw;
    }

    if (eig.values(0) > 0)
        return solve_positive(a, eig, opts);

    // Largest modulus is negative: solve for -A and negate c.
    SymmetricEigen neg{-eig.values, eig.vectors};
    SpectralSolution sol = solve_positive(RMatrix(-a), neg, opts);
    if (sol.params)
        sol.params->c = -sol.params->c;
    if (sol.c_interval)
        sol.c_interval = CInterval{-sol.c_interval->hi, -sol.c_interval->lo, sol.c_interval->hi_open,
                                   sol.c_interval->lo_open};
    return sol;
}

}  // namespace hankel1
