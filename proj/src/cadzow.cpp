#include "hankel1/cadzow.hpp"

#include <algorithm>
#include <cmath>

#include "hankel1/numerics.hpp"

namespace hankel1
{

std::string_view to_string(CadzowTerminal t) noexcept
{
    switch (t)
    {
    case CadzowTerminal::ZeroLimit: return "ZeroLimit";
    case CadzowTerminal::Rank1HankelFixedPoint: return "Rank1HankelFixedPoint";
    case CadzowTerminal::MaxIterations: return "MaxIterations";
    }
    return "Unknown";
}

std::vector<double> CadzowTrace::sigma_ratios() const
{
    std::vector<double> out;
    for (std::size_t j = 1; j < sigmas.size(); ++j)
        out.push_back(sigmas[j - 1] > 0 ? sigmas[j] / sigmas[j - 1] : 0.0);
    return out;
}

double fixed_point_residual(const CMatrix& x)
{
    return (hankel_project(x) - x).norm() / std::max(1.0, x.norm());
}

CadzowTrace cadzow_iterate(const CMatrix& a, const CadzowOptions& opts)
{
    require_valid(a);
    const double norm_a = a.norm();
    if (norm_a == 0.0)
        throw Error(ErrorKind::RankZero, "the zero matrix has no rank-1 approximation");

    CadzowTrace trace;
    Svd s          = svd(a);
    CMatrix x      = s.leading_term();
    double sigma   = s.sigma(0);
    auto ratio_of  = [](const Svd& d) { return d.sigma.size() > 1 ? d.sigma(1) / d.sigma(0) : 0.0; };
    trace.sigmas.push_back(sigma);
    trace.tail_ratio = ratio_of(s);

    auto hankel_gap = [](const CMatrix& m) { return (hankel_project(m) - m).norm(); };
    if (hankel_gap(x) <= opts.tol * sigma)
        trace.terminal = CadzowTerminal::Rank1HankelFixedPoint;
    else
    {
        for (std::size_t j = 1; j <= opts.max_iter; ++j)
        {
            const CMatrix projected = hankel_project(x);
            trace.iterations        = j;
            if (projected.norm() == 0.0)
            {
                trace.sigmas.push_back(0.0);
                trace.iterate_deltas.push_back(x.norm());
                x                = CMatrix::Zero(a.rows(), a.cols());
                trace.tail_ratio = 0.0;
                trace.terminal   = CadzowTerminal::ZeroLimit;
                break;
            }
            s                 = svd(projected);
            const CMatrix next = s.leading_term();
            sigma             = s.sigma(0);
            trace.sigmas.push_back(sigma);
            trace.iterate_deltas.push_back((next - x).norm());
            trace.tail_ratio = ratio_of(s);
            x                = next;

            if (sigma <= opts.tol_zero * norm_a)
            {
                trace.terminal = CadzowTerminal::ZeroLimit;
                break;
            }
            if (trace.iterate_deltas.back() <= opts.tol * sigma && hankel_gap(x) <= opts.tol * sigma)
            {
                trace.terminal = CadzowTerminal::Rank1HankelFixedPoint;
                break;
            }
        }
    }

    trace.final_iterate = x;
    if (trace.terminal == CadzowTerminal::Rank1HankelFixedPoint)
    {
        try
        {
            trace.params = extract_params(x, std::max(Tolerances{}.structural, 100.0 * opts.tol));
        }
        catch (const Error&)
        {
            trace.params.reset();
        }
    }
    const CMatrix err     = a - x;
    trace.error_frobenius = frobenius_norm(err);
    trace.error_spectral  = spectral_norm(err);
    return trace;
}

}  // namespace hankel1
