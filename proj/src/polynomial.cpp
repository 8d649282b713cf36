#include <algorithm>
#include <cmath>

#include "hankel1/numerics.hpp"

namespace hankel1
{

double poly_eval(std::span<const double> p, double x) noexcept
{
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial poly_derivative(std::span<const double> p)
{
    if (p.size() <= 1)
        return {0.0};
    Polynomial d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k)
        d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

Polynomial poly_multiply(std::span<const double> p, std::span<const double> q)
{
    if (p.empty() || q.empty())
        return {};
    Polynomial r(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            r[i + j] += p[i] * q[j];
    return r;
}

Polynomial poly_axpy(double alpha, std::span<const double> p, std::span<const double> q)
{
    Polynomial r(std::max(p.size(), q.size()), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] += alpha * p[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        r[i] += q[i];
    return r;
}

namespace
{

constexpr double residual_factor = 1e-12;

void trim(Polynomial& p)
{
    while (!p.empty() && p.back() == 0.0)
        p.pop_back();
}

double bisect(const Polynomial& p, double a, double b, double pa)
{
    for (int it = 0; it < 400; ++it)
    {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b)
            break;
        const double pm = poly_eval(p, m);
        if (pm == 0.0)
            return m;
        if ((pm < 0) == (pa < 0))
        {
            a  = m;
            pa = pm;
        }
        else
            b = m;
    }
    return 0.5 * (a + b);
}

/// Roots of `p` (trimmed, non-zero) in [lo, hi]; `bound` is the acceptance residual.
std::vector<double> roots_in(const Polynomial& p, double lo, double hi, double bound)
{
    const std::size_t deg = p.size() - 1;
    std::vector<double> out;
    if (deg == 0)
        return out;
    if (deg == 1)
    {
        const double r = -p[0] / p[1];
        if (r >= lo && r <= hi)
            out.push_back(r);
        return out;
    }

    Polynomial d = poly_derivative(p);
    trim(d);
    const double dscale = std::abs(*std::max_element(d.begin(), d.end(), [](double x, double y) {
        return std::abs(x) < std::abs(y);
    }));
    std::vector<double> cuts{lo};
    for (double c : roots_in(d, lo, hi, residual_factor * dscale))
        if (c > cuts.back())
            cuts.push_back(c);
    if (hi > cuts.back())
        cuts.push_back(hi);

    std::vector<double> vals(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i)
        vals[i] = poly_eval(p, cuts[i]);

    for (std::size_t i = 0; i < cuts.size(); ++i)
    {
        if (std::abs(vals[i]) <= bound)
            out.push_back(cuts[i]);
        if (i + 1 < cuts.size() && std::abs(vals[i]) > bound && std::abs(vals[i + 1]) > bound &&
            (vals[i] < 0) != (vals[i + 1] < 0))
            out.push_back(bisect(p, cuts[i], cuts[i + 1], vals[i]));
    }
    return out;
}

/// Collapses clusters of candidates that represent one (multiple) root.
std::vector<double> merge(std::vector<double> roots, const Polynomial& p, double scale)
{
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    const std::size_t deg = p.size() - 1;
    auto bound_at         = [&](double x) {
        return residual_factor * scale * std::pow(std::max(1.0, std::abs(x)), static_cast<double>(deg));
    };
    for (double r : roots)
    {
        if (!out.empty())
        {
            const double prev = out.back();
            const double mid  = 0.5 * (prev + r);
            const bool close  = std::abs(r - prev) <= 1e-10 * std::max(1.0, std::abs(r));
            if (close || (std::abs(r - prev) <= 1e-6 * std::max(1.0, std::abs(r)) &&
                          std::abs(poly_eval(p, mid)) <= 10.0 * bound_at(mid)))
                continue;
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace

RootSet real_roots(std::span<const double> coeffs, std::optional<Interval> interval)
{
    Polynomial p(coeffs.begin(), coeffs.end());
    trim(p);
    if (p.empty())
        throw Error(ErrorKind::DegenerateZeroPolynomial, "polynomial is identically zero");
    for (double c : p)
        if (!std::isfinite(c))
            throw Error(ErrorKind::InvalidArgument, "polynomial has non-finite coefficients");

    double scale = 0.0;
    for (double c : p)
        scale = std::max(scale, std::abs(c));
    const double bound = residual_factor * scale;

    // Inner roots directly, outer roots as reciprocals of roots of the reversal.
    std::vector<double> cand = roots_in(p, -1.0, 1.0, bound);
    Polynomial rev(p.rbegin(), p.rend());
    trim(rev);
    for (double w : roots_in(rev, -1.0, 1.0, bound))
        if (w != 0.0 && std::abs(w) < 1.0)
            cand.push_back(1.0 / w);

    std::vector<double> merged = merge(std::move(cand), p, scale);
    RootSet out;
    out.residual_bound = residual_factor;
    for (double r : merged)
        if (!interval || interval->contains(r))
            out.roots.push_back(r);
    return out;
}

}  // namespace hankel1
