#include "hankel1/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hankel1
{

namespace
{

/// sqrt(sum_{k<n} r^{2k}) for 0 <= r <= 1.
double geometric_norm(double r, Index n)
{
    const double r2 = r * r;
    double acc = 0.0, p = 1.0;
    for (Index k = 0; k < n; ++k, p *= r2)
        acc += p;
    return std::sqrt(acc);
}

/// sum_l h_l x^l by Horner's rule.
Complex horner(const std::vector<Complex>& h, Complex x)
{
    Complex acc = 0.0;
    for (auto it = h.rbegin(); it != h.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

/// sum_l h_l x^{L-l}.
Complex horner_reversed(const std::vector<Complex>& h, Complex x)
{
    Complex acc = 0.0;
    for (const Complex& c : h)
        acc = acc * x + c;
    return acc;
}

/// Chordal distance on the Riemann sphere.
double chordal(const ExtendedScalar& a, const ExtendedScalar& b)
{
    if (a.is_infinite() && b.is_infinite())
        return 0.0;
    if (a.is_infinite() || b.is_infinite())
    {
        const double r = a.is_infinite() ? b.modulus() : a.modulus();
        return 2.0 / std::sqrt(1.0 + r * r);
    }
    const Complex x = a.value(), y = b.value();
    return 2.0 * std::abs(x - y) / std::sqrt((1.0 + std::norm(x)) * (1.0 + std::norm(y)));
}

double argument_key(const ExtendedScalar& z)
{
    if (z.is_infinite() || z.value() == Complex(0.0, 0.0))
        return 0.0;
    double t = std::arg(z.value());
    if (t < 0)
        t += 2.0 * std::numbers::pi;
    if (t > 2.0 * std::numbers::pi - 1e-9)
        t = 0.0;
    return t;
}

/// Ordering of tied maximizers: smaller |z| first, then smaller argument, infinity last.
bool precedes(const ExtendedScalar& a, const ExtendedScalar& b)
{
    if (a.is_infinite() != b.is_infinite())
        return b.is_infinite();
    if (a.is_infinite())
        return false;
    const double ra = a.modulus(), rb = b.modulus();
    if (std::abs(ra - rb) > 1e-9 * std::max(1.0, std::max(ra, rb)))
        return ra < rb;
    return argument_key(a) < argument_key(b) - 1e-9;
}

struct Candidate
{
    ExtendedScalar z;
    double value;
};

FrobeniusSolution assemble(const CMatrix& a, const FrobeniusObjective& obj, std::vector<Candidate> cands,
                           FrobeniusMode mode, const FrobeniusOptions& opts)
{
    // Drop duplicates, keeping the better value.
    std::vector<Candidate> unique;
    for (const Candidate& c : cands)
    {
        if (!std::isfinite(c.value))
            continue;
        auto it = std::find_if(unique.begin(), unique.end(),
                               [&](const Candidate& u) { return chordal(u.z, c.z) <= 1e-6; });
        if (it == unique.end())
            unique.push_back(c);
        else if (c.value > it->value)
            *it = c;
    }
    if (unique.empty())
        throw Error(ErrorKind::InvalidArgument, "no finite candidate for the objective");

    double best = 0.0;
    for (const Candidate& c : unique)
        best = std::max(best, c.value);
    std::vector<Candidate> tied;
    for (const Candidate& c : unique)
        if (c.value >= best * (1.0 - opts.tie_tol))
            tied.push_back(c);
    std::size_t primary = 0;
    for (std::size_t i = 1; i < tied.size(); ++i)
        if (precedes(tied[i].z, tied[primary].z))
            primary = i;

    auto params_for = [&](const ExtendedScalar& z) {
        return Rank1HankelParams{obj.value(z), z, a.rows(), a.cols()};
    };

    FrobeniusSolution sol{params_for(tied[primary].z), 0.0, 0.0, 0.0, mode, false, {}};
    sol.objective_value = std::abs(sol.params.c);
    const CMatrix err   = a - sol.approximant();
    sol.error_frobenius = frobenius_norm(err);
    sol.error_spectral  = spectral_norm(err);
    for (std::size_t i = 0; i < tied.size(); ++i)
        if (i != primary)
            sol.alternates.push_back(params_for(tied[i].z));
    std::sort(sol.alternates.begin(), sol.alternates.end(),
              [](const Rank1HankelParams& x, const Rank1HankelParams& y) { return precedes(x.z, y.z); });
    sol.svd_coincident = svd_coincidence_certificate(a, sol, opts.certificate_tol);
    return sol;
}

void require_nonzero(const CMatrix& a)
{
    require_valid(a);
    if (a.norm() == 0.0)
        throw Error(ErrorKind::RankZero, "the zero matrix has no rank-1 Hankel approximation");
}

bool needs_flip(const CMatrix& a)
{
    return std::abs(a(0, 0)) < std::abs(a(a.rows() - 1, a.cols() - 1));
}

/// Real candidate points of the (possibly flipped) matrix, mapped back to the original orientation.
std::vector<ExtendedScalar> real_candidates(const RMatrix& a)
{
    const bool flip  = needs_flip(to_complex(a));
    const RMatrix b  = flip ? RMatrix(a.reverse()) : a;
    const Polynomial r = critical_polynomial(b);

    std::vector<double> h;
    for (const Complex& v : antidiagonal_sums(to_complex(b)).values)
        h.push_back(v.real());
    std::optional<Interval> restrict;
    const bool all_nonneg = std::all_of(h.begin(), h.end(), [](double x) { return x >= 0; });
    bool alternating = true;
    for (std::size_t l = 0; l < h.size(); ++l)
        alternating = alternating && (l % 2 == 0 ? h[l] >= 0 : h[l] <= 0);
    if (all_nonneg && h.front() >= h.back())
        restrict = Interval{0.0, std::numeric_limits<double>::infinity()};
    else if (alternating)
        restrict = Interval{-std::numeric_limits<double>::infinity(), 0.0};

    std::vector<ExtendedScalar> out{ExtendedScalar(0.0)};
    bool constant = false;
    try
    {
        for (double x : real_roots(r, restrict).roots)
        {
            out.emplace_back(x);
            // The restriction bounds |G(-x)| by |G(x)|; mirrors enter only to expose exact ties.
            if (restrict && x != 0.0)
                out.emplace_back(-x);
        }
    }
    catch (const Error& e)
    {
        if (e.kind() != ErrorKind::DegenerateZeroPolynomial)
            throw;
        constant = true;  // the objective is constant on the real line
    }
    if (!constant)
        out.push_back(ExtendedScalar::infinity());
    if (flip)
        for (ExtendedScalar& z : out)
            z = z.reciprocal();
    return out;
}

}  // namespace

FrobeniusObjective::FrobeniusObjective(const CMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), sums_(antidiagonal_sums(a).values)
{
    reversed_.assign(sums_.rbegin(), sums_.rend());
}

Complex FrobeniusObjective::evaluate(const std::vector<Complex>& h, Index m, Index n, const ExtendedScalar& z)
{
    if (z.is_infinite())
        return h.back();
    const Complex zv = z.value();
    const double r   = std::abs(zv);
    if (r <= 1.0)
        return horner(h, std::conj(zv)) / (geometric_norm(r, m) * geometric_norm(r, n));
    const Complex w      = 1.0 / zv;
    const Complex cphase = std::conj(zv) / r;
    Complex ph = 1.0;
    for (std::size_t k = 0; k + 1 < h.size(); ++k)
        ph *= cphase;
    const double rw = std::abs(w);
    return ph * horner_reversed(h, std::conj(w)) / (geometric_norm(rw, m) * geometric_norm(rw, n));
}

Complex FrobeniusObjective::value(const ExtendedScalar& z) const { return evaluate(sums_, rows_, cols_, z); }

Complex FrobeniusObjective::flipped_value(const ExtendedScalar& z) const
{
    return evaluate(reversed_, rows_, cols_, z);
}

Complex objective(const CMatrix& a, const ExtendedScalar& z) { return FrobeniusObjective(a).value(z); }

std::string_view to_string(FrobeniusMode mode) noexcept
{
    return mode == FrobeniusMode::RealSearch ? "real-search" : "complex-search";
}

Polynomial critical_polynomial(const RMatrix& a)
{
    const Index m = a.rows(), n = a.cols();
    Polynomial h;
    for (const Complex& v : antidiagonal_sums(to_complex(a)).values)
        h.push_back(v.real());
    auto even_powers = [](Index k) {
        Polynomial s(static_cast<std::size_t>(2 * k - 1), 0.0);
        for (Index j = 0; j < k; ++j)
            s[static_cast<std::size_t>(2 * j)] = 1.0;
        return s;
    };
    const Polynomial q     = poly_multiply(even_powers(m), even_powers(n));
    const Polynomial dh    = poly_derivative(h);
    const Polynomial dq    = poly_derivative(q);
    const Polynomial left  = poly_multiply(dh, q);
    const Polynomial right = poly_multiply(h, dq);
    return poly_axpy(2.0, left, poly_axpy(-1.0, right, {}));
}

FrobeniusSolution solve_real(const RMatrix& a, const FrobeniusOptions& opts)
{
    const CMatrix ac = to_complex(a);
    require_nonzero(ac);
    const FrobeniusObjective obj(ac);
    std::vector<Candidate> cands;
    for (const ExtendedScalar& z : real_candidates(a))
        cands.push_back({z, std::abs(obj.value(z))});
    return assemble(ac, obj, std::move(cands), FrobeniusMode::RealSearch, opts);
}

namespace
{

/// Maximizes |G|^2 over the closed unit disc from a starting point.
Candidate ascend(const std::function<Complex(Complex)>& g, Complex start, const FrobeniusOptions& opts)
{
    auto phi     = [&](double x, double y) { return std::norm(g(Complex(x, y))); };
    auto project = [](Complex z) {
        const double r = std::abs(z);
        return r > 1.0 ? z / r : z;
    };
    Complex z      = project(start);
    double current = phi(z.real(), z.imag());
    for (int it = 0; it < opts.max_ascent_iter; ++it)
    {
        const double x = z.real(), y = z.imag();
        const double hg = 1e-6, hh = 1e-4;
        const double gx = (phi(x + hg, y) - phi(x - hg, y)) / (2 * hg);
        const double gy = (phi(x, y + hg) - phi(x, y - hg)) / (2 * hg);
        const double f0 = current;
        const double hxx = (phi(x + hh, y) - 2 * f0 + phi(x - hh, y)) / (hh * hh);
        const double hyy = (phi(x, y + hh) - 2 * f0 + phi(x, y - hh)) / (hh * hh);
        const double hxy = (phi(x + hh, y + hh) - phi(x + hh, y - hh) - phi(x - hh, y + hh) + phi(x - hh, y - hh)) /
                           (4 * hh * hh);
        const double det = hxx * hyy - hxy * hxy;

        Complex dir;
        if (hxx < 0 && det > 0)
            dir = Complex(-(hyy * gx - hxy * gy) / det, -(-hxy * gx + hxx * gy) / det);
        else
        {
            const double gn = std::hypot(gx, gy);
            if (gn == 0.0)
                break;
            dir = Complex(gx, gy) * (0.1 / gn);
        }

        bool moved = false;
        Complex next = z;
        for (int half = 0; half < 60; ++half, dir *= 0.5)
        {
            next = project(z + dir);
            const double v = phi(next.real(), next.imag());
            if (v > current)
            {
                moved   = true;
                current = v;
                break;
            }
        }
        if (!moved)
            break;
        const double step = std::abs(next - z);
        z = next;
        if (step < opts.ascent_tol)
            break;
    }
    return {ExtendedScalar(z), std::sqrt(current)};
}

struct Seed
{
    bool flipped;
    Complex z;
    double value;
};

}  // namespace

FrobeniusSolution solve_complex(const CMatrix& a, const FrobeniusOptions& opts)
{
    require_nonzero(a);
    if (opts.grid_radii < 2 || opts.grid_angles < 3)
        throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 radii and 3 angles");
    const bool flip     = needs_flip(a);
    const CMatrix b     = flip ? reverse_both(a) : a;
    const FrobeniusObjective inner(b);
    const Index nr = opts.grid_radii, na = opts.grid_angles;

    auto grid_point = [&](Index i, Index j) {
        const double r = static_cast<double>(i) / static_cast<double>(nr - 1);
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(na);
        return std::polar(r, t);
    };

    std::vector<double> values(static_cast<std::size_t>(2 * nr * na));
    auto slot = [&](int branch, Index i, Index j) -> double& {
        return values[static_cast<std::size_t>((branch * nr + i) * na + j)];
    };
    parallel_for(static_cast<std::size_t>(nr * na), [&](std::size_t k) {
        const Index i = static_cast<Index>(k) / na, j = static_cast<Index>(k) % na;
        const Complex z = grid_point(i, j);
        slot(0, i, j)   = std::abs(inner.value(z));
        slot(1, i, j)   = std::abs(inner.flipped_value(z));
    });

    std::vector<Seed> seeds;
    for (int branch = 0; branch < 2; ++branch)
    {
        for (Index i = 0; i < nr; ++i)
            for (Index j = 0; j < (i == 0 ? 1 : na); ++j)
            {
                const double v = slot(branch, i, j);
                bool peak      = true;
                for (Index di = -1; di <= 1 && peak; ++di)
                    for (Index dj = -1; dj <= 1 && peak; ++dj)
                    {
                        const Index ii = i + di;
                        if (ii < 0 || ii >= nr || (di == 0 && dj == 0))
                            continue;
                        if (ii == 0)
                        {
                            peak = v >= slot(branch, 0, 0);
                            continue;
                        }
                        if (i == 0)
                        {
                            for (Index jj = 0; jj < na && peak; ++jj)
                                peak = v >= slot(branch, ii, jj);
                            continue;
                        }
                        peak = v >= slot(branch, ii, ((j + dj) % na + na) % na);
                    }
                if (peak)
                    seeds.push_back({branch == 1, grid_point(i, j), v});
            }
    }
    std::stable_sort(seeds.begin(), seeds.end(), [](const Seed& x, const Seed& y) { return x.value > y.value; });
    if (seeds.size() > opts.seeds)
        seeds.resize(opts.seeds);

    if (is_real(a))
    {
        // The real critical points are exact candidates; they seed the ascent in their own branch.
        for (const ExtendedScalar& z : real_candidates(real_part(b)))
        {
            if (z.is_infinite())
                seeds.push_back({true, 0.0, std::abs(inner.flipped_value(ExtendedScalar(0.0)))});
            else if (z.modulus() <= 1.0)
                seeds.push_back({false, z.value(), std::abs(inner.value(z))});
            else
                seeds.push_back({true, 1.0 / z.value(), std::abs(inner.flipped_value(z.reciprocal()))});
        }
    }

    std::vector<Candidate> results(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t k) {
        const Seed& s = seeds[k];
        std::function<Complex(Complex)> g;
        if (s.flipped)
            g = [&](Complex z) { return inner.flipped_value(ExtendedScalar(z)); };
        else
            g = [&](Complex z) { return inner.value(ExtendedScalar(z)); };
        Candidate c = ascend(g, s.z, opts);
        if (c.value < s.value)
            c = {ExtendedScalar(s.z), s.value};
        results[k] = s.flipped ? Candidate{c.z.reciprocal(), c.value} : c;
    });

    const FrobeniusObjective outer(a);
    std::vector<Candidate> cands;
    for (Candidate c : results)
    {
        ExtendedScalar z = flip ? c.z.reciprocal() : c.z;
        double v         = std::abs(outer.value(z));
        if (z.is_finite() && z.value().imag() != 0.0 &&
            std::abs(z.value().imag()) <= 1e-8 * std::max(1.0, z.modulus()))
        {
            const ExtendedScalar snapped(z.value().real());
            const double vs = std::abs(outer.value(snapped));
            if (vs >= v * (1.0 - 1e-12))
            {
                z = snapped;
                v = vs;
            }
        }
        cands.push_back({z, v});
    }
    return assemble(a, outer, std::move(cands), FrobeniusMode::ComplexSearch, opts);
}

SvdCoincidence svd_coincidence(const CMatrix& a, const FrobeniusSolution& sol, double tol)
{
    const Svd s        = svd(a);
    const double sigma = s.sigma(0);
    const double g     = sol.objective_value;
    SvdCoincidence out;
    out.by_error = sigma * sigma - g * g <= tol * sigma * sigma;
    const CVector zm = structured_vector(sol.params.z, a.rows()).entries;
    const CVector zn = structured_vector(sol.params.z, a.cols()).entries;
    const double left  = std::abs(s.u.col(0).dot(zm));
    const double right = std::abs(s.v.col(0).dot(CVector(zn.conjugate())));
    out.by_vectors     = left >= 1.0 - tol && right >= 1.0 - tol;
    return out;
}

bool svd_coincidence_certificate(const CMatrix& a, const FrobeniusSolution& sol, double tol)
{
    const SvdCoincidence c = svd_coincidence(a, sol, tol);
    return c.by_error && c.by_vectors;
}

}  // namespace hankel1
