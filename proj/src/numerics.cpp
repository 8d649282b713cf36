#include "hankel1/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hankel1
{

namespace
{

/// Index of the first entry whose modulus is within a relative 1e-10 of the largest.
template <typename V>
Index leading_entry(const V& v)
{
    double best = v.cwiseAbs().maxCoeff();
    for (Index i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) >= best * (1.0 - 1e-10))
            return i;
    return 0;
}

}  // namespace

SymmetricEigen eig_symmetric(const RMatrix& a, double tol, double tie_tol)
{
    require_valid(a);
    if (a.rows() != a.cols())
        throw Error(ErrorKind::NonSymmetric, "matrix is not square");
    const double scale = a.norm();
    const double asym  = (a - a.transpose()).norm();
    if (asym > tol * scale)
        throw Error(ErrorKind::NonSymmetric, "asymmetry exceeds tolerance");

    const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    const Eigen::VectorXd& w  = solver.eigenvalues();
    const Eigen::MatrixXd& vv = solver.eigenvectors();
    const Index n = w.size();

    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index i, Index j) { return std::abs(w(i)) > std::abs(w(j)); });

    // Within clusters of equal modulus, positive values come first.
    const double cut = tie_tol * std::max(std::abs(w(order[0])), std::numeric_limits<double>::min());
    for (Index start = 0; start < n;)
    {
        Index end = start + 1;
        while (end < n && std::abs(std::abs(w(order[end - 1])) - std::abs(w(order[end]))) <= cut)
            ++end;
        std::stable_sort(order.begin() + start, order.begin() + end, [&](Index i, Index j) {
            if ((w(i) > 0) != (w(j) > 0))
                return w(i) > 0;
            return i < j;
        });
        start = end;
    }

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Index k = 0; k < n; ++k)
    {
        out.values(k) = w(order[k]);
        Eigen::VectorXd v = vv.col(order[k]);
        if (v(leading_entry(v)) < 0)
            v = -v;
        out.vectors.col(k) = v;
    }
    return out;
}

CMatrix Svd::leading_term() const
{
    return sigma(0) * u.col(0) * v.col(0).adjoint();
}

Svd svd(const CMatrix& a)
{
    require_valid(a);
    if (a.norm() == 0.0)
        throw Error(ErrorKind::ZeroMatrix, "singular value decomposition of the zero matrix");
    Svd out;
    if (is_real(a))
    {
        // Real input keeps real singular vectors, and with them any exact symmetry of the input.
        const Eigen::MatrixXd dense = a.real();
        Eigen::JacobiSVD<Eigen::MatrixXd> s(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out = Svd{s.matrixU().cast<Complex>(), s.singularValues(), s.matrixV().cast<Complex>()};
    }
    else
    {
        const Eigen::MatrixXcd dense = a;
        Eigen::JacobiSVD<Eigen::MatrixXcd> s(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
        out = Svd{s.matrixU(), s.singularValues(), s.matrixV()};
    }
    for (Index j = 0; j < out.u.cols(); ++j)
    {
        const Complex lead = out.u(leading_entry(out.u.col(j)), j);
        const double mod   = std::abs(lead);
        if (mod == 0.0)
            continue;
        const Complex phase = std::conj(lead) / mod;
        out.u.col(j) *= phase;
        out.v.col(j) *= phase;
    }
    return out;
}

Maximum maximize_1d(const std::function<double(double)>& f, Interval interval, std::size_t grid, double tol)
{
    if (grid < 3)
        grid = 3;
    if (!(interval.lo <= interval.hi) || !std::isfinite(interval.lo) || !std::isfinite(interval.hi))
        throw Error(ErrorKind::InvalidArgument, "maximize_1d needs a finite closed interval");
    const double lo = interval.lo, hi = interval.hi;
    const double h  = (hi - lo) / static_cast<double>(grid - 1);
    auto point      = [&](std::size_t i) { return i + 1 == grid ? hi : lo + h * static_cast<double>(i); };

    std::vector<double> values(grid);
    parallel_for(grid, [&](std::size_t i) { values[i] = f(point(i)); });

    double scale = 0.0;
    for (double v : values)
        if (std::isfinite(v))
            scale = std::max(scale, std::abs(v));
    const double tie = 1e-12 * std::max(scale, std::numeric_limits<double>::min());

    auto better = [&](const Maximum& cand, const Maximum& best) {
        if (cand.value > best.value + tie)
            return true;
        if (cand.value >= best.value - tie)
            return cand.argmax < best.argmax;
        return false;
    };

    // Grid winner and the strongest local maxima of the grid.
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < grid; ++i)
    {
        const bool left  = i == 0 || values[i] >= values[i - 1];
        const bool right = i + 1 == grid || values[i] >= values[i + 1];
        if (left && right && std::isfinite(values[i]))
            peaks.push_back(i);
    }
    if (peaks.empty())
        return {lo, values[0]};
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });

    Maximum best{point(peaks[0]), values[peaks[0]]};
    for (std::size_t i : peaks)
    {
        Maximum cand{point(i), values[i]};
        if (better(cand, best))
            best = cand;
    }

    constexpr double inv_phi = 0.6180339887498949;
    const std::size_t refine = std::min<std::size_t>(peaks.size(), 4);
    for (std::size_t r = 0; r < refine; ++r)
    {
        const std::size_t i = peaks[r];
        const Maximum grid_point{point(i), values[i]};
        double a = i == 0 ? lo : point(i - 1);
        double b = i + 1 == grid ? hi : point(i + 1);
        double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 200 && (b - a) > tol * std::max(1.0, std::abs(a) + std::abs(b)); ++it)
        {
            if (f1 >= f2)
            {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - inv_phi * (b - a);
                f1 = f(x1);
            }
            else
            {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + inv_phi * (b - a);
                f2 = f(x2);
            }
        }
        Maximum refined = f1 >= f2 ? Maximum{x1, f1} : Maximum{x2, f2};
        Maximum cand    = refined.value > grid_point.value + tie ? refined : grid_point;
        if (better(cand, best))
            best = cand;
    }
    return best;
}

}  // namespace hankel1
