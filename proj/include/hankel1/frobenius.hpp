#ifndef HANKEL1_FROBENIUS_HPP
#define HANKEL1_FROBENIUS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "hankel1/common.hpp"
#include "hankel1/hankel_core.hpp"
#include "hankel1/numerics.hpp"

namespace hankel1
{

///
/// ### FrobeniusObjective
///
/// The rational function `G(z) = z_M^* A conj(z_N)` whose modulus is maximized
/// by the Frobenius-optimal rank-1 Hankel approximation. It only depends on
/// the anti-diagonal sums `h_l` of `A`:
///
///   G(z) = sum_l h_l conj(z)^l / (|z_M| |z_N|),   |z_K|^2 = sum_{k<K} |z|^{2k}.
///
/// For `|z| > 1` the value is evaluated through the reversed coefficients so
/// no power of `z` above one in modulus is formed. `flipped_value` evaluates
/// `G_1(z)`, the same function for `J_M A J_N`, which satisfies
/// `|G_1(z)| = |G(1/z)|`.
///
class FrobeniusObjective
{
public:
    explicit FrobeniusObjective(const CMatrix& a);

    Complex value(const ExtendedScalar& z) const;
    Complex flipped_value(const ExtendedScalar& z) const;

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    const std::vector<Complex>& sums() const noexcept { return sums_; }

private:
    static Complex evaluate(const std::vector<Complex>& h, Index m, Index n, const ExtendedScalar& z);

    Index rows_;
    Index cols_;
    std::vector<Complex> sums_;
    std::vector<Complex> reversed_;
};

/// `G(z) = z_M^* A conj(z_N)`.
Complex objective(const CMatrix& a, const ExtendedScalar& z);

enum class FrobeniusMode
{
    RealSearch,
    ComplexSearch,
};

std::string_view to_string(FrobeniusMode mode) noexcept;

struct FrobeniusOptions
{
    Index grid_radii     = 64;
    Index grid_angles    = 256;
    std::size_t seeds    = 16;     ///< local maxima of the polar grid refined by ascent
    double ascent_tol    = 1e-12;  ///< ascent stops once the step is shorter than this
    int max_ascent_iter  = 500;
    double tie_tol       = 1e-9;   ///< relative objective gap treated as a tie
    double certificate_tol = 1e-8;
};

struct FrobeniusSolution
{
    Rank1HankelParams params;
    double objective_value;   ///< |G(z~)|
    double error_frobenius;   ///< recomputed from the materialized approximant
    double error_spectral;
    FrobeniusMode mode;
    bool svd_coincident;
    std::vector<Rank1HankelParams> alternates;  ///< other maximizers tied with the primary

    CMatrix approximant() const { return build_rank1(params); }
};

///
/// Real parameters: the critical points of `G` on the real line are the
/// roots of `R = 2 a' q - a q'` with `a(z) = sum h_l z^l` and
/// `q(z) = (sum_{k<M} z^{2k}) (sum_{k<N} z^{2k})`. Together with `z = 0` and
/// `z = inf` they form the candidate set.
///
FrobeniusSolution solve_real(const RMatrix& a, const FrobeniusOptions& opts = {});

///
/// Complex parameters: maximizes `|G|` on the closed unit disc and `|G_1|`
/// on the unit disc (mapped back with `z -> 1/z`), using a polar grid and
/// Newton/gradient ascent from the best local grid maxima.
///
FrobeniusSolution solve_complex(const CMatrix& a, const FrobeniusOptions& opts = {});

/// The polynomial `R = 2 a' q - a q'` for a real matrix.
Polynomial critical_polynomial(const RMatrix& a);

struct SvdCoincidence
{
    bool by_error;    ///< err_F^2 = |A|_F^2 - sigma_0^2
    bool by_vectors;  ///< (u_0, v_0) = (z_M, conj z_N) up to a unimodular phase
};

SvdCoincidence svd_coincidence(const CMatrix& a, const FrobeniusSolution& sol, double tol = 1e-8);

/// True when the optimal structured approximant coincides with the truncated SVD.
bool svd_coincidence_certificate(const CMatrix& a, const FrobeniusSolution& sol, double tol = 1e-8);

}  // namespace hankel1

#endif  // HANKEL1_FROBENIUS_HPP
