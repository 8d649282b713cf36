#ifndef HANKEL1_COMMON_HPP
#define HANKEL1_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace hankel1
{

using Complex = std::complex<double>;
using Index   = Eigen::Index;
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class ErrorKind
{
    InvalidArgument,
    NonSymmetric,
    AsymmetricInput,
    ZeroMatrix,
    RankZero,
    DegenerateZeroPolynomial,
    NotRank1,
    NotHankel,
    PoleHit,
    HypothesisMismatch,
    NoRank1Solution,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception type thrown by every operation in the library.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Default tolerances shared by the solvers.
struct Tolerances
{
    double structural = 1e-10;  ///< symmetry, Hankel structure, rank tests
    double iterative  = 1e-12;  ///< stopping thresholds of iterative loops
    double tie        = 1e-9;   ///< relative tolerance deciding eigenvalue modulus ties
};

/// Throws InvalidArgument unless the matrix is non-empty with finite entries.
void require_valid(const CMatrix& a, std::string_view what = "matrix");
void require_valid(const RMatrix& a, std::string_view what = "matrix");

/// True when every imaginary part is exactly zero.
bool is_real(const CMatrix& a) noexcept;

CMatrix to_complex(const RMatrix& a);
RMatrix real_part(const CMatrix& a);

double frobenius_norm(const CMatrix& a);
double spectral_norm(const CMatrix& a);

}  // namespace hankel1

#endif  // HANKEL1_COMMON_HPP
