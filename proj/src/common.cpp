#include "hankel1/common.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace hankel1
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::AsymmetricInput: return "AsymmetricInput";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::DegenerateZeroPolynomial: return "DegenerateZeroPolynomial";
    case ErrorKind::NotRank1: return "NotRank1";
    case ErrorKind::NotHankel: return "NotHankel";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::HypothesisMismatch: return "HypothesisMismatch";
    case ErrorKind::NoRank1Solution: return "NoRank1Solution";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace
{

template <typename M>
void check_valid(const M& a, std::string_view what)
{
    if (a.rows() < 1 || a.cols() < 1)
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be non-empty");
    if (!a.allFinite())
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
}

}  // namespace

void require_valid(const CMatrix& a, std::string_view what) { check_valid(a, what); }
void require_valid(const RMatrix& a, std::string_view what) { check_valid(a, what); }

bool is_real(const CMatrix& a) noexcept
{
    for (Index i = 0; i < a.size(); ++i)
        if (a.data()[i].imag() != 0.0)
            return false;
    return true;
}

CMatrix to_complex(const RMatrix& a) { return a.cast<Complex>(); }

RMatrix real_part(const CMatrix& a) { return a.real(); }

double frobenius_norm(const CMatrix& a) { return a.norm(); }

double spectral_norm(const CMatrix& a)
{
    if (a.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> s(a);
    return s.singularValues()(0);
}

}  // namespace hankel1
