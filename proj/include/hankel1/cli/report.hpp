#ifndef HANKEL1_CLI_REPORT_HPP
#define HANKEL1_CLI_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "hankel1/cadzow.hpp"
#include "hankel1/frobenius.hpp"
#include "hankel1/spectral.hpp"

namespace hankel1::cli
{

using Json = nlohmann::ordered_json;

/// `{"re": .., "im": ..}`.
Json complex_json(Complex z);
/// Complex value, or the string "inf".
Json extended_json(const ExtendedScalar& z);
Json params_json(const Rank1HankelParams& p);
Json matrix_json(const CMatrix& a);

/// Dimensions, norms and leading spectral data of the input.
Json input_summary(const CMatrix& a);

///
/// Error norms of `A - approximant`, always recomputed from the matrix
/// itself; `{"frobenius": .., "spectral": ..}`.
///
Json error_json(const CMatrix& a, const CMatrix& approximant);

Json frobenius_block(const CMatrix& a, const FrobeniusSolution& sol);
Json spectral_block(const CMatrix& a, const SpectralSolution& sol);
Json cadzow_block(const CMatrix& a, const CadzowTrace& trace, bool full_trace);
Json error_block(std::string_view solver, ErrorKind kind, std::string_view message);

/// True when the report or any solver block carries an error.
bool has_error(const Json& report);

/// Human-readable rendering with six decimals.
std::string render_text(const Json& report);

}  // namespace hankel1::cli

#endif  // HANKEL1_CLI_REPORT_HPP
