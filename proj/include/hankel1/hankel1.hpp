#ifndef HANKEL1_HANKEL1_HPP
#define HANKEL1_HANKEL1_HPP

#include "hankel1/cadzow.hpp"
#include "hankel1/common.hpp"
#include "hankel1/frobenius.hpp"
#include "hankel1/hankel_core.hpp"
#include "hankel1/numerics.hpp"
#include "hankel1/spectral.hpp"

namespace hankel1
{

inline constexpr const char* version = "0.1.0";

}  // namespace hankel1

#endif  // HANKEL1_HANKEL1_HPP
