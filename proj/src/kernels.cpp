//! \file kernels.cpp
//! \brief Limiter name lookup.

#include "fv3/kernels.hpp"

#include <stdexcept>

namespace fv3 {

const char* limiter_name(Limiter k) {
  switch (k) {
    case Limiter::kH3:
      return "h3";
    case Limiter::kH3L:
      return "h3l";
    case Limiter::kH3LC:
      return "h3lc";
    case Limiter::kWeno3Js:
      return "weno3js";
    case Limiter::kWeno3Z:
      return "weno3z";
    case Limiter::kUpwind:
      return "upwind";
  }
  return "?";
}

Limiter limiter_from_name(const std::string& name) {
  if (name == "h3") return Limiter::kH3;
  if (name == "h3l") return Limiter::kH3L;
  if (name == "h3lc") return Limiter::kH3LC;
  if (name == "weno3js") return Limiter::kWeno3Js;
  if (name == "weno3z") return Limiter::kWeno3Z;
  if (name == "upwind") return Limiter::kUpwind;
  throw std::invalid_argument(
      "unknown kernel '" + name +
      "': valid options are h3, h3l, h3lc, weno3js, weno3z, upwind");
}

}  // namespace fv3
