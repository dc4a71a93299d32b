//! \file types.hpp
//! \brief Core scalar/array aliases and small utilities shared by all modules.

#ifndef FV3_TYPES_HPP_
#define FV3_TYPES_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fv3 {

using Real = double;

// Dense storage. Array2 is column-major, so the first index is the
// fastest-varying one; 2D fields map (i,j) -> (row=i, col=j) making
// x-sweeps contiguous in memory.
using Array = Eigen::ArrayXd;
using Array2 = Eigen::ArrayXXd;
using Vec4 = Eigen::Array<Real, 4, 1>;

// Ghost layer width used by every stencil in the workbench: reconstruction
// needs one neighbour on each side of a swept cell, and the transverse
// order-fix corrections need one extra row of reconstructed faces.
inline constexpr int kGhost = 2;

// Thrown when a conserved state stops being physically meaningful
// (non-positive density or pressure, NaN, ...).
class PhysicsError : public std::runtime_error {
 public:
  explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

inline Real square(Real x) { return x * x; }

}  // namespace fv3

#endif  // FV3_TYPES_HPP_
