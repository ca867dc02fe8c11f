#pragma once

#include <Eigen/Core>

#include <array>
#include <cmath>

namespace majorana {

/// 4x4 real matrix: Majorana matrices, Clifford basis elements, group elements, kernels.
using RealMatrix4 = Eigen::Matrix4d;

/// A Majorana spinor value: four real components.
using Spinor4 = Eigen::Vector4d;

using Vec3 = Eigen::Vector3d;

/// Minkowski metric diag(1,-1,-1,-1), index order (t, x, y, z).
inline const RealMatrix4& minkowski_metric() {
  static const RealMatrix4 g = Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return g;
}

inline double frobenius_distance(const RealMatrix4& a, const RealMatrix4& b) {
  return (a - b).norm();
}

inline double max_abs(const RealMatrix4& a) { return a.cwiseAbs().maxCoeff(); }

inline bool all_finite(const RealMatrix4& a) { return a.allFinite(); }

}  // namespace majorana
