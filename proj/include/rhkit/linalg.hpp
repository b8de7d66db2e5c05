#pragma once

#include <Eigen/Dense>

namespace rhkit {

// Column vectors are velocities and displacements; row vectors are forms
// (covectors) such as n*, w* and the rows of a surface term.
using Vec3 = Eigen::Vector3d;
using Covec3 = Eigen::RowVector3d;
using Mat3 = Eigen::Matrix3d;
using Vec4 = Eigen::Vector4d;
using Covec4 = Eigen::RowVector4d;
using Mat4 = Eigen::Matrix4d;

inline Mat3 outer(const Vec3& a, const Covec3& b) { return a * b; }

}  // namespace rhkit
