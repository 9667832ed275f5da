#pragma once

// Geometry primitives shared by the whole pipeline: 3D vectors, unit
// quaternions, rigid camera poses (camera-to-world), pinhole intrinsics, the
// 1/8-subsampled prediction grid, and pose-error metrics.

#include <array>
#include <cmath>
#include <cstdint>

#include "scloc/errors.hpp"

namespace scloc {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double squared_norm() const { return dot(*this); }
  double norm() const { return std::sqrt(squared_norm()); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Snap a coordinate to the library-wide 2^-26 m grid (~15 nm). Scene points
// and quantizer centers live on this grid, which makes center + (p - center)
// bit-exact for every coordinate the pipeline produces.
inline double snap_coord(double v) { return std::round(v * 67108864.0) / 67108864.0; }
inline Vec3 snap_coord(const Vec3& v) {
  return {snap_coord(v.x), snap_coord(v.y), snap_coord(v.z)};
}

struct Mat3 {
  // Row-major.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double operator()(int r, int c) const { return m[r * 3 + c]; }
  double& operator()(int r, int c) { return m[r * 3 + c]; }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
  static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
    Mat3 r;
    r.m = {a.x, b.x, c.x, a.y, b.y, c.y, a.z, b.z, c.z};
    return r;
  }
};

struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quat normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
  }
  Quat conjugate() const { return {w, -x, -y, -z}; }

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
  }

  Vec3 rotate(const Vec3& v) const {
    // v + 2w (q x v) + 2 q x (q x v)
    const Vec3 q{x, y, z};
    const Vec3 t = q.cross(v) * 2.0;
    return v + t * w + q.cross(t);
  }

  Mat3 to_matrix() const {
    Mat3 r;
    const double xx = x * x, yy = y * y, zz = z * z;
    const double xy = x * y, xz = x * z, yz = y * z;
    const double wx = w * x, wy = w * y, wz = w * z;
    r.m = {1 - 2 * (yy + zz), 2 * (xy - wz),     2 * (xz + wy),
           2 * (xy + wz),     1 - 2 * (xx + zz), 2 * (yz - wx),
           2 * (xz - wy),     2 * (yz + wx),     1 - 2 * (xx + yy)};
    return r;
  }

  static Quat from_axis_angle(const Vec3& axis_angle) {
    const double theta = axis_angle.norm();
    if (theta < 1e-12) {
      // First-order expansion keeps the map smooth through zero.
      Quat q{1.0, 0.5 * axis_angle.x, 0.5 * axis_angle.y, 0.5 * axis_angle.z};
      return q.normalized();
    }
    const double s = std::sin(0.5 * theta) / theta;
    return {std::cos(0.5 * theta), s * axis_angle.x, s * axis_angle.y, s * axis_angle.z};
  }

  // Shepperd's method, stable for all rotation matrices.
  static Quat from_matrix(const Mat3& r) {
    Quat q;
    const double tr = r(0, 0) + r(1, 1) + r(2, 2);
    if (tr > 0.0) {
      double s = std::sqrt(tr + 1.0) * 2.0;
      q.w = 0.25 * s;
      q.x = (r(2, 1) - r(1, 2)) / s;
      q.y = (r(0, 2) - r(2, 0)) / s;
      q.z = (r(1, 0) - r(0, 1)) / s;
    } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
      double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
      q.w = (r(2, 1) - r(1, 2)) / s;
      q.x = 0.25 * s;
      q.y = (r(0, 1) + r(1, 0)) / s;
      q.z = (r(0, 2) + r(2, 0)) / s;
    } else if (r(1, 1) > r(2, 2)) {
      double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
      q.w = (r(0, 2) - r(2, 0)) / s;
      q.x = (r(0, 1) + r(1, 0)) / s;
      q.y = 0.25 * s;
      q.z = (r(1, 2) + r(2, 1)) / s;
    } else {
      double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
      q.w = (r(1, 0) - r(0, 1)) / s;
      q.x = (r(0, 2) + r(2, 0)) / s;
      q.y = (r(1, 2) + r(2, 1)) / s;
      q.z = 0.25 * s;
    }
    return q.normalized();
  }
};

// Rigid camera pose, stored camera-to-world: apply() maps camera-frame points
// into the world frame.
struct ScenePose {
  Quat q;       // unit quaternion (w, x, y, z)
  Vec3 t;       // camera center in world coordinates, meters

  Vec3 apply(const Vec3& p_cam) const { return q.rotate(p_cam) + t; }
  Vec3 apply_inverse(const Vec3& p_world) const { return q.conjugate().rotate(p_world - t); }

  ScenePose inverse() const {
    const Quat qi = q.conjugate();
    return {qi, -qi.rotate(t)};
  }

  Mat3 rotation() const { return q.to_matrix(); }

  bool valid(double tol = 1e-9) const {
    if (!t.finite()) return false;
    if (std::abs(q.norm() - 1.0) > tol) return false;
    const Mat3 r = q.to_matrix();
    return std::abs(r.det() - 1.0) <= tol;
  }
};

struct CameraIntrinsics {
  double focal = 1.0;  // pixels
  double cx = 0.0, cy = 0.0;

  Mat3 matrix() const {
    Mat3 k;
    k.m = {focal, 0, cx, 0, focal, cy, 0, 0, 1};
    return k;
  }
  bool valid(int width, int height) const {
    return focal > 0.0 && cx >= 0.0 && cx < width && cy >= 0.0 && cy < height;
  }
};

// Full-resolution image size plus the factor-8 prediction grid. Cell (u, v)
// covers the 8x8 pixel block starting at (8u, 8v); its center in pixel units
// is (8u + 3.5, 8v + 3.5).
struct PixelGrid {
  int width = 0, height = 0;

  PixelGrid() = default;
  PixelGrid(int full_width, int full_height) : width(full_width), height(full_height) {
    if (width <= 0 || height <= 0 || width % 8 != 0 || height % 8 != 0)
      throw BadShape("PixelGrid: dimensions must be positive multiples of 8");
  }

  int w() const { return width / 8; }
  int h() const { return height / 8; }
  double cell_center_u(int u) const { return 8.0 * u + 3.5; }
  double cell_center_v(int v) const { return 8.0 * v + 3.5; }
};

struct Projection {
  double u = 0.0, v = 0.0;
  double depth = 0.0;
};

// Pinhole projection of a world point through a camera-to-world pose.
inline Projection project(const Vec3& point_world, const ScenePose& pose,
                          const CameraIntrinsics& intr) {
  const Vec3 c = pose.apply_inverse(point_world);
  if (c.z <= 1e-9) throw NonPositiveDepth("project: point at or behind the camera");
  return {intr.focal * c.x / c.z + intr.cx, intr.focal * c.y / c.z + intr.cy, c.z};
}

// Camera-frame viewing direction C^-1 (u, v, 1) of a pixel (unnormalized,
// z component fixed to 1).
inline Vec3 backproject_ray(double u, double v, const CameraIntrinsics& intr) {
  return {(u - intr.cx) / intr.focal, (v - intr.cy) / intr.focal, 1.0};
}

struct PoseError {
  double translation_cm = 0.0;
  double rotation_deg = 0.0;
};

inline double rotation_angle_deg(const Quat& a, const Quat& b) {
  const Quat rel = a * b.conjugate();
  const double vec = std::sqrt(rel.x * rel.x + rel.y * rel.y + rel.z * rel.z);
  return 2.0 * std::atan2(vec, std::abs(rel.w)) * 180.0 / 3.14159265358979323846;
}

inline PoseError pose_error(const ScenePose& estimate, const ScenePose& truth) {
  return {100.0 * (estimate.t - truth.t).norm(), rotation_angle_deg(estimate.q, truth.q)};
}

}  // namespace scloc
