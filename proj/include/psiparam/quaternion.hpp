#pragma once

#include "psiparam/matrix.hpp"

namespace psiparam {

/// Hamilton quaternion w + x i + y j + z k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
};

/// Left-multiplication representation: the 4x4 real matrix L(q) with
/// L(q) * coords(p) = coords(q p), coordinates ordered (1, i, j, k).
Matrix left_matrix(const Quaternion& q);

}  // namespace psiparam
