#pragma once

#include <cmath>

namespace meshcal {

inline constexpr double kLengthEps = 1e-9;  // minimum usable vector norm
inline constexpr double kAngleEps = 1e-12;  // below this a rotation is identity

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3& operator-=(const Vec3& o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    Vec3& operator*=(double s) {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double squared_norm() const { return x * x + y * y + z * z; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Throws ZeroLengthVector if |v| <= kLengthEps.
Vec3 normalize(const Vec3& v);

// Row-major 3x3 matrix.
struct Mat3 {
    double m[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};

    static constexpr Mat3 identity() { return Mat3{}; }
    static constexpr Mat3 zero() { return Mat3{{0, 0, 0, 0, 0, 0, 0, 0, 0}}; }

    double& operator()(int r, int c) { return m[3 * r + c]; }
    double operator()(int r, int c) const { return m[3 * r + c]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r = zero();
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < 3; ++j)
                    r.m[3 * i + j] += m[3 * i + k] * o.m[3 * k + j];
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r = zero();
        for (int i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
        return r;
    }

    Mat3 operator*(double s) const {
        Mat3 r = zero();
        for (int i = 0; i < 9; ++i) r.m[i] = m[i] * s;
        return r;
    }

    Mat3 transposed() const {
        return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    bool finite() const {
        for (double v : m)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

// max |(M^T M - I)_{rc}|; 0 for an exact rotation.
double orthonormality_error(const Mat3& m);

// Axis-angle vector; the norm is the rotation angle in radians, kept in [0, pi].
struct RotationVector {
    Vec3 psi;

    double angle() const { return psi.norm(); }
};

// Cross-product matrix: hat(v) * w == cross(v, w).
Mat3 hat(const Vec3& v);

// Rodrigues formula. Angles below kAngleEps give the exact identity.
Mat3 rodrigues(const RotationVector& r);

// Minimal-angle rotation taking the direction of a onto the direction of b.
// Parallel inputs give the zero rotation; antiparallel inputs rotate by pi
// about a deterministic axis perpendicular to a (built from the standard
// basis vector least aligned with a). Throws ZeroLengthVector if either
// input norm is <= kLengthEps.
RotationVector rotation_between(const Vec3& a, const Vec3& b);

} // namespace meshcal
