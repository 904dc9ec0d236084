#include "meshcal/geometry.hpp"

#include "meshcal/errors.hpp"

#include <algorithm>

namespace meshcal {

Vec3 normalize(const Vec3& v) {
    const double n = v.norm();
    if (n <= kLengthEps) throw ZeroLengthVector("cannot normalize a near-zero vector");
    return v / n;
}

double orthonormality_error(const Mat3& m) {
    const Mat3 g = m.transposed() * m;
    double err = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const double target = (r == c) ? 1.0 : 0.0;
            err = std::max(err, std::abs(g(r, c) - target));
        }
    return err;
}

Mat3 hat(const Vec3& v) {
    return Mat3{{0, -v.z, v.y, v.z, 0, -v.x, -v.y, v.x, 0}};
}

Mat3 rodrigues(const RotationVector& r) {
    const double angle = r.psi.norm();
    if (angle < kAngleEps) return Mat3::identity();

    const Vec3 axis = r.psi / angle;
    const double c = std::cos(angle);
    const double s = std::sin(angle);

    Mat3 outer = Mat3::zero();
    const double a[3] = {axis.x, axis.y, axis.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) outer.m[3 * i + j] = a[i] * a[j];

    Mat3 result = Mat3::identity() * c + outer * (1.0 - c) + hat(axis) * s;
    return result;
}

namespace {

// Standard basis vector least aligned with a; used to pick a deterministic
// perpendicular axis for the antiparallel case.
Vec3 least_aligned_basis(const Vec3& a) {
    const double ax = std::abs(a.x), ay = std::abs(a.y), az = std::abs(a.z);
    if (ax <= ay && ax <= az) return {1, 0, 0};
    if (ay <= az) return {0, 1, 0};
    return {0, 0, 1};
}

} // namespace

RotationVector rotation_between(const Vec3& a, const Vec3& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na <= kLengthEps) throw ZeroLengthVector("rotation_between: first vector is near zero");
    if (nb <= kLengthEps) throw ZeroLengthVector("rotation_between: second vector is near zero");

    const Vec3 ah = a / na;
    const Vec3 bh = b / nb;
    const Vec3 c = cross(ah, bh);
    const double cn = c.norm();
    const double d = std::clamp(dot(ah, bh), -1.0, 1.0);

    if (cn <= 1e-9) {
        if (d > 0.0) return RotationVector{{0, 0, 0}};
        // Antiparallel: rotate by pi about a fixed perpendicular axis.
        const Vec3 axis = normalize(cross(ah, least_aligned_basis(ah)));
        const double pi = std::acos(-1.0);
        return RotationVector{axis * pi};
    }

    const double angle = std::acos(d);
    return RotationVector{(c / cn) * angle};
}

} // namespace meshcal
