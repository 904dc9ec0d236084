#pragma once

#include "meshcal/geometry.hpp"
#include "meshcal/skeleton.hpp"

#include <vector>

namespace meshcal {

// Per-bone map from a source pose onto a target pose: a minimal rotation
// aligning the bone directions, a translation pinning the parent joint, and
// the non-rigid gap left at the child joint (absorbs bone-length changes).
struct BoneTransform {
    Mat3 rotation;
    Vec3 translation;
    Vec3 gap;
};

// One BoneTransform per skeleton bone, in skeleton bone order.
using PoseTransform = std::vector<BoneTransform>;

// Throws SkeletonMismatch when the poses bind different skeletons and
// DegenerateBone when either pose has a near-zero bone.
BoneTransform bone_transform(const Pose3D& src, const Pose3D& tgt, int bone_index);

PoseTransform pose_transform(const Pose3D& src, const Pose3D& tgt);

// rotation * point + translation + w * gap. w = 0 lands on the target
// parent, w = 1 on the target child; a point at fraction lambda along the
// source bone maps with w = lambda to fraction lambda along the target bone.
Vec3 transform_point_on_bone(const BoneTransform& bt, const Vec3& point, double w);

} // namespace meshcal
