#include "meshcal/bone_transform.hpp"

#include "meshcal/errors.hpp"

namespace meshcal {

BoneTransform bone_transform(const Pose3D& src, const Pose3D& tgt, int bone_index) {
    if (!same_skeleton(src, tgt))
        throw SkeletonMismatch("bone_transform: poses bind different skeletons");
    const Bone& bone = src.skeleton->bone(bone_index);
    const auto p = static_cast<size_t>(bone.parent);
    const auto c = static_cast<size_t>(bone.child);

    const Vec3 b_src = src.joints[p] - src.joints[c];
    const Vec3 b_tgt = tgt.joints[p] - tgt.joints[c];
    if (b_src.norm() <= kLengthEps || b_tgt.norm() <= kLengthEps)
        throw DegenerateBone("bone_transform: near-zero bone " + std::to_string(bone_index));

    BoneTransform bt;
    bt.rotation = rodrigues(rotation_between(b_src, b_tgt));
    bt.translation = tgt.joints[p] - bt.rotation * src.joints[p];
    const Vec3 child_rigid = bt.rotation * src.joints[c] + bt.translation;
    bt.gap = tgt.joints[c] - child_rigid;
    return bt;
}

PoseTransform pose_transform(const Pose3D& src, const Pose3D& tgt) {
    if (!same_skeleton(src, tgt))
        throw SkeletonMismatch("pose_transform: poses bind different skeletons");
    require_valid(src, "pose_transform(src)");
    require_valid(tgt, "pose_transform(tgt)");

    PoseTransform pt;
    const int b = src.skeleton->bone_count();
    pt.reserve(static_cast<size_t>(b));
    for (int i = 0; i < b; ++i) pt.push_back(bone_transform(src, tgt, i));
    return pt;
}

Vec3 transform_point_on_bone(const BoneTransform& bt, const Vec3& point, double w) {
    return bt.rotation * point + bt.translation + bt.gap * w;
}

} // namespace meshcal
