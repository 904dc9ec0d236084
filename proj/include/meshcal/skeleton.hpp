#pragma once

#include "meshcal/geometry.hpp"

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace meshcal {

struct Bone {
    int parent = -1;
    int child = -1;
};

// Kinematic tree: joint names plus a parent index per joint (-1 marks the
// single root). Bones are derived, one per non-root joint, ordered by child
// joint index; that order indexes every per-bone array in the library.
class Skeleton {
public:
    Skeleton(std::vector<std::string> joint_names, std::vector<int> parents,
             std::string name = "");

    int joint_count() const { return static_cast<int>(joint_names_.size()); }
    int bone_count() const { return static_cast<int>(bones_.size()); }
    const std::vector<std::string>& joint_names() const { return joint_names_; }
    const std::vector<int>& parents() const { return parents_; }
    const std::vector<Bone>& bones() const { return bones_; }
    const Bone& bone(int index) const;
    int root() const { return root_; }
    // Optional human-readable tag ("h36m17" for the bundled default); not
    // part of the serialized format.
    const std::string& name() const { return name_; }

    // FNV-1a over joint names and parent indices, as a hex string. Pose and
    // weight files carry it so mismatched skeletons are refused at load.
    std::string hash() const { return hash_; }

    bool same_structure(const Skeleton& other) const {
        return joint_names_ == other.joint_names_ && parents_ == other.parents_;
    }

private:
    std::vector<std::string> joint_names_;
    std::vector<int> parents_;
    std::vector<Bone> bones_;
    int root_ = -1;
    std::string name_;
    std::string hash_;
};

using SkeletonPtr = std::shared_ptr<const Skeleton>;

struct Pose3D {
    SkeletonPtr skeleton;
    std::vector<Vec3> joints;
};

struct Pose2D {
    SkeletonPtr skeleton;
    std::vector<std::pair<double, double>> joints;
};

// True when both poses bind the same skeleton object or structurally equal ones.
bool same_skeleton(const Pose3D& a, const Pose3D& b);

// parent_position - child_position for the indexed bone.
// Throws IndexOutOfRange.
Vec3 bone_vector(const Pose3D& pose, int bone_index);

// Invariant check; returns human-readable violations (empty iff valid):
// joint count matches the skeleton, all coordinates finite, every bone
// longer than kLengthEps.
std::vector<std::string> validate(const Pose3D& pose);

// Throws SkeletonMismatch / ValidationError when validate() is non-empty.
void require_valid(const Pose3D& pose, const char* what);

// JSON (de)serialization.
//   skeleton: { "joints": [names...], "parents": [ints, -1 for root] }
//   pose:     { "skeleton": name-or-hash, "positions": [[x,y,z]...] }
// Finite doubles round-trip exactly. Throws ParseError on malformed files
// and SchemaError on structural violations.
Skeleton load_skeleton(const std::filesystem::path& path);
void save_skeleton(const Skeleton& skeleton, const std::filesystem::path& path);
Pose3D load_pose(const std::filesystem::path& path, SkeletonPtr skeleton);
void save_pose(const Pose3D& pose, const std::filesystem::path& path);
Pose2D load_pose2d(const std::filesystem::path& path, SkeletonPtr skeleton);
void save_pose2d(const Pose2D& pose, const std::filesystem::path& path);

// The bundled 17-joint Human3.6M-style skeleton (pelvis root, 16 bones).
SkeletonPtr make_h36m17_skeleton();

} // namespace meshcal
