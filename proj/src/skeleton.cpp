#include "meshcal/skeleton.hpp"

#include "meshcal/errors.hpp"
#include "meshcal/json_util.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace meshcal {

namespace {

std::string fnv1a_hex(const std::vector<std::string>& names, const std::vector<int>& parents) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const void* data, size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    };
    for (const auto& n : names) {
        mix(n.data(), n.size());
        mix("\0", 1);
    }
    for (int p : parents) {
        const std::int64_t v = p;
        mix(&v, sizeof(v));
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

Skeleton::Skeleton(std::vector<std::string> joint_names, std::vector<int> parents,
                   std::string name)
    : joint_names_(std::move(joint_names)), parents_(std::move(parents)), name_(std::move(name)) {
    const int k = static_cast<int>(joint_names_.size());
    if (k == 0) throw SchemaError("skeleton: no joints");
    if (static_cast<int>(parents_.size()) != k)
        throw SchemaError("skeleton: joints/parents length mismatch");

    root_ = -1;
    for (int j = 0; j < k; ++j) {
        const int p = parents_[j];
        if (p == -1) {
            if (root_ != -1) throw SchemaError("skeleton: more than one root joint");
            root_ = j;
        } else if (p < 0 || p >= k) {
            throw SchemaError("skeleton: parent index out of range for joint " +
                              joint_names_[j]);
        }
    }
    if (root_ == -1) throw SchemaError("skeleton: no root joint (missing -1 parent)");

    // Walk each joint to the root; a path longer than K joints means a cycle.
    for (int j = 0; j < k; ++j) {
        int cur = j;
        int steps = 0;
        while (cur != root_) {
            cur = parents_[cur];
            if (++steps > k) throw SchemaError("skeleton: cycle in parent array");
        }
    }

    for (int j = 0; j < k; ++j)
        if (j != root_) bones_.push_back({parents_[j], j});

    hash_ = fnv1a_hex(joint_names_, parents_);
}

const Bone& Skeleton::bone(int index) const {
    if (index < 0 || index >= bone_count())
        throw IndexOutOfRange("bone index " + std::to_string(index) + " out of range [0, " +
                              std::to_string(bone_count()) + ")");
    return bones_[static_cast<size_t>(index)];
}

bool same_skeleton(const Pose3D& a, const Pose3D& b) {
    if (!a.skeleton || !b.skeleton) return false;
    if (a.skeleton == b.skeleton) return true;
    return a.skeleton->same_structure(*b.skeleton);
}

Vec3 bone_vector(const Pose3D& pose, int bone_index) {
    const Bone& b = pose.skeleton->bone(bone_index);
    return pose.joints[static_cast<size_t>(b.parent)] - pose.joints[static_cast<size_t>(b.child)];
}

std::vector<std::string> validate(const Pose3D& pose) {
    std::vector<std::string> violations;
    if (!pose.skeleton) {
        violations.push_back("pose has no skeleton");
        return violations;
    }
    const int k = pose.skeleton->joint_count();
    if (static_cast<int>(pose.joints.size()) != k) {
        violations.push_back("joint count " + std::to_string(pose.joints.size()) +
                             " does not match skeleton joint count " + std::to_string(k));
        return violations;
    }
    for (int j = 0; j < k; ++j) {
        if (!pose.joints[static_cast<size_t>(j)].finite())
            violations.push_back("joint " + std::to_string(j) + " (" +
                                 pose.skeleton->joint_names()[static_cast<size_t>(j)] +
                                 ") has non-finite coordinates");
    }
    for (int i = 0; i < pose.skeleton->bone_count(); ++i) {
        const Bone& b = pose.skeleton->bones()[static_cast<size_t>(i)];
        const Vec3 d = pose.joints[static_cast<size_t>(b.parent)] -
                       pose.joints[static_cast<size_t>(b.child)];
        if (d.finite() && d.norm() <= kLengthEps)
            violations.push_back("bone " + std::to_string(i) + " (" +
                                 pose.skeleton->joint_names()[static_cast<size_t>(b.child)] +
                                 ") has near-zero length");
    }
    return violations;
}

void require_valid(const Pose3D& pose, const char* what) {
    const auto violations = validate(pose);
    if (violations.empty()) return;
    std::ostringstream msg;
    msg << what << ": invalid pose:";
    for (const auto& v : violations) msg << " [" << v << "]";
    throw ValidationError(msg.str());
}

Skeleton load_skeleton(const std::filesystem::path& path) {
    const nlohmann::json j = load_json_file(path);
    if (!j.contains("joints") || !j.contains("parents"))
        throw SchemaError(path.string() + ": skeleton file needs 'joints' and 'parents'");
    std::vector<std::string> names;
    std::vector<int> parents;
    try {
        names = j.at("joints").get<std::vector<std::string>>();
        parents = j.at("parents").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return Skeleton(std::move(names), std::move(parents));
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

void save_skeleton(const Skeleton& skeleton, const std::filesystem::path& path) {
    nlohmann::json j;
    j["joints"] = skeleton.joint_names();
    j["parents"] = skeleton.parents();
    save_json_file(j, path);
}

Pose3D load_pose(const std::filesystem::path& path, SkeletonPtr skeleton) {
    const nlohmann::json j = load_json_file(path);
    if (!j.contains("positions"))
        throw SchemaError(path.string() + ": pose file needs 'positions'");
    if (j.contains("skeleton")) {
        const std::string tag = j.at("skeleton").get<std::string>();
        if (!tag.empty() && tag != skeleton->hash() && tag != skeleton->name())
            throw SchemaError(path.string() + ": pose bound to skeleton '" + tag +
                              "', expected '" + skeleton->hash() + "'");
    }
    Pose3D pose;
    pose.skeleton = std::move(skeleton);
    try {
        for (const auto& row : j.at("positions")) {
            if (!row.is_array() || row.size() != 3)
                throw SchemaError(path.string() + ": each position must be [x,y,z]");
            pose.joints.push_back(
                {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (static_cast<int>(pose.joints.size()) != pose.skeleton->joint_count())
        throw SchemaError(path.string() + ": " + std::to_string(pose.joints.size()) +
                          " positions for " + std::to_string(pose.skeleton->joint_count()) +
                          " joints");
    return pose;
}

void save_pose(const Pose3D& pose, const std::filesystem::path& path) {
    nlohmann::json j;
    j["skeleton"] = pose.skeleton ? pose.skeleton->hash() : "";
    auto positions = nlohmann::json::array();
    for (const Vec3& p : pose.joints) positions.push_back({p.x, p.y, p.z});
    j["positions"] = positions;
    save_json_file(j, path);
}

Pose2D load_pose2d(const std::filesystem::path& path, SkeletonPtr skeleton) {
    const nlohmann::json j = load_json_file(path);
    if (!j.contains("positions"))
        throw SchemaError(path.string() + ": pose file needs 'positions'");
    Pose2D pose;
    pose.skeleton = std::move(skeleton);
    try {
        for (const auto& row : j.at("positions")) {
            if (!row.is_array() || row.size() != 2)
                throw SchemaError(path.string() + ": each position must be [u,v]");
            pose.joints.emplace_back(row[0].get<double>(), row[1].get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (static_cast<int>(pose.joints.size()) != pose.skeleton->joint_count())
        throw SchemaError(path.string() + ": joint count mismatch");
    return pose;
}

void save_pose2d(const Pose2D& pose, const std::filesystem::path& path) {
    nlohmann::json j;
    j["skeleton"] = pose.skeleton ? pose.skeleton->hash() : "";
    auto positions = nlohmann::json::array();
    for (const auto& [u, v] : pose.joints) positions.push_back({u, v});
    j["positions"] = positions;
    save_json_file(j, path);
}

SkeletonPtr make_h36m17_skeleton() {
    static const SkeletonPtr skeleton = std::make_shared<Skeleton>(
        std::vector<std::string>{
            "pelvis",        "spine",          "neck",        "head",        "head_top",
            "left_hip",      "left_knee",      "left_ankle",  "right_hip",   "right_knee",
            "right_ankle",   "left_shoulder",  "left_elbow",  "left_wrist",  "right_shoulder",
            "right_elbow",   "right_wrist"},
        std::vector<int>{-1, 0, 1, 2, 3, 0, 5, 6, 0, 8, 9, 2, 11, 12, 2, 14, 15}, "h36m17");
    return skeleton;
}

} // namespace meshcal
