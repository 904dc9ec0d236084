#pragma once

#include "meshcal/bone_transform.hpp"
#include "meshcal/mesh.hpp"
#include "meshcal/skeleton.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace meshcal {

// Learnable calibration parameters over N vertices and B bones.
// W scales each bone's non-rigid gap per vertex; the blend matrix A is
// parameterized as a row-softmax over logits so every row sums to 1 (that
// row-stochastic structure is what makes calibration with equal poses the
// identity). softmax_rows = false exposes the raw logits as blend weights
// for the unconstrained ablation.
class CalibrationWeights {
public:
    CalibrationWeights(int vertex_count, int bone_count, bool softmax_rows = true);

    int vertex_count() const { return n_; }
    int bone_count() const { return b_; }
    bool softmax_rows() const { return softmax_rows_; }

    double& w(int j, int i) { return w_[index(j, i)]; }
    double w(int j, int i) const { return w_[index(j, i)]; }
    double& a_logit(int j, int i) { return a_logits_[index(j, i)]; }
    double a_logit(int j, int i) const { return a_logits_[index(j, i)]; }

    std::vector<double>& w_data() { return w_; }
    const std::vector<double>& w_data() const { return w_; }
    std::vector<double>& a_logits_data() { return a_logits_; }
    const std::vector<double>& a_logits_data() const { return a_logits_; }

    // Row-softmax of the logits (or the raw logits when softmax_rows is off),
    // row-major N x B.
    std::vector<double> blend_matrix() const;

    // Provenance guards checked by load_weights.
    std::string skeleton_hash;
    std::string body_model;

private:
    size_t index(int j, int i) const { return static_cast<size_t>(j) * b_ + i; }

    int n_ = 0;
    int b_ = 0;
    bool softmax_rows_ = true;
    std::vector<double> w_;
    std::vector<double> a_logits_;
};

struct FitConfig {
    double learning_rate = 0.001;
    int epochs = 90;
    int batch_size = 0; // 0 = full batch
    std::uint64_t seed = 0;
    bool fit_w = true;  // false freezes W (the rigid-only ablation)
};

struct FitSample {
    Mesh mesh;
    Pose3D src_pose;
    Pose3D tgt_pose;
    Mesh gt_mesh;
};

// Per-bone predictions of vertex j (the B candidate positions before
// blending): element i = R_i * V_j + T_i + W[j,i] * gap_i.
std::vector<Vec3> vertex_predictions(const Mesh& mesh, const PoseTransform& pt,
                                     const CalibrationWeights& weights, int j);

// Deform the mesh so its pose matches tgt_pose: each vertex is blended over
// the per-bone non-rigid transforms of src_pose -> tgt_pose. Faces and tag
// are copied through.
Mesh calibrate_mesh(const Mesh& mesh, const Pose3D& src_pose, const Pose3D& tgt_pose,
                    const CalibrationWeights& weights);

// Variant over a precomputed pose transform (the fitting loop reuses these).
Mesh calibrate_mesh(const Mesh& mesh, const PoseTransform& pt, const CalibrationWeights& weights);

struct LossAndGradients {
    double loss = 0.0;             // mean squared vertex error
    std::vector<double> dw;        // N x B row-major
    std::vector<double> da_logits; // N x B row-major
};

// Exact analytic gradients of the mean squared vertex error through the
// blend and the row-softmax.
LossAndGradients loss_and_gradients(const Mesh& mesh, const Pose3D& src_pose,
                                    const Pose3D& tgt_pose, const CalibrationWeights& weights,
                                    const Mesh& gt_mesh);

struct FitResult {
    CalibrationWeights weights;
    // loss_history[0] is the loss under the initial weights; entry e is the
    // loss after e epochs (epochs + 1 entries).
    std::vector<double> loss_history;
};

// Gradient descent on (W, A_logits). Deterministic for a fixed seed and
// thread-count independent: rows accumulate samples in dataset order.
// Throws DivergenceError when the loss goes non-finite.
FitResult fit_weights(const std::vector<FitSample>& dataset, const CalibrationWeights& init,
                      const FitConfig& cfg);

// Distance-based initialization from a rest mesh and its pose: blend logits
// from inverse squared vertex-to-bone-segment distances (row-normalized,
// floored at 1e-6), W rows from the vertex's projected fraction along its
// nearest bone, clamped to [0,1]. Approximates linear blend skinning before
// any fitting.
CalibrationWeights init_weights(const Mesh& rest_mesh, const Pose3D& rest_pose,
                                bool softmax_rows = true);

// JSON artifact with shape header (N, B), skeleton hash and body-model tag;
// load refuses mismatched shapes or provenance. expected_* empty = skip check.
void save_weights(const CalibrationWeights& weights, const std::filesystem::path& path);
CalibrationWeights load_weights(const std::filesystem::path& path,
                                const std::string& expected_skeleton_hash = "",
                                const std::string& expected_body_model = "");

} // namespace meshcal
