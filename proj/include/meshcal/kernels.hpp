#pragma once

#include "meshcal/bone_transform.hpp"
#include "meshcal/geometry.hpp"

#include <span>

namespace meshcal::kernels {

// Data-parallel cores of the calibration forward and gradient passes, plus
// the skinning path of the synthetic body (which reuses the same blend).
// Each kernel has a serial reference and an OpenMP variant. Both iterate
// rows (vertices) in identical per-row order, so results are bit-identical
// for any thread count; tests/bench compare them.

// out[j] = sum_i a[j,i] * (R_i * v[j] + T_i + w[j,i] * gap_i)
// w and a are row-major N x B with B == bones.size().
void blend_vertices_serial(std::span<const Vec3> vertices, std::span<const BoneTransform> bones,
                           std::span<const double> w, std::span<const double> a,
                           std::span<Vec3> out);
void blend_vertices_parallel(std::span<const Vec3> vertices, std::span<const BoneTransform> bones,
                             std::span<const double> w, std::span<const double> a,
                             std::span<Vec3> out);

// One dataset sample bound for gradient accumulation: source vertices, the
// supervision vertices, and the per-bone transforms of the sample's pose pair.
struct GradientSample {
    const Vec3* src = nullptr;
    const Vec3* gt = nullptr;
    const BoneTransform* bones = nullptr;
};

// Batch-mean squared vertex error and its exact gradients.
//   loss_rows[j] = sum_s |out_sj - gt_sj|^2          (caller divides by S*N)
//   dw[j,i]     += sum_s 2/(S*N) * a[j,i] * (r_sj . gap_si)
//   da[j,i]     += sum_s 2/(S*N) * (r_sj . P_sji)    (gradient w.r.t. the blend
//                                                     coefficient; softmax
//                                                     backprop is the caller's)
// dw, da, loss_rows are overwritten.
void blend_gradients_serial(std::span<const GradientSample> samples, int vertex_count,
                            int bone_count, std::span<const double> w, std::span<const double> a,
                            std::span<double> dw, std::span<double> da,
                            std::span<double> loss_rows);
void blend_gradients_parallel(std::span<const GradientSample> samples, int vertex_count,
                              int bone_count, std::span<const double> w, std::span<const double> a,
                              std::span<double> dw, std::span<double> da,
                              std::span<double> loss_rows);

} // namespace meshcal::kernels
