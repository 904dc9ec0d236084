#include "meshcal/kernels.hpp"

#include <cassert>
#include <cstdint>

namespace meshcal::kernels {

namespace {

inline void blend_row(size_t j, std::span<const Vec3> vertices,
                      std::span<const BoneTransform> bones, std::span<const double> w,
                      std::span<const double> a, std::span<Vec3> out) {
    const size_t b = bones.size();
    const Vec3 v = vertices[j];
    const double* wr = w.data() + j * b;
    const double* ar = a.data() + j * b;
    Vec3 acc{0, 0, 0};
    for (size_t i = 0; i < b; ++i) {
        const BoneTransform& bt = bones[i];
        const Vec3 p = bt.rotation * v + bt.translation + bt.gap * wr[i];
        acc += p * ar[i];
    }
    out[j] = acc;
}

inline void gradient_row(size_t j, std::span<const GradientSample> samples, size_t b,
                         std::span<const double> w, std::span<const double> a,
                         std::span<double> dw, std::span<double> da,
                         std::span<double> loss_rows) {
    const size_t n = loss_rows.size();
    const double* wr = w.data() + j * b;
    const double* ar = a.data() + j * b;
    double* dwr = dw.data() + j * b;
    double* dar = da.data() + j * b;
    for (size_t i = 0; i < b; ++i) {
        dwr[i] = 0.0;
        dar[i] = 0.0;
    }
    const double scale = 2.0 / (static_cast<double>(samples.size()) * static_cast<double>(n));
    double loss = 0.0;
    for (const GradientSample& s : samples) {
        const Vec3 v = s.src[j];
        // Forward for this row, then the same per-bone predictions feed the
        // backward accumulation.
        Vec3 out{0, 0, 0};
        for (size_t i = 0; i < b; ++i) {
            const BoneTransform& bt = s.bones[i];
            const Vec3 p = bt.rotation * v + bt.translation + bt.gap * wr[i];
            out += p * ar[i];
        }
        const Vec3 r = out - s.gt[j];
        loss += r.squared_norm();
        for (size_t i = 0; i < b; ++i) {
            const BoneTransform& bt = s.bones[i];
            const Vec3 p = bt.rotation * v + bt.translation + bt.gap * wr[i];
            dwr[i] += scale * ar[i] * dot(r, bt.gap);
            dar[i] += scale * dot(r, p);
        }
    }
    loss_rows[j] = loss;
}

} // namespace

void blend_vertices_serial(std::span<const Vec3> vertices, std::span<const BoneTransform> bones,
                           std::span<const double> w, std::span<const double> a,
                           std::span<Vec3> out) {
    assert(w.size() == vertices.size() * bones.size());
    assert(a.size() == w.size() && out.size() == vertices.size());
    for (size_t j = 0; j < vertices.size(); ++j) blend_row(j, vertices, bones, w, a, out);
}

void blend_vertices_parallel(std::span<const Vec3> vertices, std::span<const BoneTransform> bones,
                             std::span<const double> w, std::span<const double> a,
                             std::span<Vec3> out) {
    assert(w.size() == vertices.size() * bones.size());
    assert(a.size() == w.size() && out.size() == vertices.size());
    const auto n = static_cast<std::int64_t>(vertices.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        blend_row(static_cast<size_t>(j), vertices, bones, w, a, out);
}

void blend_gradients_serial(std::span<const GradientSample> samples, int vertex_count,
                            int bone_count, std::span<const double> w, std::span<const double> a,
                            std::span<double> dw, std::span<double> da,
                            std::span<double> loss_rows) {
    const auto b = static_cast<size_t>(bone_count);
    for (size_t j = 0; j < static_cast<size_t>(vertex_count); ++j)
        gradient_row(j, samples, b, w, a, dw, da, loss_rows);
}

void blend_gradients_parallel(std::span<const GradientSample> samples, int vertex_count,
                              int bone_count, std::span<const double> w, std::span<const double> a,
                              std::span<double> dw, std::span<double> da,
                              std::span<double> loss_rows) {
    const auto b = static_cast<size_t>(bone_count);
    const auto n = static_cast<std::int64_t>(vertex_count);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < n; ++j)
        gradient_row(static_cast<size_t>(j), samples, b, w, a, dw, da, loss_rows);
}

} // namespace meshcal::kernels
