#pragma once

#include <limits>
#include <span>
#include <string>

#include "meshrdh/mesh_io.hpp"

namespace meshrdh {

inline constexpr double kInfiniteSnr = std::numeric_limits<double>::infinity();

struct EmbeddingRate {
    double gross = 0.0;  // capacity / vertices
    double net = 0.0;    // (capacity - label bits) / vertices, floored at 0
};

// Column order of to_csv_row: directed_hausdorff_ab, directed_hausdorff_ba,
// hausdorff_sym, snr_db, er_gross, er_net. Infinite SNR is written as "inf".
struct QualityReport {
    double directed_hausdorff_ab = 0.0;
    double directed_hausdorff_ba = 0.0;
    double hausdorff_sym = 0.0;
    double snr = kInfiniteSnr;
    double er_gross = 0.0;
    double er_net = 0.0;

    static std::string csv_header();
    std::string to_csv_row() const;
};

// max over a in `from` of min over b in `to` of |a - b|. Throws EmptySet.
double directed_hausdorff(std::span<const Vec3> from, std::span<const Vec3> to);

// max of both directed distances.
double hausdorff(std::span<const Vec3> a, std::span<const Vec3> b);

// 10 log10( sum |v - mean|^2 / sum |v_hat - v|^2 ), means over the original.
// Returns kInfiniteSnr when the meshes coincide. Throws VertexCountMismatch.
double snr(const FloatMesh& original, const FloatMesh& modified);

EmbeddingRate embedding_rate(std::uint64_t capacity_bits, std::uint64_t label_bits, std::uint64_t vertex_count);

QualityReport quality_report(const FloatMesh& original, const FloatMesh& modified,
                             std::uint64_t capacity_bits, std::uint64_t label_bits);

std::string format_metric(double v);

}  // namespace meshrdh
