#include "meshrdh/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "meshrdh/error.hpp"

namespace meshrdh {
namespace {

double squared_distance(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return dx * dx + dy * dy + dz * dz;
}

}  // namespace

double directed_hausdorff(std::span<const Vec3> from, std::span<const Vec3> to) {
    if (from.empty() || to.empty()) throw EmptySet("Hausdorff distance of an empty point set");
    double worst = 0.0;
    for (const auto& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : to) {
            best = std::min(best, squared_distance(a, b));
            // Cannot raise the running maximum any more.
            if (best <= worst) break;
        }
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

double hausdorff(std::span<const Vec3> a, std::span<const Vec3> b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double snr(const FloatMesh& original, const FloatMesh& modified) {
    const auto& v = original.vertices;
    const auto& w = modified.vertices;
    if (v.size() != w.size())
        throw VertexCountMismatch("SNR needs equal vertex counts (" + std::to_string(v.size()) + " vs " +
                                  std::to_string(w.size()) + ")");
    if (v.empty()) throw EmptySet("SNR of an empty mesh");

    Vec3 mean{};
    for (const auto& p : v)
        for (int a = 0; a < 3; ++a) mean[a] += p[a];
    for (auto& m : mean) m /= static_cast<double>(v.size());

    double signal = 0.0, noise = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        signal += squared_distance(v[i], mean);
        noise += squared_distance(w[i], v[i]);
    }
    if (noise == 0.0) return kInfiniteSnr;
    return 10.0 * std::log10(signal / noise);
}

EmbeddingRate embedding_rate(std::uint64_t capacity_bits, std::uint64_t label_bits, std::uint64_t vertex_count) {
    if (vertex_count == 0) throw EmptySet("embedding rate over zero vertices");
    const double n = static_cast<double>(vertex_count);
    EmbeddingRate r;
    r.gross = static_cast<double>(capacity_bits) / n;
    r.net = capacity_bits > label_bits ? static_cast<double>(capacity_bits - label_bits) / n : 0.0;
    return r;
}

QualityReport quality_report(const FloatMesh& original, const FloatMesh& modified,
                             std::uint64_t capacity_bits, std::uint64_t label_bits) {
    QualityReport r;
    r.directed_hausdorff_ab = directed_hausdorff(original.vertices, modified.vertices);
    r.directed_hausdorff_ba = directed_hausdorff(modified.vertices, original.vertices);
    r.hausdorff_sym = std::max(r.directed_hausdorff_ab, r.directed_hausdorff_ba);
    r.snr = snr(original, modified);
    const auto rate = embedding_rate(capacity_bits, label_bits, original.vertices.size());
    r.er_gross = rate.gross;
    r.er_net = rate.net;
    return r;
}

std::string format_metric(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string QualityReport::csv_header() {
    return "directed_hausdorff_ab,directed_hausdorff_ba,hausdorff_sym,snr_db,er_gross,er_net";
}

std::string QualityReport::to_csv_row() const {
    return format_metric(directed_hausdorff_ab) + ',' + format_metric(directed_hausdorff_ba) + ',' +
           format_metric(hausdorff_sym) + ',' + format_metric(snr) + ',' + format_metric(er_gross) + ',' +
           format_metric(er_net);
}

}  // namespace meshrdh
