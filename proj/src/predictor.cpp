#include "meshrdh/predictor.hpp"

#include <algorithm>
#include <bit>

#include "meshrdh/error.hpp"

namespace meshrdh {

bool majority_bit(std::span<const std::uint8_t> votes) {
    if (votes.empty()) throw EmptyPredictors("majority vote over an empty predictor set");
    const auto ones = std::count_if(votes.begin(), votes.end(), [](auto b) { return b != 0; });
    const auto zeros = static_cast<std::ptrdiff_t>(votes.size()) - ones;
    return ones >= zeros;
}

std::uint64_t majority_prediction(std::span<const std::uint64_t> predictors, int bits) {
    if (predictors.empty()) throw EmptyPredictors("majority vote over an empty predictor set");
    const std::size_t n = predictors.size();
    std::uint64_t predicted = 0;
    for (int k = 0; k < bits; ++k) {
        std::size_t ones = 0;
        for (auto p : predictors) ones += (p >> k) & 1u;
        if (2 * ones >= n) predicted |= 1ull << k;
    }
    return predicted;
}

int first_mismatch_position(std::uint64_t value, std::uint64_t predicted, int bits) {
    const std::uint64_t diff = value ^ predicted;
    if (diff == 0) return bits + 1;
    const int highest = 63 - std::countl_zero(diff);
    return bits - highest;
}

int detect_coord_label(const BitVector& coord, std::span<const BitVector> predictors) {
    if (predictors.empty()) throw EmptyPredictors("coordinate has no predictors");
    for (const auto& p : predictors)
        if (p.size() != coord.size()) throw OutOfRange("predictor width differs from coordinate width");
    std::vector<std::uint8_t> votes(predictors.size());
    for (std::size_t pos = 0; pos < coord.size(); ++pos) {
        for (std::size_t i = 0; i < predictors.size(); ++i) votes[i] = predictors[i][pos];
        if (coord[pos] != majority_bit(votes)) return static_cast<int>(pos) + 1;
    }
    return static_cast<int>(coord.size()) + 1;
}

int vertex_label(int lx, int ly, int lz) { return std::min({lx, ly, lz, kMaxLabel}); }

LabelStream detect_all(const IntMesh& mesh, const Partition& part) {
    const int bits = mesh.params.bits;
    LabelStream out;
    out.labels.reserve(part.embedded.size());
    std::vector<std::uint64_t> column;
    for (std::size_t i = 0; i < part.embedded.size(); ++i) {
        const auto& preds = part.predictors[i];
        if (preds.empty()) {
            out.labels.push_back(0);
            continue;
        }
        const auto& coord = mesh.coords[part.embedded[i]];
        int l[3];
        for (int a = 0; a < 3; ++a) {
            column.clear();
            for (auto p : preds) column.push_back(mesh.coords[p][a]);
            l[a] = first_mismatch_position(coord[a], majority_prediction(column, bits), bits);
        }
        out.labels.push_back(static_cast<std::uint8_t>(vertex_label(l[0], l[1], l[2])));
    }
    return out;
}

std::uint64_t capacity(const LabelStream& labels) {
    std::uint64_t total = 0;
    for (auto n : labels.labels)
        if (n > 1) total += 3ull * (n - 1u);
    return total;
}

}  // namespace meshrdh
