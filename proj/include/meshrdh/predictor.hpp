#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "meshrdh/quantize.hpp"
#include "meshrdh/topology.hpp"

namespace meshrdh {

// Largest label the 6-bit fixed-length code can hold.
inline constexpr int kMaxLabel = 63;
inline constexpr int kLabelSymbolBits = 6;

// Per embedded vertex, in partition order. Label n means the first n-1 MSBs
// of every coordinate match the majority prediction; 0 means no predictors.
// n = L+1 means every bit matched.
struct LabelStream {
    std::vector<std::uint8_t> labels;

    bool operator==(const LabelStream&) const = default;
};

// Majority vote over 0/1 values, ties resolved to 1. Detection and recovery
// must agree on the tie rule. Throws EmptyPredictors.
bool majority_bit(std::span<const std::uint8_t> votes);

// Per-bit majority over predictor values, all `bits` wide. Throws EmptyPredictors.
std::uint64_t majority_prediction(std::span<const std::uint64_t> predictors, int bits);

// 1-based MSB-first position of the first bit where `coord` disagrees with
// the majority of `predictors`; L+1 when none does.
int detect_coord_label(const BitVector& coord, std::span<const BitVector> predictors);

// Integer form of detect_coord_label against an already-voted prediction.
int first_mismatch_position(std::uint64_t value, std::uint64_t predicted, int bits);

// min(l1, l2, l3) clamped to kMaxLabel.
int vertex_label(int lx, int ly, int lz);

// Labels computed from the plaintext integer coordinates.
LabelStream detect_all(const IntMesh& mesh, const Partition& part);

// Embeddable bits: sum over vertices of 3 * max(n - 1, 0).
std::uint64_t capacity(const LabelStream& labels);

// Replaces the top `count` bits of a `bits`-wide value with the top `count`
// bits of `source`.
constexpr std::uint64_t replace_msbs(std::uint64_t value, std::uint64_t source, int bits, int count) {
    if (count <= 0) return value;
    const int low = bits - count;
    const std::uint64_t width_mask = bits >= 64 ? ~0ull : ((1ull << bits) - 1);
    const std::uint64_t low_mask = low >= 64 ? ~0ull : ((1ull << low) - 1);
    const std::uint64_t high_mask = width_mask & ~low_mask;
    return (value & low_mask) | (source & high_mask);
}

}  // namespace meshrdh
