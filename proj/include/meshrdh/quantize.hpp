#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "meshrdh/mesh_io.hpp"

namespace meshrdh {

using BitVector = std::vector<bool>;
using IntVec3 = std::array<std::uint64_t, 3>;

inline constexpr int kMinTruncation = 1;
inline constexpr int kMaxTruncation = 9;

// Axis-aligned box with one shared extent, so normalization keeps aspect ratio.
struct BoundingBox {
    Vec3 min{};
    double extent = 1.0;

    bool operator==(const BoundingBox&) const = default;
};

struct QuantParams {
    int u = 5;     // decimal digits kept by truncation
    int bits = 32; // L, width of every integer coordinate
    BoundingBox bbox;

    bool operator==(const QuantParams&) const = default;
};

// Quantized mesh. Every coordinate satisfies 0 <= c < 2^params.bits.
struct IntMesh {
    QuantParams params;
    std::vector<IntVec3> coords;
    std::vector<Face> faces;

    bool operator==(const IntMesh&) const = default;
};

// Integer bit width for truncation coefficient u: 8, 16, 32 or 64.
// Throws OutOfRange outside [1, 33].
int bit_length(int u);

std::uint64_t pow10(int u);

BoundingBox bounding_box(const FloatMesh& mesh);

// v' = floor(((v - min) / extent) * 10^u). Only u in [1, 9] is supported.
// Throws OutOfRange for other u, DegenerateMesh when all vertices coincide.
IntMesh quantize(const FloatMesh& mesh, int u);

// Inverse map: min + (v' / 10^u) * extent.
FloatMesh dequantize(const IntMesh& mesh);

// Writes raw integers as v'/10^u with exactly u decimals, no box transform.
// This is how encrypted and marked meshes are stored as OFF.
FloatMesh raw_float_mesh(const IntMesh& mesh);

// Reads coordinates written by raw_float_mesh back into integers.
// Throws Overflow if a value does not fit the L-bit range.
IntMesh raw_int_mesh(const FloatMesh& mesh, const QuantParams& params);

// Bit k (0 = LSB) of the result's MSB-first vector is floor(v / 2^k) mod 2.
// Throws Overflow if v >= 2^bits.
BitVector to_bits(std::uint64_t value, int bits);
std::uint64_t from_bits(const BitVector& bits);

}  // namespace meshrdh
