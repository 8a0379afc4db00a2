#include "meshrdh/quantize.hpp"

#include <algorithm>
#include <cmath>

#include "meshrdh/error.hpp"

namespace meshrdh {

int bit_length(int u) {
    if (u >= 1 && u <= 2) return 8;
    if (u >= 3 && u <= 4) return 16;
    if (u >= 5 && u <= 9) return 32;
    if (u >= 10 && u <= 33) return 64;
    throw OutOfRange("truncation coefficient u=" + std::to_string(u) + " outside [1, 33]");
}

std::uint64_t pow10(int u) {
    std::uint64_t p = 1;
    for (int i = 0; i < u; ++i) p *= 10;
    return p;
}

BoundingBox bounding_box(const FloatMesh& mesh) {
    BoundingBox box;
    if (mesh.vertices.empty()) return box;
    Vec3 lo = mesh.vertices.front(), hi = lo;
    for (const auto& v : mesh.vertices) {
        for (int a = 0; a < 3; ++a) {
            lo[a] = std::min(lo[a], v[a]);
            hi[a] = std::max(hi[a], v[a]);
        }
    }
    box.min = lo;
    box.extent = std::max({hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]});
    return box;
}

IntMesh quantize(const FloatMesh& mesh, int u) {
    if (u < kMinTruncation || u > kMaxTruncation)
        throw OutOfRange("truncation coefficient u=" + std::to_string(u) + " outside supported [1, 9]");

    IntMesh out;
    out.params.u = u;
    out.params.bits = bit_length(u);
    out.params.bbox = bounding_box(mesh);
    if (!(out.params.bbox.extent > 0.0)) throw DegenerateMesh("all vertices coincide");

    const double scale = static_cast<double>(pow10(u));
    const auto& box = out.params.bbox;
    out.coords.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) {
        IntVec3 q{};
        for (int a = 0; a < 3; ++a) {
            double norm = (v[a] - box.min[a]) / box.extent;
            double scaled = std::floor(norm * scale);
            // The far face of the box maps to exactly 10^u, still inside L bits.
            q[a] = static_cast<std::uint64_t>(std::clamp(scaled, 0.0, scale));
        }
        out.coords.push_back(q);
    }
    out.faces = mesh.faces;
    return out;
}

FloatMesh dequantize(const IntMesh& mesh) {
    const double scale = static_cast<double>(pow10(mesh.params.u));
    const auto& box = mesh.params.bbox;
    FloatMesh out;
    out.vertices.reserve(mesh.coords.size());
    for (const auto& q : mesh.coords) {
        Vec3 v{};
        for (int a = 0; a < 3; ++a)
            v[a] = box.min[a] + (static_cast<double>(q[a]) / scale) * box.extent;
        out.vertices.push_back(v);
    }
    out.faces = mesh.faces;
    return out;
}

FloatMesh raw_float_mesh(const IntMesh& mesh) {
    const double scale = static_cast<double>(pow10(mesh.params.u));
    FloatMesh out;
    out.vertices.reserve(mesh.coords.size());
    for (const auto& q : mesh.coords)
        out.vertices.push_back({q[0] / scale, q[1] / scale, q[2] / scale});
    out.faces = mesh.faces;
    return out;
}

IntMesh raw_int_mesh(const FloatMesh& mesh, const QuantParams& params) {
    const double scale = static_cast<double>(pow10(params.u));
    const double limit = std::ldexp(1.0, params.bits);
    IntMesh out;
    out.params = params;
    out.coords.reserve(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        IntVec3 q{};
        for (int a = 0; a < 3; ++a) {
            double scaled = std::nearbyint(mesh.vertices[i][a] * scale);
            if (!(scaled >= 0.0 && scaled < limit))
                throw Overflow("vertex " + std::to_string(i) + " is not an L=" +
                               std::to_string(params.bits) + " bit integer coordinate");
            q[a] = static_cast<std::uint64_t>(scaled);
        }
        out.coords.push_back(q);
    }
    out.faces = mesh.faces;
    return out;
}

BitVector to_bits(std::uint64_t value, int bits) {
    if (bits < 64 && (value >> bits) != 0)
        throw Overflow(std::to_string(value) + " does not fit in " + std::to_string(bits) + " bits");
    BitVector out(static_cast<std::size_t>(bits));
    for (int k = 0; k < bits; ++k) out[static_cast<std::size_t>(bits - 1 - k)] = (value >> k) & 1u;
    return out;
}

std::uint64_t from_bits(const BitVector& bits) {
    std::uint64_t v = 0;
    for (bool b : bits) v = (v << 1) | static_cast<std::uint64_t>(b);
    return v;
}

}  // namespace meshrdh
