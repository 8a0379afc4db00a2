#pragma once

// Random fixtures and independent reference implementations used as test
// oracles. Nothing here calls into the code paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "meshrdh/mesh_io.hpp"

namespace meshrdh::testing {

// Random mesh whose vertices follow a random walk, so neighbors share MSBs
// the way scanned surfaces do. Faces are random distinct triples.
inline FloatMesh random_mesh(std::mt19937_64& rng, std::size_t vertices, std::size_t faces, double step = 0.02) {
    std::uniform_real_distribution<double> d(-step, step);
    FloatMesh m;
    Vec3 p{0.5, 0.5, 0.5};
    for (std::size_t i = 0; i < vertices; ++i) {
        for (auto& c : p) c += d(rng);
        m.vertices.push_back(p);
    }
    if (vertices >= 3) {
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(vertices - 1));
        while (m.faces.size() < faces) {
            Face f{pick(rng), pick(rng), pick(rng)};
            if (f[0] != f[1] && f[1] != f[2] && f[0] != f[2]) m.faces.push_back(f);
        }
    }
    return m;
}

// Random mesh where face triples are local in index order, like a strip.
inline FloatMesh strip_mesh(std::mt19937_64& rng, std::size_t vertices, double step = 0.01) {
    FloatMesh m = random_mesh(rng, vertices, 0, step);
    for (std::uint32_t i = 0; i + 2 < vertices; ++i) m.faces.push_back(Face{i, i + 1, i + 2});
    return m;
}

// MSB-first '0'/'1' string of `value` in `bits` digits, by repeated division.
inline std::string binary_string(std::uint64_t value, int bits) {
    std::string s(static_cast<std::size_t>(bits), '0');
    for (int i = bits - 1; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = static_cast<char>('0' + value % 2);
        value /= 2;
    }
    return s;
}

// Exhaustive label oracle: compares every bit position of every coordinate
// against a vote over the opposite-parity vertices sharing a face.
struct OracleLabels {
    std::vector<int> labels;   // per embedded vertex, ascending index
    std::uint64_t capacity = 0;
};

inline OracleLabels oracle_labels(const std::vector<std::array<std::uint64_t, 3>>& coords,
                                  const std::vector<Face>& faces, int bits, bool embed_odd_ordinals) {
    const std::size_t n = coords.size();
    std::vector<std::set<std::uint32_t>> ring(n);
    for (const auto& f : faces)
        for (auto a : f)
            for (auto b : f)
                if (a != b) ring[a].insert(b);

    auto embedded = [&](std::size_t i) { return ((i + 1) % 2 == 1) == embed_odd_ordinals; };
    OracleLabels out;
    for (std::size_t v = 0; v < n; ++v) {
        if (!embedded(v)) continue;
        std::vector<std::uint32_t> preds;
        for (auto w : ring[v])
            if (!embedded(w)) preds.push_back(w);
        if (preds.empty()) {
            out.labels.push_back(0);
            continue;
        }
        int label = bits + 1;
        for (int axis = 0; axis < 3; ++axis) {
            const std::string mine = binary_string(coords[v][axis], bits);
            int l = bits + 1;
            for (int pos = 0; pos < bits; ++pos) {
                int ones = 0, zeros = 0;
                for (auto w : preds) (binary_string(coords[w][axis], bits)[pos] == '1' ? ones : zeros)++;
                const char vote = ones >= zeros ? '1' : '0';
                if (mine[pos] != vote) {
                    l = pos + 1;
                    break;
                }
            }
            label = std::min(label, l);
        }
        label = std::min(label, 63);
        out.labels.push_back(label);
        out.capacity += 3ull * static_cast<std::uint64_t>(std::max(label - 1, 0));
    }
    return out;
}

// Double-loop directed Hausdorff without early exit.
inline double oracle_directed_hausdorff(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
    double worst = 0.0;
    for (const auto& p : a) {
        double best = INFINITY;
        for (const auto& q : b)
            best = std::min(best, std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]));
        worst = std::max(worst, best);
    }
    return worst;
}

// Ideal code length in bits of an adaptive order-0 model with add-one
// initialization over 64 symbols, without rescaling.
inline double ideal_adaptive_bits(const std::vector<std::uint8_t>& symbols) {
    std::vector<double> counts(64, 1.0);
    double bits = 0.0;
    for (std::size_t t = 0; t < symbols.size(); ++t) {
        bits += std::log2((static_cast<double>(t) + 64.0) / counts[symbols[t]]);
        counts[symbols[t]] += 1.0;
    }
    return bits;
}

}  // namespace meshrdh::testing
