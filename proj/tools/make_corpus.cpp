// Writes the bundled test corpus: four smooth triangle meshes with a little
// deterministic surface noise, stored at six decimals like typical scanned
// OFF models. Usage: make_corpus <output-dir>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>

#include "meshrdh/mesh_io.hpp"

using meshrdh::Face;
using meshrdh::FloatMesh;
using meshrdh::Vec3;

namespace {

constexpr double kPi = std::numbers::pi;

// splitmix64; portable, unlike the <random> distributions.
class Noise {
public:
    explicit Noise(std::uint64_t seed) : state_(seed) {}
    double next() {  // uniform in [-1, 1)
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-52 - 1.0;
    }

private:
    std::uint64_t state_;
};

// Quad grid of rows x cols, optionally wrapping in either direction.
void grid_faces(FloatMesh& m, int rows, int cols, bool wrap_rows, bool wrap_cols, std::uint32_t base = 0) {
    const int row_end = wrap_rows ? rows : rows - 1;
    const int col_end = wrap_cols ? cols : cols - 1;
    auto id = [&](int r, int c) { return base + static_cast<std::uint32_t>((r % rows) * cols + (c % cols)); };
    for (int r = 0; r < row_end; ++r) {
        for (int c = 0; c < col_end; ++c) {
            m.faces.push_back(Face{id(r, c), id(r, c + 1), id(r + 1, c + 1)});
            m.faces.push_back(Face{id(r, c), id(r + 1, c + 1), id(r + 1, c)});
        }
    }
}

// Closed surface of revolution around z: profile(t) gives (radius, height)
// for t in (0, 1); poles are added at t = 0 and t = 1.
FloatMesh revolve(int rings, int segments, const std::function<std::pair<double, double>(double)>& profile,
                  double bottom, double top, Noise& noise, double jitter) {
    FloatMesh m;
    m.vertices.push_back({0.0, 0.0, bottom});
    for (int r = 0; r < rings; ++r) {
        const double t = (r + 1.0) / (rings + 1.0);
        const auto [radius, z] = profile(t);
        for (int s = 0; s < segments; ++s) {
            const double phi = 2.0 * kPi * s / segments;
            const double rr = radius * (1.0 + jitter * noise.next());
            m.vertices.push_back({rr * std::cos(phi), rr * std::sin(phi), z + jitter * 0.5 * noise.next()});
        }
    }
    m.vertices.push_back({0.0, 0.0, top});
    const auto top_id = static_cast<std::uint32_t>(m.vertices.size() - 1);
    grid_faces(m, rings, segments, false, true, 1);
    for (int s = 0; s < segments; ++s) {
        const auto a = static_cast<std::uint32_t>(1 + s);
        const auto b = static_cast<std::uint32_t>(1 + (s + 1) % segments);
        m.faces.push_back(Face{0, b, a});
        const auto base = static_cast<std::uint32_t>(1 + (rings - 1) * segments);
        m.faces.push_back(Face{top_id, base + static_cast<std::uint32_t>(s),
                               base + static_cast<std::uint32_t>((s + 1) % segments)});
    }
    return m;
}

void transform(FloatMesh& m, double scale, const Vec3& offset) {
    for (auto& v : m.vertices)
        for (int a = 0; a < 3; ++a) v[a] = v[a] * scale + offset[a];
}

FloatMesh torus() {
    Noise noise(0x7041);
    FloatMesh m;
    const int rows = 48, cols = 24;
    const double major = 1.0, minor = 0.35;
    for (int r = 0; r < rows; ++r) {
        const double theta = 2.0 * kPi * r / rows;
        for (int c = 0; c < cols; ++c) {
            const double phi = 2.0 * kPi * c / cols;
            const double rad = minor * (1.0 + 0.01 * noise.next());
            m.vertices.push_back({(major + rad * std::cos(phi)) * std::cos(theta),
                                  (major + rad * std::cos(phi)) * std::sin(theta), rad * std::sin(phi)});
        }
    }
    grid_faces(m, rows, cols, true, true);
    transform(m, 1.7, {0.31, -1.23, 0.77});
    return m;
}

FloatMesh sphere() {
    Noise noise(0x5943);
    auto m = revolve(
        29, 40,
        [](double t) {
            const double theta = kPi * t;
            return std::pair{std::sin(theta), -std::cos(theta)};
        },
        -1.0, 1.0, noise, 0.004);
    transform(m, 2.35, {-4.1, 0.6, 12.9});
    return m;
}

FloatMesh mushroom() {
    Noise noise(0x3057);
    // Stem for the lower half, then an overhanging cap.
    auto m = revolve(
        16, 20,
        [](double t) {
            if (t < 0.5) return std::pair{0.25 + 0.05 * std::sin(2.0 * kPi * t), 1.6 * t};
            const double s = (t - 0.5) * 2.0;  // 0 .. 1 over the cap
            const double angle = kPi * s;
            return std::pair{0.25 + 0.8 * std::sin(angle) + 0.15 * (1.0 - s), 0.8 + 0.55 * (1.0 - std::cos(angle)) * 0.6};
        },
        0.0, 1.5, noise, 0.006);
    transform(m, 0.93, {0.052, 0.117, -0.38});
    return m;
}

FloatMesh terrain() {
    Noise noise(0x7E44);
    FloatMesh m;
    const int rows = 56, cols = 56;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const double x = c / (cols - 1.0), y = r / (rows - 1.0);
            const double h = 0.12 * std::sin(3.1 * x + 0.4) * std::cos(2.3 * y) + 0.05 * std::sin(9.0 * x * y) +
                             0.002 * noise.next();
            m.vertices.push_back({x, y, h});
        }
    }
    grid_faces(m, rows, cols, false, false);
    transform(m, 13.7, {250.4, -80.25, 3.3});
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    const std::pair<const char*, FloatMesh> meshes[] = {
        {"mushroom.off", mushroom()}, {"sphere.off", sphere()}, {"terrain.off", terrain()}, {"torus.off", torus()}};
    for (const auto& [name, mesh] : meshes) {
        meshrdh::write_text_file(dir / name, meshrdh::write_off(mesh, 6));
        std::cout << name << ": " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " faces\n";
    }
    return 0;
}
