#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace meshrdh {

using Vec3 = std::array<double, 3>;
using Face = std::array<std::uint32_t, 3>;

// Triangle mesh as read from an OFF file. Vertex i of the file is vertices[i];
// nothing in the library ever reorders vertices.
struct FloatMesh {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;

    bool operator==(const FloatMesh&) const = default;
};

// Parses ASCII OFF. '#' starts a comment that runs to end of line. Extra
// tokens after the three coordinates of a vertex line, or after the indices
// of a face line, are ignored (per-element colors).
FloatMesh parse_off(std::istream& in);
FloatMesh parse_off(std::string_view text);

// Emits ASCII OFF with `precision` digits after the decimal point. The edge
// count is always written as 0.
std::string write_off(const FloatMesh& mesh, int precision = 6);

FloatMesh read_off_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace meshrdh
