#include "meshrdh/mesh_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "meshrdh/error.hpp"

namespace meshrdh {
namespace {

// Line-oriented tokenizer that strips comments and skips blank lines.
class OffReader {
public:
    explicit OffReader(std::istream& in) : in_(in) {}

    // Next non-empty line split into tokens; false at end of input.
    bool next(std::vector<std::string_view>& tokens) {
        tokens.clear();
        while (std::getline(in_, line_)) {
            ++line_no_;
            if (auto hash = line_.find('#'); hash != std::string::npos) line_.erase(hash);
            std::string_view rest(line_);
            while (!rest.empty()) {
                auto start = rest.find_first_not_of(" \t\r\f\v");
                if (start == std::string_view::npos) break;
                rest.remove_prefix(start);
                auto end = rest.find_first_of(" \t\r\f\v");
                tokens.push_back(rest.substr(0, end));
                rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }

    std::size_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    std::string line_;
    std::size_t line_no_ = 0;
};

template <typename T>
bool parse_number(std::string_view tok, T& out) {
    const char* first = tok.data();
    const char* last = first + tok.size();
    if constexpr (std::is_floating_point_v<T>) {
        if (first != last && *first == '+') ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

FloatMesh parse_off(std::istream& in) {
    OffReader reader(in);
    std::vector<std::string_view> tok;

    if (!reader.next(tok) || tok[0] != "OFF")
        throw MalformedHeader("expected ASCII OFF header", reader.line_no());

    // Counts may follow "OFF" on the same line.
    std::vector<std::string_view> counts(tok.begin() + 1, tok.end());
    if (counts.empty()) {
        if (!reader.next(tok)) throw MalformedHeader("missing element counts", reader.line_no());
        counts = tok;
    }
    std::size_t nv = 0, nf = 0, ne = 0;
    if (counts.size() != 3 || !parse_number(counts[0], nv) || !parse_number(counts[1], nf) ||
        !parse_number(counts[2], ne))
        throw MalformedHeader("element counts must be three non-negative integers "
                              "(binary OFF is not supported)",
                              reader.line_no());
    if (nv == 0) throw MalformedHeader("mesh has no vertices", reader.line_no());

    FloatMesh mesh;
    mesh.vertices.reserve(nv);
    mesh.faces.reserve(nf);

    for (std::size_t i = 0; i < nv; ++i) {
        if (!reader.next(tok))
            throw CountMismatch("header declares " + std::to_string(nv) + " vertices, found " +
                                    std::to_string(i),
                                reader.line_no());
        Vec3 v{};
        if (tok.size() < 3) throw ParseError("vertex line needs 3 coordinates", reader.line_no());
        for (int a = 0; a < 3; ++a) {
            if (!parse_number(tok[a], v[a]) || !std::isfinite(v[a]))
                throw ParseError("bad coordinate '" + std::string(tok[a]) + "'", reader.line_no());
        }
        mesh.vertices.push_back(v);
    }

    for (std::size_t i = 0; i < nf; ++i) {
        if (!reader.next(tok))
            throw CountMismatch("header declares " + std::to_string(nf) + " faces, found " +
                                    std::to_string(i),
                                reader.line_no());
        std::size_t arity = 0;
        if (!parse_number(tok[0], arity)) throw ParseError("bad face arity", reader.line_no());
        if (arity != 3)
            throw NonTriangle("face has " + std::to_string(arity) + " vertices", reader.line_no());
        if (tok.size() < 4) throw ParseError("face line needs 3 indices", reader.line_no());
        Face f{};
        for (int k = 0; k < 3; ++k) {
            long long idx = 0;
            if (!parse_number(tok[k + 1], idx)) throw ParseError("bad face index", reader.line_no());
            if (idx < 0 || static_cast<std::size_t>(idx) >= nv)
                throw BadIndex("face references vertex " + std::to_string(idx) + " of " +
                                   std::to_string(nv),
                               reader.line_no());
            f[k] = static_cast<std::uint32_t>(idx);
        }
        mesh.faces.push_back(f);
    }

    if (reader.next(tok))
        throw CountMismatch("data beyond the declared vertex and face counts", reader.line_no());
    return mesh;
}

FloatMesh parse_off(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_off(in);
}

std::string write_off(const FloatMesh& mesh, int precision) {
    std::string out;
    out.reserve(32 + mesh.vertices.size() * (3 * (precision + 8)) + mesh.faces.size() * 24);
    out += "OFF\n";
    out += std::to_string(mesh.vertices.size()) + ' ' + std::to_string(mesh.faces.size()) + " 0\n";
    char buf[128];
    for (const auto& v : mesh.vertices) {
        int n = std::snprintf(buf, sizeof buf, "%.*f %.*f %.*f\n", precision, v[0], precision, v[1],
                              precision, v[2]);
        out.append(buf, static_cast<std::size_t>(n));
    }
    for (const auto& f : mesh.faces) {
        out += "3 " + std::to_string(f[0]) + ' ' + std::to_string(f[1]) + ' ' +
               std::to_string(f[2]) + '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

FloatMesh read_off_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_off(in);
}

}  // namespace meshrdh
