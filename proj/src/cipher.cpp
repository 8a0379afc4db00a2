#include "meshrdh/cipher.hpp"

#include <sodium.h>

#include <algorithm>
#include <cctype>

#include "meshrdh/bitio.hpp"
#include "meshrdh/error.hpp"
#include "meshrdh/mesh_io.hpp"

namespace meshrdh {
namespace {

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) throw Error("libsodium initialisation failed");
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool looks_like_hex_key(std::string_view s) {
    return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) { return hex_value(c) >= 0; });
}

}  // namespace

Key parse_key_hex(std::string_view hex, KeyRole role) {
    hex = trim(hex);
    if (!looks_like_hex_key(hex)) throw KeyFormatError("key must be exactly 64 hex characters");
    Key key;
    key.role = role;
    for (std::size_t i = 0; i < 32; ++i)
        key.bytes[i] = static_cast<std::uint8_t>(hex_value(hex[2 * i]) << 4 | hex_value(hex[2 * i + 1]));
    return key;
}

std::string to_hex(const Key& key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (auto b : key.bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xF];
    }
    return out;
}

Key generate_key(KeyRole role) {
    ensure_sodium();
    Key key;
    key.role = role;
    randombytes_buf(key.bytes.data(), key.bytes.size());
    return key;
}

Key load_key(std::string_view hex_or_path, KeyRole role) {
    if (looks_like_hex_key(trim(hex_or_path))) return parse_key_hex(hex_or_path, role);
    const std::filesystem::path path{std::string(hex_or_path)};
    if (!std::filesystem::exists(path))
        throw KeyFormatError("'" + std::string(hex_or_path) + "' is neither a 64-hex-char key nor a key file");
    return parse_key_hex(read_text_file(path), role);
}

std::vector<std::uint8_t> keystream_bytes(const Key& key, std::uint64_t bit_count) {
    ensure_sodium();
    std::vector<std::uint8_t> out((bit_count + 7) / 8);
    if (out.empty()) return out;
    std::array<std::uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
    nonce[0] = static_cast<std::uint8_t>(key.role);
    crypto_stream_chacha20_ietf(out.data(), out.size(), nonce.data(), key.bytes.data());
    return out;
}

BitVector keystream(const Key& key, std::uint64_t bit_count) {
    const auto bytes = keystream_bytes(key, bit_count);
    BitVector out(bit_count);
    for (std::uint64_t i = 0; i < bit_count; ++i) out[i] = bit_at(bytes, i);
    return out;
}

IntMesh xor_mesh(const IntMesh& mesh, std::span<const std::uint8_t> stream) {
    const int bits = mesh.params.bits;
    const std::uint64_t needed = 3ull * static_cast<std::uint64_t>(bits) * mesh.coords.size();
    if (stream.size() * 8 < needed) throw OutOfRange("keystream shorter than the mesh bitstream");
    IntMesh out = mesh;
    BitReader reader(stream, needed);
    for (auto& c : out.coords) {
        for (auto& value : c) {
            std::uint64_t mask = 0;
            for (int k = 0; k < bits; ++k) mask = (mask << 1) | static_cast<std::uint64_t>(reader.get());
            value ^= mask;
        }
    }
    return out;
}

IntMesh xor_mesh(const IntMesh& mesh, const Key& key) {
    const std::uint64_t needed = 3ull * static_cast<std::uint64_t>(mesh.params.bits) * mesh.coords.size();
    return xor_mesh(mesh, keystream_bytes(key, needed));
}

}  // namespace meshrdh
