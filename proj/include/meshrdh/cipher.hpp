#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meshrdh/quantize.hpp"

namespace meshrdh {

enum class KeyRole : std::uint8_t { Encryption = 0, DataHiding = 1 };

// 256-bit secret, written externally as 64 hex characters.
struct Key {
    std::array<std::uint8_t, 32> bytes{};
    KeyRole role = KeyRole::Encryption;

    bool operator==(const Key&) const = default;
};

// Keystream construction recorded in the sidecar. The stream for key K and
// role r is the ChaCha20 (IETF, 96-bit nonce) keystream with block counter
// starting at 0 and nonce = [r, 0, 0, ..., 0]; bits are taken MSB first
// from each successive byte.
inline constexpr std::string_view kKeystreamSuite = "chacha20-ietf-msb/1";

Key parse_key_hex(std::string_view hex, KeyRole role);
std::string to_hex(const Key& key);
Key generate_key(KeyRole role);

// Accepts either 64 hex characters or a path to a file holding them.
Key load_key(std::string_view hex_or_path, KeyRole role);

// First ceil(bit_count / 8) keystream bytes. Prefix stable.
std::vector<std::uint8_t> keystream_bytes(const Key& key, std::uint64_t bit_count);
BitVector keystream(const Key& key, std::uint64_t bit_count);

// XORs every coordinate bit with the stream, consumed vertex by vertex,
// x then y then z, L bits each MSB first. `stream` must hold at least
// 3 * L * vertex_count bits.
IntMesh xor_mesh(const IntMesh& mesh, std::span<const std::uint8_t> stream);
IntMesh xor_mesh(const IntMesh& mesh, const Key& key);

}  // namespace meshrdh
