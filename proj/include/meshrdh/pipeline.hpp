#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "meshrdh/arith_coder.hpp"
#include "meshrdh/cipher.hpp"
#include "meshrdh/mesh_io.hpp"
#include "meshrdh/predictor.hpp"
#include "meshrdh/quantize.hpp"
#include "meshrdh/topology.hpp"

namespace meshrdh {

// Sidecar that travels with an encrypted or marked mesh. It carries the
// quantization parameters and the compressed per-vertex labels; the receiver
// needs it to locate payload bits and to know how many MSBs to restore.
struct AuxRecord {
    int u = 5;
    Parity parity = Parity::Odd;
    std::string suite{kKeystreamSuite};
    BoundingBox bbox;
    std::uint64_t embedded_count = 0;
    CodedLabels labels;
    std::uint64_t capacity_bits = 0;

    QuantParams params() const { return {u, bit_length(u), bbox}; }
    bool operator==(const AuxRecord&) const = default;
};

// Payload framing: 64-bit bit length, the payload, CRC-32 of the payload
// packed MSB first into bytes.
inline constexpr std::uint64_t kContainerOverheadBits = 96;

struct ProtectedMesh {
    IntMesh encrypted;
    AuxRecord aux;
};

struct ExtractRecoverResult {
    BitVector payload;
    IntMesh mesh;  // integer coordinates, equal to quantize(original)
};

// Content owner: quantize, partition, label, compress labels, encrypt with K_e.
ProtectedMesh vacate_and_encrypt(const FloatMesh& mesh, int u, Parity parity, const Key& encryption_key);

// Data hider: frames the payload, encrypts it with K_d and substitutes it
// into the reserved MSBs. Throws CapacityExceeded.
IntMesh embed(const IntMesh& encrypted, const AuxRecord& aux, const BitVector& payload,
              const Key& hiding_key);

// Receiver holding K_d. Reads the marked mesh directly (before any
// decryption). Throws ChecksumMismatch (or its subclass LengthOverflow).
BitVector extract(const IntMesh& marked, const AuxRecord& aux, const Key& hiding_key);

// Receiver holding K_e. Decrypts and restores the reserved MSBs from the
// untouched prediction set. A wrong key is not detectable here.
IntMesh recover_integer(const IntMesh& marked, const AuxRecord& aux, const Key& encryption_key);
FloatMesh recover(const IntMesh& marked, const AuxRecord& aux, const Key& encryption_key);

// Receiver holding both keys. Extraction always runs on the marked mesh
// first, then recovery.
ExtractRecoverResult extract_and_recover(const IntMesh& marked, const AuxRecord& aux,
                                         const Key& hiding_key, const Key& encryption_key);

// Decodes the labels and checks them against the record and the mesh.
// Throws SidecarError on any inconsistency.
LabelStream decode_labels(const AuxRecord& aux);
Partition partition_for(const IntMesh& mesh, const AuxRecord& aux);

// Bits available to a payload after framing, 0 when framing does not fit.
std::uint64_t max_payload_bits(const AuxRecord& aux);

std::string write_sidecar(const AuxRecord& aux);
AuxRecord parse_sidecar(std::string_view text);

// OFF text for encrypted/marked meshes: raw integers divided by 10^u, u decimals.
std::string write_int_off(const IntMesh& mesh);
IntMesh parse_int_off(std::string_view text, const AuxRecord& aux);

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits);

}  // namespace meshrdh
