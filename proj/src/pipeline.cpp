#include "meshrdh/pipeline.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "meshrdh/bitio.hpp"
#include "meshrdh/error.hpp"

namespace meshrdh {
namespace {

std::vector<std::uint32_t> embedded_indices(std::size_t vertex_count, Parity parity) {
    std::vector<std::uint32_t> out;
    out.reserve(vertex_count / 2 + 1);
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (is_embedded(v, parity)) out.push_back(static_cast<std::uint32_t>(v));
    return out;
}

void check_mesh_matches(const IntMesh& mesh, const AuxRecord& aux, const LabelStream& labels) {
    if (mesh.params.bits != bit_length(aux.u))
        throw SidecarError("mesh bit width does not match the sidecar's u");
    const auto expected = embedded_indices(mesh.coords.size(), aux.parity).size();
    if (labels.labels.size() != expected)
        throw SidecarError("sidecar holds " + std::to_string(labels.labels.size()) +
                           " labels but the mesh has " + std::to_string(expected) + " embedded vertices");
}

// Visits every reserved bit in the global slot order: embedded vertices
// ascending, then x, y, z, then MSB downwards. `fn(value, bit_index)` returns
// false to stop early.
template <typename Fn>
void for_each_slot(std::vector<IntVec3>& coords, const std::vector<std::uint32_t>& embedded,
                   const LabelStream& labels, int bits, Fn&& fn) {
    for (std::size_t i = 0; i < embedded.size(); ++i) {
        const int n = labels.labels[i];
        if (n < 2) continue;
        auto& c = coords[embedded[i]];
        for (auto& value : c) {
            for (int pos = 1; pos <= n - 1; ++pos) {
                if (!fn(value, bits - pos)) return;
            }
        }
    }
}

std::uint32_t payload_crc(const BitVector& payload) {
    const auto bytes = bits_to_bytes(payload);
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, bytes.data(), static_cast<uInt>(bytes.size()));
    return static_cast<std::uint32_t>(crc);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string hex_bytes(const std::vector<std::uint8_t>& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xF];
    }
    return out;
}

template <typename T>
T parse_field(const std::map<std::string, std::string>& fields, const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw SidecarError("sidecar is missing '" + key + "'");
    T value{};
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw SidecarError("sidecar field '" + key + "' has bad value '" + s + "'");
    return value;
}

}  // namespace

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes) {
    BitVector out(bytes.size() * 8);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = bit_at(bytes, i);
    return out;
}

std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits) {
    BitWriter w;
    for (bool b : bits) w.put(b);
    return w.take();
}

LabelStream decode_labels(const AuxRecord& aux) {
    LabelStream labels;
    try {
        labels.labels = arith_decode(aux.labels);
    } catch (const TruncatedStream& e) {
        throw SidecarError(std::string("label stream is damaged: ") + e.what());
    }
    if (labels.labels.size() != aux.embedded_count)
        throw SidecarError("label count differs from embedded vertex count");
    const int max_label = bit_length(aux.u) + 1;
    for (auto n : labels.labels)
        if (n > max_label) throw SidecarError("label " + std::to_string(n) + " exceeds L+1");
    if (capacity(labels) != aux.capacity_bits)
        throw SidecarError("capacity_bits does not match the decoded labels");
    return labels;
}

Partition partition_for(const IntMesh& mesh, const AuxRecord& aux) {
    return partition(mesh.coords.size(), build_adjacency(mesh.coords.size(), mesh.faces), aux.parity);
}

std::uint64_t max_payload_bits(const AuxRecord& aux) {
    return aux.capacity_bits > kContainerOverheadBits ? aux.capacity_bits - kContainerOverheadBits : 0;
}

ProtectedMesh vacate_and_encrypt(const FloatMesh& mesh, int u, Parity parity, const Key& encryption_key) {
    const IntMesh plain = quantize(mesh, u);
    const Partition part = partition(plain.coords.size(), build_adjacency(plain.coords.size(), plain.faces), parity);
    const LabelStream labels = detect_all(plain, part);

    ProtectedMesh out;
    out.aux.u = u;
    out.aux.parity = parity;
    out.aux.bbox = plain.params.bbox;
    out.aux.embedded_count = labels.labels.size();
    out.aux.labels = arith_encode(labels.labels);
    out.aux.capacity_bits = capacity(labels);
    out.encrypted = xor_mesh(plain, encryption_key);
    return out;
}

IntMesh embed(const IntMesh& encrypted, const AuxRecord& aux, const BitVector& payload,
              const Key& hiding_key) {
    const LabelStream labels = decode_labels(aux);
    check_mesh_matches(encrypted, aux, labels);

    const std::uint64_t container_bits = kContainerOverheadBits + payload.size();
    if (container_bits > aux.capacity_bits) throw CapacityExceeded(aux.capacity_bits, container_bits);

    BitWriter container;
    container.put_bits(payload.size(), 64);
    for (bool b : payload) container.put(b);
    container.put_bits(payload_crc(payload), 32);

    const auto stream = keystream_bytes(hiding_key, container_bits);
    const auto& plain = container.bytes();

    IntMesh marked = encrypted;
    const auto embedded = embedded_indices(marked.coords.size(), aux.parity);
    std::uint64_t next = 0;
    for_each_slot(marked.coords, embedded, labels, marked.params.bits, [&](std::uint64_t& value, int bit) {
        if (next == container_bits) return false;
        const bool b = bit_at(plain, next) != bit_at(stream, next);
        value = (value & ~(1ull << bit)) | (static_cast<std::uint64_t>(b) << bit);
        ++next;
        return true;
    });
    return marked;
}

BitVector extract(const IntMesh& marked, const AuxRecord& aux, const Key& hiding_key) {
    const LabelStream labels = decode_labels(aux);
    check_mesh_matches(marked, aux, labels);
    if (aux.capacity_bits < kContainerOverheadBits)
        throw ChecksumMismatch("mesh capacity is too small to hold a payload container");

    // Reads every slot; the container prefix is decrypted afterwards.
    BitVector slots;
    slots.reserve(aux.capacity_bits);
    auto coords = marked.coords;
    const auto embedded = embedded_indices(coords.size(), aux.parity);
    for_each_slot(coords, embedded, labels, marked.params.bits, [&](std::uint64_t& value, int bit) {
        slots.push_back((value >> bit) & 1u);
        return true;
    });

    const auto stream = keystream_bytes(hiding_key, slots.size());
    auto plain_bit = [&](std::uint64_t i) { return slots[i] != bit_at(stream, i); };

    std::uint64_t length = 0;
    for (std::uint64_t i = 0; i < 64; ++i) length = (length << 1) | static_cast<std::uint64_t>(plain_bit(i));
    if (length > max_payload_bits(aux))
        throw LengthOverflow("decoded payload length " + std::to_string(length) + " exceeds capacity; "
                             "wrong data-hiding key or damaged mesh");

    BitVector payload(length);
    for (std::uint64_t i = 0; i < length; ++i) payload[i] = plain_bit(64 + i);
    std::uint32_t crc = 0;
    for (std::uint64_t i = 0; i < 32; ++i) crc = (crc << 1) | static_cast<std::uint32_t>(plain_bit(64 + length + i));
    if (crc != payload_crc(payload))
        throw ChecksumMismatch("payload checksum mismatch; wrong data-hiding key or damaged mesh");
    return payload;
}

IntMesh recover_integer(const IntMesh& marked, const AuxRecord& aux, const Key& encryption_key) {
    const LabelStream labels = decode_labels(aux);
    check_mesh_matches(marked, aux, labels);

    IntMesh mesh = xor_mesh(marked, encryption_key);
    mesh.params = aux.params();
    const Partition part = partition_for(mesh, aux);
    const int bits = mesh.params.bits;
    std::vector<std::uint64_t> column;
    for (std::size_t i = 0; i < part.embedded.size(); ++i) {
        const int n = labels.labels[i];
        if (n < 2) continue;
        auto& coord = mesh.coords[part.embedded[i]];
        for (int a = 0; a < 3; ++a) {
            column.clear();
            for (auto p : part.predictors[i]) column.push_back(mesh.coords[p][a]);
            coord[a] = replace_msbs(coord[a], majority_prediction(column, bits), bits, n - 1);
        }
    }
    return mesh;
}

FloatMesh recover(const IntMesh& marked, const AuxRecord& aux, const Key& encryption_key) {
    return dequantize(recover_integer(marked, aux, encryption_key));
}

ExtractRecoverResult extract_and_recover(const IntMesh& marked, const AuxRecord& aux,
                                         const Key& hiding_key, const Key& encryption_key) {
    ExtractRecoverResult out;
    out.payload = extract(marked, aux, hiding_key);
    out.mesh = recover_integer(marked, aux, encryption_key);
    return out;
}

std::string write_sidecar(const AuxRecord& aux) {
    std::string out;
    out += "u: " + std::to_string(aux.u) + '\n';
    out += "parity: " + std::string(to_string(aux.parity)) + '\n';
    out += "suite: " + aux.suite + '\n';
    out += "bbox: " + format_double(aux.bbox.min[0]) + ' ' + format_double(aux.bbox.min[1]) + ' ' +
           format_double(aux.bbox.min[2]) + ' ' + format_double(aux.bbox.extent) + '\n';
    out += "labels_count: " + std::to_string(aux.labels.symbol_count) + '\n';
    out += "labels_bits: " + std::to_string(aux.labels.bit_count) + '\n';
    out += "capacity_bits: " + std::to_string(aux.capacity_bits) + '\n';
    out += "labels_hex: " + hex_bytes(aux.labels.bytes) + '\n';
    return out;
}

AuxRecord parse_sidecar(std::string_view text) {
    std::map<std::string, std::string> fields;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw SidecarError("expected 'key: value'", line_no);
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        const auto start = value.find_first_not_of(' ');
        value = start == std::string::npos ? "" : value.substr(start);
        if (!fields.emplace(key, value).second) throw SidecarError("duplicate field '" + key + "'", line_no);
    }

    static const char* known[] = {"u", "parity", "suite", "bbox", "labels_count", "labels_bits",
                                  "capacity_bits", "labels_hex"};
    for (const auto& [k, v] : fields) {
        if (std::find(std::begin(known), std::end(known), k) == std::end(known))
            throw SidecarError("unknown field '" + k + "'");
    }

    AuxRecord aux;
    aux.u = parse_field<int>(fields, "u");
    if (aux.u < kMinTruncation || aux.u > kMaxTruncation) throw SidecarError("u out of range");

    auto parity = fields.count("parity") ? parse_parity(fields["parity"]) : std::nullopt;
    if (!parity) throw SidecarError("parity must be 'odd' or 'even'");
    aux.parity = *parity;

    aux.suite = fields.count("suite") ? fields["suite"] : "";
    if (aux.suite != kKeystreamSuite) throw SidecarError("unsupported keystream suite '" + aux.suite + "'");

    if (!fields.count("bbox")) throw SidecarError("sidecar is missing 'bbox'");
    {
        std::istringstream bb(fields["bbox"]);
        std::string tok;
        double vals[4];
        for (double& v : vals) {
            if (!(bb >> tok)) throw SidecarError("bbox needs 4 numbers");
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) throw SidecarError("bad bbox value");
        }
        if (bb >> tok) throw SidecarError("bbox needs 4 numbers");
        aux.bbox.min = {vals[0], vals[1], vals[2]};
        aux.bbox.extent = vals[3];
        if (!(aux.bbox.extent > 0.0)) throw SidecarError("bbox extent must be positive");
    }

    aux.labels.symbol_count = parse_field<std::uint64_t>(fields, "labels_count");
    aux.embedded_count = aux.labels.symbol_count;
    aux.labels.bit_count = parse_field<std::uint64_t>(fields, "labels_bits");
    aux.capacity_bits = parse_field<std::uint64_t>(fields, "capacity_bits");

    if (!fields.count("labels_hex")) throw SidecarError("sidecar is missing 'labels_hex'");
    const auto& hex = fields["labels_hex"];
    if (hex.size() % 2 != 0) throw SidecarError("labels_hex has odd length");
    aux.labels.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(hex.data() + i, hex.data() + i + 2, v, 16);
        if (ec != std::errc() || ptr != hex.data() + i + 2) throw SidecarError("labels_hex is not hex");
        aux.labels.bytes.push_back(static_cast<std::uint8_t>(v));
    }
    if (aux.labels.bytes.size() != (aux.labels.bit_count + 7) / 8)
        throw SidecarError("labels_hex length does not match labels_bits");
    return aux;
}

std::string write_int_off(const IntMesh& mesh) {
    const std::uint64_t scale = pow10(mesh.params.u);
    const int u = mesh.params.u;
    std::string out = "OFF\n" + std::to_string(mesh.coords.size()) + ' ' + std::to_string(mesh.faces.size()) + " 0\n";
    char buf[160];
    for (const auto& c : mesh.coords) {
        int n = std::snprintf(buf, sizeof buf, "%llu.%0*llu %llu.%0*llu %llu.%0*llu\n",
                              static_cast<unsigned long long>(c[0] / scale), u,
                              static_cast<unsigned long long>(c[0] % scale),
                              static_cast<unsigned long long>(c[1] / scale), u,
                              static_cast<unsigned long long>(c[1] % scale),
                              static_cast<unsigned long long>(c[2] / scale), u,
                              static_cast<unsigned long long>(c[2] % scale));
        out.append(buf, static_cast<std::size_t>(n));
    }
    for (const auto& f : mesh.faces)
        out += "3 " + std::to_string(f[0]) + ' ' + std::to_string(f[1]) + ' ' + std::to_string(f[2]) + '\n';
    return out;
}

IntMesh parse_int_off(std::string_view text, const AuxRecord& aux) {
    return raw_int_mesh(parse_off(text), aux.params());
}

}  // namespace meshrdh
