#include "meshrdh/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "meshrdh/error.hpp"
#include "meshrdh/metrics.hpp"
#include "meshrdh/pipeline.hpp"

namespace meshrdh::cli {
namespace {

namespace fs = std::filesystem;

// Fixed keys so `evaluate` is reproducible when none are given.
constexpr std::string_view kDefaultEvalKe = "5eed0e0000000000000000000000000000000000000000000000000000000001";
constexpr std::string_view kDefaultEvalKd = "5eed0d0000000000000000000000000000000000000000000000000000000002";

std::vector<std::uint8_t> read_binary(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_binary(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

fs::path sidecar_path(const std::string& given, const fs::path& mesh_path) {
    return given.empty() ? fs::path(mesh_path.string() + ".aux") : fs::path(given);
}

AuxRecord load_sidecar(const fs::path& path) {
    if (!fs::exists(path)) throw MissingSidecar("sidecar not found: " + path.string());
    return parse_sidecar(read_text_file(path));
}

IntMesh load_int_mesh(const fs::path& path, const AuxRecord& aux) {
    return parse_int_off(read_text_file(path), aux);
}

// Digits needed so a dequantized coordinate keeps its 10^-u resolution.
int output_precision(const AuxRecord& aux) {
    const double step = aux.bbox.extent / static_cast<double>(pow10(aux.u));
    const int digits = static_cast<int>(std::ceil(-std::log10(step))) + 2;
    return std::clamp(digits, 6, 17);
}

void write_payload(const fs::path& path, const BitVector& payload) {
    write_binary(path, bits_to_bytes(payload));
}

struct Args {
    std::string input;
    std::string out;
    std::string sidecar;
    std::string ke;
    std::string kd;
    std::string payload;
    std::string role = "enc";
    std::string parity = "odd";
    int u = 5;
    std::string corpus;
    int u_min = 2;
    int u_max = 9;
    std::string csv;
};

Parity parse_parity_arg(const std::string& s) {
    auto p = parse_parity(s);
    if (!p) throw OutOfRange("--parity must be 'odd' or 'even'");
    return *p;
}

int cmd_keygen(const Args& a, std::ostream& out) {
    if (a.role != "enc" && a.role != "hide") throw OutOfRange("--role must be 'enc' or 'hide'");
    const Key key = generate_key(a.role == "enc" ? KeyRole::Encryption : KeyRole::DataHiding);
    const std::string line = to_hex(key) + '\n';
    if (a.out.empty())
        out << line;
    else
        write_text_file(a.out, line);
    return kOk;
}

int cmd_protect(const Args& a, std::ostream& out) {
    const FloatMesh mesh = read_off_file(a.input);
    const Key ke = load_key(a.ke, KeyRole::Encryption);
    const auto result = vacate_and_encrypt(mesh, a.u, parse_parity_arg(a.parity), ke);
    const fs::path side = sidecar_path(a.sidecar, a.out);
    write_text_file(a.out, write_int_off(result.encrypted));
    write_text_file(side, write_sidecar(result.aux));
    out << "vertices: " << mesh.vertices.size() << '\n'
        << "embedded_vertices: " << result.aux.embedded_count << '\n'
        << "capacity_bits: " << result.aux.capacity_bits << '\n'
        << "label_bits: " << result.aux.labels.bit_count << '\n'
        << "max_payload_bytes: " << max_payload_bits(result.aux) / 8 << '\n';
    return kOk;
}

int cmd_embed(const Args& a, std::ostream& out) {
    const AuxRecord aux = load_sidecar(sidecar_path(a.sidecar, a.input));
    const IntMesh enc = load_int_mesh(a.input, aux);
    const Key kd = load_key(a.kd, KeyRole::DataHiding);
    const BitVector payload = bytes_to_bits(read_binary(a.payload));
    const IntMesh marked = embed(enc, aux, payload, kd);
    write_text_file(a.out, write_int_off(marked));
    // The sidecar is unchanged by embedding; place a copy next to the output.
    const fs::path out_side = fs::path(a.out + ".aux");
    if (a.sidecar.empty() || fs::path(a.sidecar) != out_side) write_text_file(out_side, write_sidecar(aux));
    out << "embedded_bits: " << payload.size() << " of " << max_payload_bits(aux) << '\n';
    return kOk;
}

int cmd_extract(const Args& a, std::ostream& out) {
    const AuxRecord aux = load_sidecar(sidecar_path(a.sidecar, a.input));
    const IntMesh marked = load_int_mesh(a.input, aux);
    const BitVector payload = extract(marked, aux, load_key(a.kd, KeyRole::DataHiding));
    write_payload(a.out, payload);
    out << "extracted_bits: " << payload.size() << '\n';
    return kOk;
}

int cmd_recover(const Args& a, std::ostream& out) {
    const AuxRecord aux = load_sidecar(sidecar_path(a.sidecar, a.input));
    const IntMesh marked = load_int_mesh(a.input, aux);
    const FloatMesh mesh = recover(marked, aux, load_key(a.ke, KeyRole::Encryption));
    write_text_file(a.out, write_off(mesh, output_precision(aux)));
    out << "recovered_vertices: " << mesh.vertices.size() << '\n';
    return kOk;
}

int cmd_extract_recover(const Args& a, std::ostream& out) {
    const AuxRecord aux = load_sidecar(sidecar_path(a.sidecar, a.input));
    const IntMesh marked = load_int_mesh(a.input, aux);
    const auto result = extract_and_recover(marked, aux, load_key(a.kd, KeyRole::DataHiding),
                                            load_key(a.ke, KeyRole::Encryption));
    write_payload(a.payload, result.payload);
    write_text_file(a.out, write_off(dequantize(result.mesh), output_precision(aux)));
    out << "extracted_bits: " << result.payload.size() << '\n'
        << "recovered_vertices: " << result.mesh.coords.size() << '\n';
    return kOk;
}

int cmd_evaluate(const Args& a, std::ostream& out, std::ostream& err) {
    EvaluateOptions opts;
    opts.u_min = a.u_min;
    opts.u_max = a.u_max;
    if (opts.u_min < kMinTruncation || opts.u_max > kMaxTruncation || opts.u_min > opts.u_max)
        throw OutOfRange("u range must lie within [1, 9] with --u-min <= --u-max");
    opts.parity = parse_parity_arg(a.parity);
    opts.encryption_key = load_key(a.ke.empty() ? std::string(kDefaultEvalKe) : a.ke, KeyRole::Encryption);
    opts.hiding_key = load_key(a.kd.empty() ? std::string(kDefaultEvalKd) : a.kd, KeyRole::DataHiding);

    std::size_t failures = 0;
    const auto rows = evaluate_corpus(a.corpus, opts, err, &failures);
    std::string csv = EvaluationRow::csv_header() + '\n';
    for (const auto& r : rows) csv += r.to_csv_row() + '\n';
    if (a.csv.empty())
        out << csv;
    else
        write_text_file(a.csv, csv);
    if (rows.empty()) {
        err << "evaluate: no mesh in " << a.corpus << " could be processed\n";
        return kIoParse;
    }
    return kOk;
}

}  // namespace

std::string EvaluationRow::csv_header() {
    return "mesh,u,L,vertices,embedded,capacity_bits,label_bits_compressed,label_bits_uncompressed,"
           "er_gross,er_net_compressed,er_net_uncompressed,snr_db,hausdorff,roundtrip_ok,wall_ms";
}

std::string EvaluationRow::to_csv_row() const {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", wall_ms);
    return mesh + ',' + std::to_string(u) + ',' + std::to_string(bits) + ',' + std::to_string(vertices) + ',' +
           std::to_string(embedded) + ',' + std::to_string(capacity_bits) + ',' +
           std::to_string(label_bits_compressed) + ',' + std::to_string(label_bits_uncompressed) + ',' +
           format_metric(er_gross) + ',' + format_metric(er_net_compressed) + ',' +
           format_metric(er_net_uncompressed) + ',' + format_metric(snr_db) + ',' + format_metric(hausdorff) +
           ',' + (roundtrip_ok ? "1" : "0") + ',' + ms;
}

std::vector<EvaluationRow> evaluate_mesh(const std::string& name, const FloatMesh& mesh,
                                         const EvaluateOptions& opts) {
    std::vector<EvaluationRow> rows;
    for (int u = opts.u_min; u <= opts.u_max; ++u) {
        const auto start = std::chrono::steady_clock::now();
        const auto prot = vacate_and_encrypt(mesh, u, opts.parity, opts.encryption_key);

        // Deterministic filler payload of maximal size.
        Key filler = opts.hiding_key;
        filler.role = KeyRole::Encryption;
        const BitVector payload = keystream(filler, max_payload_bits(prot.aux));

        bool ok = true;
        FloatMesh recovered;
        if (prot.aux.capacity_bits >= kContainerOverheadBits) {
            const IntMesh marked = embed(prot.encrypted, prot.aux, payload, opts.hiding_key);
            const auto result = extract_and_recover(marked, prot.aux, opts.hiding_key, opts.encryption_key);
            ok = result.payload == payload && result.mesh == quantize(mesh, u);
            recovered = dequantize(result.mesh);
        } else {
            const IntMesh plain = recover_integer(prot.encrypted, prot.aux, opts.encryption_key);
            ok = plain == quantize(mesh, u);
            recovered = dequantize(plain);
        }
        const auto stop = std::chrono::steady_clock::now();

        EvaluationRow r;
        r.mesh = name;
        r.u = u;
        r.bits = bit_length(u);
        r.vertices = mesh.vertices.size();
        r.embedded = prot.aux.embedded_count;
        r.capacity_bits = prot.aux.capacity_bits;
        r.label_bits_compressed = prot.aux.labels.bit_count;
        r.label_bits_uncompressed = static_cast<std::uint64_t>(kLabelSymbolBits) * prot.aux.embedded_count;
        const auto compressed = embedding_rate(r.capacity_bits, r.label_bits_compressed, r.vertices);
        const auto uncompressed = embedding_rate(r.capacity_bits, r.label_bits_uncompressed, r.vertices);
        r.er_gross = compressed.gross;
        r.er_net_compressed = compressed.net;
        r.er_net_uncompressed = uncompressed.net;
        r.snr_db = snr(mesh, recovered);
        r.hausdorff = hausdorff(mesh.vertices, recovered.vertices);
        r.roundtrip_ok = ok;
        r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<EvaluationRow> evaluate_corpus(const fs::path& corpus, const EvaluateOptions& opts, std::ostream& log,
                                           std::size_t* failures) {
    std::vector<fs::path> files;
    if (!fs::is_directory(corpus)) throw IoError("corpus directory not found: " + corpus.string());
    for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".off") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<EvaluationRow> rows;
    std::size_t failed = 0;
    for (const auto& path : files) {
        try {
            const FloatMesh mesh = read_off_file(path);
            auto mesh_rows = evaluate_mesh(path.stem().string(), mesh, opts);
            rows.insert(rows.end(), mesh_rows.begin(), mesh_rows.end());
        } catch (const Error& e) {
            ++failed;
            log << "warning: skipping " << path.string() << ": " << e.what() << '\n';
        }
    }
    if (failures) *failures = failed;
    return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reversible data hiding in encrypted triangle meshes (multi-MSB prediction)", "meshrdh"};
    app.require_subcommand(1);
    Args a;

    auto add_u = [&](CLI::App* c) {
        c->add_option("--u", a.u, "Truncation coefficient (decimal digits kept), 1-9")->default_val(5);
    };
    auto add_parity = [&](CLI::App* c) {
        c->add_option("--parity", a.parity, "Embedded set by 1-based vertex ordinal: odd or even")->default_val("odd");
    };

    auto* keygen = app.add_subcommand("keygen", "Write a fresh 256-bit key as 64 hex characters");
    keygen->add_option("--role", a.role, "enc (K_e) or hide (K_d); informational")->default_val("enc");
    keygen->add_option("--out", a.out, "Key file (stdout if omitted)");

    auto* protect = app.add_subcommand("protect", "Quantize, label and encrypt a mesh (content owner)");
    protect->add_option("input", a.input, "Plaintext OFF mesh")->required();
    add_u(protect);
    add_parity(protect);
    protect->add_option("--ke", a.ke, "Encryption key: 64 hex chars or key file")->required();
    protect->add_option("--out", a.out, "Encrypted OFF output")->required();
    protect->add_option("--sidecar", a.sidecar, "Sidecar output (default <out>.aux)");

    auto* embed_cmd = app.add_subcommand("embed", "Hide a payload in an encrypted mesh (data hider)");
    embed_cmd->add_option("input", a.input, "Encrypted OFF mesh")->required();
    embed_cmd->add_option("--sidecar", a.sidecar, "Sidecar (default <input>.aux)");
    embed_cmd->add_option("--kd", a.kd, "Data-hiding key: 64 hex chars or key file")->required();
    embed_cmd->add_option("--payload", a.payload, "Binary payload file")->required();
    embed_cmd->add_option("--out", a.out, "Marked OFF output (sidecar copied to <out>.aux)")->required();

    auto* extract_cmd = app.add_subcommand("extract", "Extract the payload with K_d only");
    extract_cmd->add_option("input", a.input, "Marked OFF mesh")->required();
    extract_cmd->add_option("--sidecar", a.sidecar, "Sidecar (default <input>.aux)");
    extract_cmd->add_option("--kd", a.kd, "Data-hiding key")->required();
    extract_cmd->add_option("--out", a.out, "Payload output file")->required();

    auto* recover_cmd = app.add_subcommand("recover", "Decrypt and restore the mesh with K_e only");
    recover_cmd->add_option("input", a.input, "Marked OFF mesh")->required();
    recover_cmd->add_option("--sidecar", a.sidecar, "Sidecar (default <input>.aux)");
    recover_cmd->add_option("--ke", a.ke, "Encryption key")->required();
    recover_cmd->add_option("--out", a.out, "Recovered OFF output")->required();

    auto* both = app.add_subcommand("extract-recover", "Extract the payload, then restore the mesh");
    both->add_option("input", a.input, "Marked OFF mesh")->required();
    both->add_option("--sidecar", a.sidecar, "Sidecar (default <input>.aux)");
    both->add_option("--kd", a.kd, "Data-hiding key")->required();
    both->add_option("--ke", a.ke, "Encryption key")->required();
    both->add_option("--payload", a.payload, "Payload output file")->required();
    both->add_option("--out", a.out, "Recovered OFF output")->required();

    auto* evaluate = app.add_subcommand("evaluate", "Capacity and distortion sweep over a corpus, as CSV");
    evaluate->add_option("--corpus", a.corpus, "Directory of OFF meshes")->required();
    evaluate->add_option("--u-min", a.u_min, "Smallest u")->default_val(2);
    evaluate->add_option("--u-max", a.u_max, "Largest u")->default_val(9);
    add_parity(evaluate);
    evaluate->add_option("--ke", a.ke, "Encryption key (fixed default)");
    evaluate->add_option("--kd", a.kd, "Data-hiding key (fixed default)");
    evaluate->add_option("--csv", a.csv, "CSV output (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*keygen) return cmd_keygen(a, out);
        if (*protect) return cmd_protect(a, out);
        if (*embed_cmd) return cmd_embed(a, out);
        if (*extract_cmd) return cmd_extract(a, out);
        if (*recover_cmd) return cmd_recover(a, out);
        if (*both) return cmd_extract_recover(a, out);
        if (*evaluate) return cmd_evaluate(a, out, err);
    } catch (const CapacityExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const ChecksumMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kChecksum;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const KeyFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SidecarError& e) {
        err << "error: sidecar: " << e.what() << '\n';
        return kIoParse;
    } catch (const ParseError& e) {
        err << "error: " << a.input << ": " << e.what() << '\n';
        return kIoParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kIoParse;
    }
    return kUsage;
}

}  // namespace meshrdh::cli
