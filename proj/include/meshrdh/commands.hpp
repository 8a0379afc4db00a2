#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "meshrdh/cipher.hpp"
#include "meshrdh/topology.hpp"

namespace meshrdh::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kCapacity = 3,
    kChecksum = 4,
    kIoParse = 5,
};

// One evaluation row per (mesh, u). Column order matches csv_header().
struct EvaluationRow {
    std::string mesh;
    int u = 0;
    int bits = 0;
    std::uint64_t vertices = 0;
    std::uint64_t embedded = 0;
    std::uint64_t capacity_bits = 0;
    std::uint64_t label_bits_compressed = 0;
    std::uint64_t label_bits_uncompressed = 0;
    double er_gross = 0.0;
    double er_net_compressed = 0.0;
    double er_net_uncompressed = 0.0;
    double snr_db = 0.0;
    double hausdorff = 0.0;
    bool roundtrip_ok = false;
    double wall_ms = 0.0;

    static std::string csv_header();
    std::string to_csv_row() const;
};

struct EvaluateOptions {
    int u_min = 2;
    int u_max = 9;
    Parity parity = Parity::Odd;
    Key encryption_key;
    Key hiding_key;
};

// Runs protect, embed (full-capacity deterministic payload), extract and
// recover on one mesh for every u in range.
std::vector<EvaluationRow> evaluate_mesh(const std::string& name, const FloatMesh& mesh,
                                         const EvaluateOptions& opts);

// Every *.off under `corpus`, sorted by file name. Unreadable meshes are
// reported on `log` and skipped.
std::vector<EvaluationRow> evaluate_corpus(const std::filesystem::path& corpus, const EvaluateOptions& opts,
                                           std::ostream& log, std::size_t* failures = nullptr);

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meshrdh::cli
