#include "meshrdh/topology.hpp"

#include <algorithm>

namespace meshrdh {

std::string_view to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

std::optional<Parity> parse_parity(std::string_view s) {
    if (s == "odd") return Parity::Odd;
    if (s == "even") return Parity::Even;
    return std::nullopt;
}

Adjacency build_adjacency(std::size_t vertex_count, std::span<const Face> faces) {
    Adjacency adj(vertex_count);
    for (const auto& f : faces) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i != j && f[i] != f[j]) adj[f[i]].push_back(f[j]);
            }
        }
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

Partition partition(std::size_t vertex_count, const Adjacency& adjacency, Parity parity) {
    Partition p;
    p.parity = parity;
    for (std::size_t v = 0; v < vertex_count; ++v) {
        if (!is_embedded(v, parity)) continue;
        p.embedded.push_back(static_cast<std::uint32_t>(v));
        auto& preds = p.predictors.emplace_back();
        for (auto n : adjacency[v])
            if (!is_embedded(n, parity)) preds.push_back(n);
    }
    return p;
}

}  // namespace meshrdh
