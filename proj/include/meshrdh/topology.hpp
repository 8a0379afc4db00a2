#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "meshrdh/mesh_io.hpp"

namespace meshrdh {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// Which 1-based ordinal parity carries data. Odd means file vertices
// 1, 3, 5, ... (0-based 0, 2, 4, ...) form the embedded set.
enum class Parity { Odd, Even };

std::string_view to_string(Parity p);
std::optional<Parity> parse_parity(std::string_view s);

// True when 0-based vertex `index` belongs to the embedded set.
constexpr bool is_embedded(std::size_t index, Parity parity) {
    const bool odd_ordinal = (index % 2) == 0;
    return parity == Parity::Odd ? odd_ordinal : !odd_ordinal;
}

struct Partition {
    Parity parity = Parity::Odd;
    std::vector<std::uint32_t> embedded;               // ascending
    std::vector<std::vector<std::uint32_t>> predictors; // parallel to `embedded`, ascending
};

// One sorted, duplicate-free neighbor list per vertex.
Adjacency build_adjacency(std::size_t vertex_count, std::span<const Face> faces);

Partition partition(std::size_t vertex_count, const Adjacency& adjacency, Parity parity);

}  // namespace meshrdh
