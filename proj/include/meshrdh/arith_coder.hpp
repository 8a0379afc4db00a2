#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace meshrdh {

inline constexpr int kAlphabetSize = 64;

// Compressed label stream. `bytes` packs `bit_count` bits MSB first with
// zero padding; the symbol count travels alongside (it is not in the stream).
struct CodedLabels {
    std::uint64_t symbol_count = 0;
    std::uint64_t bit_count = 0;
    std::vector<std::uint8_t> bytes;

    bool operator==(const CodedLabels&) const = default;
};

// Order-0 adaptive frequency model over 64 symbols. Counts start at 1 and
// grow by 1 per coded symbol; when the total reaches 2^16 every count is
// halved (never below 1).
class AdaptiveModel {
public:
    static constexpr std::uint32_t kRescaleLimit = 1u << 16;

    AdaptiveModel();

    std::uint32_t total() const { return total_; }
    std::uint32_t count(int symbol) const { return counts_[static_cast<std::size_t>(symbol)]; }
    // Cumulative count of symbols strictly below `symbol`.
    std::uint32_t cum_below(int symbol) const;
    // Symbol whose cumulative interval contains `target` (< total()).
    int find(std::uint32_t target, std::uint32_t& cum_low) const;
    void update(int symbol);

private:
    std::array<std::uint32_t, kAlphabetSize> counts_{};
    std::uint32_t total_ = 0;
};

// Throws SymbolOutOfRange if any symbol is >= 64.
CodedLabels arith_encode(std::span<const std::uint8_t> symbols);

// Throws TruncatedStream if the bits run out before symbol_count symbols.
std::vector<std::uint8_t> arith_decode(const CodedLabels& coded);

}  // namespace meshrdh
