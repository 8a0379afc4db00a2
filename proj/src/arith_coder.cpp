// Bit-oriented integer arithmetic coder with 32-bit low/high registers.
// Underflow (the interval straddling the midpoint) is handled by deferring
// bits until the next decisive scaling, which is equivalent to carry
// propagation. The encoder terminates by flushing all 32 bits of `low`, so
// the decoder consumes exactly as many bits as the encoder produced.

#include "meshrdh/arith_coder.hpp"

#include "meshrdh/bitio.hpp"
#include "meshrdh/error.hpp"

namespace meshrdh {
namespace {

constexpr std::uint64_t kTop = 0xFFFFFFFFull;
constexpr std::uint64_t kHalf = 0x80000000ull;
constexpr std::uint64_t kQuarter = 0x40000000ull;
constexpr std::uint64_t kThreeQuarters = 0xC0000000ull;

}  // namespace

AdaptiveModel::AdaptiveModel() {
    counts_.fill(1);
    total_ = kAlphabetSize;
}

std::uint32_t AdaptiveModel::cum_below(int symbol) const {
    std::uint32_t cum = 0;
    for (int s = 0; s < symbol; ++s) cum += counts_[static_cast<std::size_t>(s)];
    return cum;
}

int AdaptiveModel::find(std::uint32_t target, std::uint32_t& cum_low) const {
    std::uint32_t cum = 0;
    for (int s = 0; s < kAlphabetSize; ++s) {
        const auto c = counts_[static_cast<std::size_t>(s)];
        if (target < cum + c) {
            cum_low = cum;
            return s;
        }
        cum += c;
    }
    cum_low = cum - counts_.back();
    return kAlphabetSize - 1;
}

void AdaptiveModel::update(int symbol) {
    ++counts_[static_cast<std::size_t>(symbol)];
    if (++total_ >= kRescaleLimit) {
        total_ = 0;
        for (auto& c : counts_) {
            c = c / 2 > 0 ? c / 2 : 1;
            total_ += c;
        }
    }
}

CodedLabels arith_encode(std::span<const std::uint8_t> symbols) {
    CodedLabels out;
    out.symbol_count = symbols.size();
    if (symbols.empty()) return out;

    AdaptiveModel model;
    BitWriter writer;
    std::uint64_t low = 0, high = kTop;
    std::uint64_t pending = 0;

    auto emit = [&](bool bit) {
        writer.put(bit);
        for (; pending > 0; --pending) writer.put(!bit);
    };

    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const int s = symbols[i];
        if (s >= kAlphabetSize)
            throw SymbolOutOfRange("symbol " + std::to_string(s) + " at position " + std::to_string(i) +
                                   " exceeds 6 bits");
        const std::uint64_t range = high - low + 1;
        const std::uint64_t total = model.total();
        const std::uint64_t cum_low = model.cum_below(s);
        const std::uint64_t cum_high = cum_low + model.count(s);
        high = low + range * cum_high / total - 1;
        low = low + range * cum_low / total;
        model.update(s);

        for (;;) {
            if (high < kHalf) {
                emit(false);
            } else if (low >= kHalf) {
                emit(true);
                low -= kHalf;
                high -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                ++pending;
                low -= kQuarter;
                high -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1u;
        }
    }

    // Flush the whole low register; the first bit releases pending bits.
    emit((low >> 31) & 1u);
    for (int k = 30; k >= 0; --k) writer.put((low >> k) & 1u);

    out.bit_count = writer.bit_count();
    out.bytes = writer.take();
    return out;
}

std::vector<std::uint8_t> arith_decode(const CodedLabels& coded) {
    std::vector<std::uint8_t> out;
    if (coded.symbol_count == 0) return out;
    if (coded.bytes.size() * 8 < coded.bit_count)
        throw TruncatedStream("coded label buffer shorter than its declared bit count");

    BitReader reader(coded.bytes, coded.bit_count);
    auto next_bit = [&]() -> std::uint64_t {
        if (reader.exhausted())
            throw TruncatedStream("label stream ended after " + std::to_string(out.size()) + " of " +
                                  std::to_string(coded.symbol_count) + " symbols");
        return reader.get() ? 1u : 0u;
    };

    std::uint64_t low = 0, high = kTop, value = 0;
    for (int k = 0; k < 32; ++k) value = (value << 1) | next_bit();

    AdaptiveModel model;
    out.reserve(coded.symbol_count);
    while (out.size() < coded.symbol_count) {
        const std::uint64_t range = high - low + 1;
        const std::uint64_t total = model.total();
        const auto target = static_cast<std::uint32_t>(((value - low + 1) * total - 1) / range);
        std::uint32_t cum_low32 = 0;
        const int s = model.find(target, cum_low32);
        const std::uint64_t cum_low = cum_low32;
        const std::uint64_t cum_high = cum_low + model.count(s);
        high = low + range * cum_high / total - 1;
        low = low + range * cum_low / total;
        model.update(s);
        out.push_back(static_cast<std::uint8_t>(s));

        for (;;) {
            if (high < kHalf) {
                // nothing to subtract
            } else if (low >= kHalf) {
                low -= kHalf;
                high -= kHalf;
                value -= kHalf;
            } else if (low >= kQuarter && high < kThreeQuarters) {
                low -= kQuarter;
                high -= kQuarter;
                value -= kQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1u;
            value = (value << 1) | next_bit();
        }
    }
    return out;
}

}  // namespace meshrdh
