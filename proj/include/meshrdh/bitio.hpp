#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace meshrdh {

// MSB-first bit packing into bytes; the final byte is zero padded.
class BitWriter {
public:
    void put(bool bit) {
        if ((count_ & 7u) == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (count_ & 7u));
        ++count_;
    }
    void put_bits(std::uint64_t value, int width) {
        for (int k = width - 1; k >= 0; --k) put((value >> k) & 1u);
    }

    std::uint64_t bit_count() const { return count_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t count_ = 0;
};

class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_count)
        : bytes_(bytes), count_(bit_count) {}

    bool exhausted() const { return pos_ >= count_; }
    std::uint64_t position() const { return pos_; }

    // Caller checks exhausted() first.
    bool get() {
        const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7u))) & 1u;
        ++pos_;
        return bit;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t count_;
    std::uint64_t pos_ = 0;
};

inline bool bit_at(std::span<const std::uint8_t> bytes, std::uint64_t index) {
    return (bytes[index >> 3] >> (7 - (index & 7u))) & 1u;
}

}  // namespace meshrdh
