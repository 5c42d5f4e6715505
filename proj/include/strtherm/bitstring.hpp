#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strtherm {

enum class BitOrder { msb_first, lsb_first };

std::string_view to_string(BitOrder order) noexcept;

/// Immutable packed bit sequence.
///
/// Bit i lives in word i / 64 at bit position i % 64. Bits past size() in
/// the last word are always zero.
class BitString {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    /// Throws EmptyInput when `data` is empty.
    static BitString from_bytes(std::span<const std::uint8_t> data,
                                BitOrder order = BitOrder::msb_first);

    /// Parses a string of '0' / '1' characters, first character is bit 0.
    static BitString from_bits(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    std::size_t popcount() const noexcept { return popcount_; }
    std::span<const Word> words() const noexcept { return words_; }

    bool operator[](std::size_t i) const noexcept {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }

    /// Reads `count` (<= 64) bits starting at `pos`, wrapping cyclically
    /// around size(). Bit j of the result is bit (pos + j) mod size().
    Word cyclic_window(std::size_t pos, std::size_t count) const noexcept;

    /// String of length `length` with bit i equal to bit (i mod size()).
    BitString cyclic_extend(std::size_t length) const;

    /// Packs back into bytes; a trailing partial byte is zero padded.
    std::vector<std::uint8_t> to_bytes(BitOrder order = BitOrder::msb_first) const;

    std::string to_bit_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    BitString(std::vector<Word> words, std::size_t size);

    Word linear_window(std::size_t pos, std::size_t count) const noexcept;

    std::vector<Word> words_;
    std::size_t size_ = 0;
    std::size_t popcount_ = 0;
};

/// First `max_bits` bits of `b`. Throws InvalidLength unless 1 <= max_bits <= b.size().
BitString truncate(const BitString& b, std::size_t max_bits);

/// Cyclic shift-XOR Hamming measure: number of positions i with b[i] != b[(i + n) mod M].
/// Throws InvalidShift when n >= M.
std::size_t shift_xor_distance(const BitString& b, std::size_t n);

/// Independent Bernoulli(p) bits from a seeded mt19937_64 stream.
BitString random_bitstring(std::size_t bits, double p, std::uint64_t seed);

/// Precomputed rotation buffer for evaluating many shifts of `rotated`
/// against a fixed `reference` of the same length in O(M / 64) each.
class ShiftXorKernel {
public:
    ShiftXorKernel(const BitString& reference, const BitString& rotated);

    std::size_t size() const noexcept { return size_; }

    /// Popcount of reference XOR rotate(rotated, n); n must be < size().
    std::size_t distance(std::size_t n) const noexcept;

private:
    std::vector<BitString::Word> reference_;
    std::vector<BitString::Word> doubled_;  // rotated ++ rotated, plus one zero word
    std::size_t size_;
    BitString::Word tail_mask_;
};

}  // namespace strtherm
