#include "strtherm/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "strtherm/error.hpp"

namespace strtherm {

namespace {

using Word = BitString::Word;
constexpr std::size_t kWordBits = BitString::kWordBits;

constexpr std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

constexpr Word low_mask(std::size_t count) {
    return count >= kWordBits ? ~Word{0} : (Word{1} << count) - 1;
}

constexpr std::uint8_t reverse_byte(std::uint8_t b) {
    b = static_cast<std::uint8_t>((b & 0xF0U) >> 4 | (b & 0x0FU) << 4);
    b = static_cast<std::uint8_t>((b & 0xCCU) >> 2 | (b & 0x33U) << 2);
    b = static_cast<std::uint8_t>((b & 0xAAU) >> 1 | (b & 0x55U) << 1);
    return b;
}

// Bits [pos, pos + 64) of a zero-padded word array; w + 1 must be in range when pos is unaligned.
inline Word read_window(const Word* words, std::size_t pos) noexcept {
    const std::size_t w = pos / kWordBits;
    const std::size_t o = pos % kWordBits;
    if (o == 0) {
        return words[w];
    }
    return (words[w] >> o) | (words[w + 1] << (kWordBits - o));
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidLength: return "InvalidLength";
        case ErrorCode::InvalidShift: return "InvalidShift";
        case ErrorCode::InvalidEnsembleSize: return "InvalidEnsembleSize";
        case ErrorCode::PairTooLarge: return "PairTooLarge";
        case ErrorCode::DegenerateModel: return "DegenerateModel";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

std::string_view to_string(BitOrder order) noexcept {
    return order == BitOrder::msb_first ? "msb" : "lsb";
}

BitString::BitString(std::vector<Word> words, std::size_t size)
    : words_(std::move(words)), size_(size) {
    if (size_ % kWordBits != 0) {
        words_.back() &= low_mask(size_ % kWordBits);
    }
    for (Word w : words_) {
        popcount_ += static_cast<std::size_t>(std::popcount(w));
    }
}

BitString BitString::from_bytes(std::span<const std::uint8_t> data, BitOrder order) {
    if (data.empty()) {
        throw Error(ErrorCode::EmptyInput, "cannot build a bit string from empty input");
    }
    std::vector<Word> words(word_count(data.size() * 8), 0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const std::uint8_t byte = order == BitOrder::msb_first ? reverse_byte(data[i]) : data[i];
        words[i / 8] |= Word{byte} << (8 * (i % 8));
    }
    return BitString(std::move(words), data.size() * 8);
}

BitString BitString::from_bits(std::string_view bits) {
    if (bits.empty()) {
        throw Error(ErrorCode::EmptyInput, "cannot build a bit string from an empty bit list");
    }
    std::vector<Word> words(word_count(bits.size()), 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            words[i / kWordBits] |= Word{1} << (i % kWordBits);
        } else if (bits[i] != '0') {
            throw Error(ErrorCode::InvalidArgument,
                        "bit list may only contain '0' and '1'");
        }
    }
    return BitString(std::move(words), bits.size());
}

Word BitString::linear_window(std::size_t pos, std::size_t count) const noexcept {
    const std::size_t w = pos / kWordBits;
    const std::size_t o = pos % kWordBits;
    Word bits = words_[w] >> o;
    if (o != 0 && w + 1 < words_.size()) {
        bits |= words_[w + 1] << (kWordBits - o);
    }
    return bits & low_mask(count);
}

Word BitString::cyclic_window(std::size_t pos, std::size_t count) const noexcept {
    pos %= size_;
    Word result = 0;
    std::size_t filled = 0;
    while (filled < count) {
        const std::size_t take = std::min(count - filled, size_ - pos);
        result |= linear_window(pos, take) << filled;
        filled += take;
        pos = (pos + take) % size_;
    }
    return result;
}

BitString BitString::cyclic_extend(std::size_t length) const {
    if (length == 0) {
        throw Error(ErrorCode::InvalidLength, "extension length must be positive");
    }
    std::vector<Word> words(word_count(length));
    for (std::size_t j = 0; j < words.size(); ++j) {
        const std::size_t start = j * kWordBits;
        words[j] = cyclic_window(start % size_, std::min(kWordBits, length - start));
    }
    return BitString(std::move(words), length);
}

std::vector<std::uint8_t> BitString::to_bytes(BitOrder order) const {
    std::vector<std::uint8_t> out((size_ + 7) / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto byte = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
        out[i] = order == BitOrder::msb_first ? reverse_byte(byte) : byte;
    }
    return out;
}

std::string BitString::to_bit_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) s[i] = '1';
    }
    return s;
}

BitString truncate(const BitString& b, std::size_t max_bits) {
    if (max_bits == 0 || max_bits > b.size()) {
        throw Error(ErrorCode::InvalidLength,
                    "truncation length " + std::to_string(max_bits) + " outside [1, " +
                        std::to_string(b.size()) + "]");
    }
    return b.cyclic_extend(max_bits);
}

std::size_t shift_xor_distance(const BitString& b, std::size_t n) {
    if (n >= b.size()) {
        throw Error(ErrorCode::InvalidShift,
                    "shift " + std::to_string(n) + " must be below length " +
                        std::to_string(b.size()));
    }
    return ShiftXorKernel(b, b).distance(n);
}

BitString random_bitstring(std::size_t bits, double p, std::uint64_t seed) {
    if (bits == 0) {
        throw Error(ErrorCode::InvalidLength, "random bit string needs at least one bit");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "set-bit probability must lie in [0, 1]");
    }
    // Uniform doubles are derived from the raw engine output so that the
    // stream is identical across standard library implementations.
    std::mt19937_64 engine(seed);
    std::string s(bits, '0');
    for (auto& c : s) {
        const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
        if (u < p) c = '1';
    }
    return BitString::from_bits(s);
}

ShiftXorKernel::ShiftXorKernel(const BitString& reference, const BitString& rotated)
    : size_(reference.size()),
      tail_mask_(low_mask(reference.size() % kWordBits == 0 ? kWordBits
                                                              : reference.size() % kWordBits)) {
    if (reference.size() != rotated.size()) {
        throw Error(ErrorCode::InvalidLength, "shift kernel needs equal-length strings");
    }
    reference_.assign(reference.words().begin(), reference.words().end());
    const BitString doubled = rotated.cyclic_extend(2 * size_);
    doubled_.assign(doubled.words().begin(), doubled.words().end());
    doubled_.push_back(0);
}

std::size_t ShiftXorKernel::distance(std::size_t n) const noexcept {
    const std::size_t last = reference_.size() - 1;
    std::size_t total = 0;
    for (std::size_t j = 0; j < last; ++j) {
        total += static_cast<std::size_t>(
            std::popcount(reference_[j] ^ read_window(doubled_.data(), j * kWordBits + n)));
    }
    const Word tail = (reference_[last] ^ read_window(doubled_.data(), last * kWordBits + n)) &
                      tail_mask_;
    return total + static_cast<std::size_t>(std::popcount(tail));
}

}  // namespace strtherm
