#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strtherm/bitstring.hpp"

namespace strtherm {

enum class EnsembleMode { self, pair };

std::string_view to_string(EnsembleMode mode) noexcept;

/// Default cap on the cyclic extension length used in pair mode.
inline constexpr std::size_t kDefaultPairMaxBits = std::size_t{1} << 26;

/// Measure values C_n for shifts n = 0 .. N-1.
struct Ensemble {
    std::vector<std::size_t> values;
    std::size_t bits = 0;       // M, the (extended) string length
    std::size_t set_bits = 0;   // k of the source string; self mode only
    std::size_t max_value = 0;  // attainable upper bound of any C_n
    EnsembleMode mode = EnsembleMode::self;

    std::size_t size() const noexcept { return values.size(); }
    bool is_full() const noexcept { return values.size() == bits; }
};

struct HistogramEntry {
    std::size_t value;  // C_i
    std::size_t count;  // N_i

    friend bool operator==(const HistogramEntry&, const HistogramEntry&) = default;
};

/// Distinct measure values with occurrence counts, sorted by value.
struct Histogram {
    std::vector<HistogramEntry> entries;
    std::size_t observations = 0;  // N
    std::size_t bits = 0;          // M
    std::size_t max_value = 0;     // 2 min(k, M - k) in self mode

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// C_n = shift_xor_distance(b, n) for n < count. Shifts are evaluated on
/// `threads` workers (0 picks the hardware concurrency); output is identical
/// for any thread count.
Ensemble build_self_ensemble(const BitString& b, std::size_t count, unsigned threads = 0);

/// Both strings are cyclically extended to lcm(M_A, M_B); value n is the
/// Hamming distance between the extension of `a` and the extension of `b`
/// rotated by n. Throws PairTooLarge when the lcm exceeds `max_bits`.
Ensemble build_pair_ensemble(const BitString& a, const BitString& b, std::size_t count,
                             std::size_t max_bits = kDefaultPairMaxBits,
                             unsigned threads = 0);

/// Length of the pair-mode extension, or 0 when it would exceed `max_bits`.
std::size_t pair_extension_bits(std::size_t a_bits, std::size_t b_bits, std::size_t max_bits);

Histogram histogram(const Ensemble& e);

/// Removes the single n = 0 observation (C_0 = 0, the string compared with
/// itself) from a self-mode histogram. Requires at least two observations
/// and an entry at value 0.
Histogram drop_self_match(const Histogram& h);

/// Average measure value over all observations.
double ensemble_mean(const Histogram& h);

/// Sum of N_i * C_i in exact integer arithmetic.
unsigned long long measure_sum(const Histogram& h);

}  // namespace strtherm
