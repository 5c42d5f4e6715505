#include "strtherm/ensemble.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "strtherm/error.hpp"

namespace strtherm {

namespace {

// Below this many word operations a single thread is faster than spawning.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 20;

void fill_values(const ShiftXorKernel& kernel, std::vector<std::size_t>& values,
                 unsigned threads) {
    const std::size_t count = values.size();
    const std::size_t work = count * (kernel.size() / BitString::kWordBits + 1);
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    if (threads == 1 || work < kParallelThreshold) {
        for (std::size_t n = 0; n < count; ++n) {
            values[n] = kernel.distance(n);
        }
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t block = (count + threads - 1) / threads;
    for (std::size_t begin = 0; begin < count; begin += block) {
        const std::size_t end = std::min(count, begin + block);
        workers.emplace_back([&kernel, &values, begin, end] {
            for (std::size_t n = begin; n < end; ++n) {
                values[n] = kernel.distance(n);
            }
        });
    }
}

void check_count(std::size_t count, std::size_t bits) {
    if (count == 0 || count > bits) {
        throw Error(ErrorCode::InvalidEnsembleSize,
                    "ensemble size " + std::to_string(count) + " outside [1, " +
                        std::to_string(bits) + "]");
    }
}

}  // namespace

std::string_view to_string(EnsembleMode mode) noexcept {
    return mode == EnsembleMode::self ? "self" : "pair";
}

Ensemble build_self_ensemble(const BitString& b, std::size_t count, unsigned threads) {
    check_count(count, b.size());
    Ensemble e;
    e.bits = b.size();
    e.set_bits = b.popcount();
    e.max_value = 2 * std::min(e.set_bits, e.bits - e.set_bits);
    e.mode = EnsembleMode::self;
    e.values.resize(count);
    fill_values(ShiftXorKernel(b, b), e.values, threads);
    return e;
}

std::size_t pair_extension_bits(std::size_t a_bits, std::size_t b_bits, std::size_t max_bits) {
    if (a_bits == 0 || b_bits == 0) {
        return 0;
    }
    const std::size_t g = std::gcd(a_bits, b_bits);
    const std::size_t a_reduced = a_bits / g;
    if (a_reduced > max_bits / b_bits) {
        return 0;
    }
    return a_reduced * b_bits;
}

Ensemble build_pair_ensemble(const BitString& a, const BitString& b, std::size_t count,
                             std::size_t max_bits, unsigned threads) {
    const std::size_t bits = pair_extension_bits(a.size(), b.size(), max_bits);
    if (bits == 0) {
        throw Error(ErrorCode::PairTooLarge,
                    "lcm(" + std::to_string(a.size()) + ", " + std::to_string(b.size()) +
                        ") exceeds the pair-mode limit of " + std::to_string(max_bits) +
                        " bits");
    }
    check_count(count, bits);
    const BitString ext_a = a.cyclic_extend(bits);
    const BitString ext_b = b.cyclic_extend(bits);
    Ensemble e;
    e.bits = bits;
    e.set_bits = ext_a.popcount();
    // |A xor B'| <= min(k_A + k_B, 2M - k_A - k_B) for any rotation B' of B.
    const std::size_t k_sum = ext_a.popcount() + ext_b.popcount();
    e.max_value = std::min(k_sum, 2 * bits - k_sum);
    e.mode = EnsembleMode::pair;
    e.values.resize(count);
    fill_values(ShiftXorKernel(ext_a, ext_b), e.values, threads);
    return e;
}

Histogram histogram(const Ensemble& e) {
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t v : e.values) {
        ++counts[v];
    }
    Histogram h;
    h.entries.reserve(counts.size());
    for (const auto& [value, count] : counts) {
        h.entries.push_back({value, count});
    }
    h.observations = e.values.size();
    h.bits = e.bits;
    h.max_value = e.max_value;
    return h;
}

Histogram drop_self_match(const Histogram& h) {
    if (h.observations < 2 || h.entries.empty() || h.entries.front().value != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "self match can only be dropped from a self-mode histogram with N >= 2");
    }
    Histogram out = h;
    if (--out.entries.front().count == 0) {
        out.entries.erase(out.entries.begin());
    }
    --out.observations;
    return out;
}

unsigned long long measure_sum(const Histogram& h) {
    unsigned long long sum = 0;
    for (const auto& entry : h.entries) {
        sum += static_cast<unsigned long long>(entry.value) * entry.count;
    }
    return sum;
}

double ensemble_mean(const Histogram& h) {
    if (h.observations == 0) {
        throw Error(ErrorCode::InvalidArgument, "mean of an empty histogram");
    }
    return static_cast<double>(measure_sum(h)) / static_cast<double>(h.observations);
}

}  // namespace strtherm
