// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <sys/wait.h>
#include <zlib.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "strtherm/bitstring.hpp"
#include "strtherm/ensemble.hpp"
#include "strtherm/equilibrium.hpp"
#include "strtherm/pipeline.hpp"
#include "strtherm/thermo.hpp"

namespace {

namespace fs = std::filesystem;
using namespace strtherm;

// Tolerances, fixed here once.
constexpr std::size_t kRandomFiles = 10;
constexpr std::size_t kRandomBytes = 16384;
constexpr double kUbarBandLow = 0.1225;
constexpr double kUbarBandHigh = 0.1275;
constexpr double kUbarPerFileRel = 0.02;
constexpr double kUbarMeanRel = 0.01;
constexpr double kRuntimeLimitSeconds = 30.0;
constexpr double kTemperatureTol = 0.002;
constexpr double kMicroEqTol = 0.0005;
constexpr double kThermoEntropyRel = 0.03;
constexpr double kThermoEqFormulaRel = 0.005;
constexpr double kTextRatioMin = 100.0;
constexpr double kCompressedRatioMax = 1.1;
constexpr int kEntropyInstances = 200;
constexpr double kEntropyRel = 1e-9;
constexpr int kPropertyStrings = 1000;
constexpr double kModelAgreement = 0.01;
constexpr double kFiniteDiffRel = 1e-6;
constexpr int kPairStrings = 100;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> gzip_max(const std::vector<std::uint8_t>& input) {
    z_stream zs{};
    // windowBits 15 + 16 selects the gzip container.
    if (deflateInit2(&zs, Z_BEST_COMPRESSION, Z_DEFLATED, 15 + 16, 9, Z_DEFAULT_STRATEGY) != Z_OK) {
        throw std::runtime_error("deflateInit2 failed");
    }
    std::vector<std::uint8_t> out(deflateBound(&zs, input.size()) + 64);
    zs.next_in = const_cast<Bytef*>(input.data());
    zs.avail_in = static_cast<uInt>(input.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_FINISH);
    out.resize(zs.total_out);
    deflateEnd(&zs);
    if (rc != Z_STREAM_END) {
        throw std::runtime_error("deflate did not finish");
    }
    return out;
}

std::vector<AnalysisResult> random_corpus_results;
double random_corpus_seconds = 0.0;

void analyze_random_corpus() {
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t seed = 1; seed <= kRandomFiles; ++seed) {
        random_corpus_results.push_back(
            analyze_bytes(generate_corpus(CorpusKind::random, kRandomBytes, seed), {}, {}));
    }
    random_corpus_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome random_string_equilibrium() {
    double sum = 0.0;
    double worst = 0.0;
    for (const auto& r : random_corpus_results) {
        sum += r.report.u_bar;
        worst = std::max(worst, rel(r.report.u_bar, 0.125));
    }
    const double mean = sum / static_cast<double>(random_corpus_results.size());
    const bool pass = mean >= kUbarBandLow && mean <= kUbarBandHigh &&
                      rel(mean, 0.125) < kUbarMeanRel && worst < kUbarPerFileRel &&
                      random_corpus_seconds < kRuntimeLimitSeconds;
    return {pass, fmt("mean U=%.5f (band [%.4f, %.4f], |rel|=%.4f < %.2f), worst per-file |rel|=%.4f "
                      "< %.2f, %.2f s < %.0f s",
                      mean, kUbarBandLow, kUbarBandHigh, rel(mean, 0.125), kUbarMeanRel, worst,
                      kUbarPerFileRel, random_corpus_seconds, kRuntimeLimitSeconds)};
}

Outcome temperature_limit() {
    double worst_t = 0.0;
    double worst_micro = 0.0;
    for (const auto& r : random_corpus_results) {
        worst_t = std::max(worst_t, std::abs(r.report.temperature - 0.25));
        worst_micro = std::max(worst_micro, std::abs(r.report.s_micro_eq_per_bit.value_or(0) - 1.0));
    }
    return {worst_t < kTemperatureTol && worst_micro <= kMicroEqTol,
            fmt("max |T-0.25|=%.2e < %.3f, max |S_micro_eq/M-1|=%.2e <= %.4f", worst_t,
                kTemperatureTol, worst_micro, kMicroEqTol)};
}

Outcome equilibrium_thermo_entropy() {
    double worst_s = 0.0;
    double worst_formula = 0.0;
    for (const auto& r : random_corpus_results) {
        const double eq = r.report.s_thermo_eq.value_or(0);
        worst_s = std::max(worst_s, rel(r.report.s_thermo, eq));
        const double formula = 0.5 * std::log2(std::numbers::pi * std::numbers::e *
                                               static_cast<double>(r.bits) *
                                               r.report.temperature / 2.0);
        worst_formula = std::max(worst_formula, rel(eq, formula));
    }
    const auto& first = random_corpus_results.front().report;
    return {worst_s < kThermoEntropyRel && worst_formula < kThermoEqFormulaRel,
            fmt("e.g. S_thermo=%.3f vs eq %.3f; worst |rel|=%.4f < %.2f; eq vs formula %.1e < %.3f",
                first.s_thermo, first.s_thermo_eq.value_or(0), worst_s, kThermoEntropyRel,
                worst_formula, kThermoEqFormulaRel)};
}

Outcome non_equilibrium_detection() {
    const auto text = read_bytes(STRTHERM_TEXT_SAMPLE);
    if (text.size() < 4096) {
        return {false, "text sample shorter than 4 kB"};
    }
    const auto compressed = gzip_max(text);
    const auto plain = analyze_bytes(text, {}, {});
    const auto packed = analyze_bytes(compressed, {}, {});
    const double plain_ratio = plain.report.u_bar / plain.report.u_bar_eq.value_or(NAN);
    const double packed_ratio = packed.report.u_bar / packed.report.u_bar_eq.value_or(NAN);
    return {plain_ratio >= kTextRatioMin && packed_ratio < kCompressedRatioMax,
            fmt("text %zu B: U/U_eq=%.1f >= %.0f; gzip -9 %zu B: U/U_eq=%.4f < %.1f", text.size(),
                plain_ratio, kTextRatioMin, compressed.size(), packed_ratio,
                kCompressedRatioMax)};
}

Outcome entropy_oracle() {
    std::mt19937_64 rng(0xE17);
    double worst = 0.0;
    for (int i = 0; i < kEntropyInstances; ++i) {
        const std::size_t bits = 2 + rng() % 31;
        const std::size_t n = 1 + rng() % bits;
        const auto b = BitString::from_bits(oracle::random_biased_bits(rng, bits));
        const auto e = build_self_ensemble(b, n);
        const auto got = entropy(histogram(e));
        const auto want = oracle::exact_entropy(e.values, static_cast<unsigned>(bits));
        worst = std::max(worst, oracle::relative_error(got.thermo + got.micro, want.total));
    }
    return {worst < kEntropyRel,
            fmt("%d instances (M<=32, N<=32), max rel err %.2e < %.0e", kEntropyInstances, worst,
                kEntropyRel)};
}

Outcome property_suite() {
    std::mt19937_64 rng(0x5EED);
    std::size_t checked = 0;
    std::size_t failures = 0;
    for (int i = 0; i < kPropertyStrings; ++i) {
        const std::size_t m = 2 + rng() % 511;
        const auto b = BitString::from_bits(oracle::random_biased_bits(rng, m));
        const std::size_t k = b.popcount();
        const auto e = build_self_ensemble(b, m);
        if (e.values[0] != 0) ++failures;
        for (std::size_t n = 0; n < m; ++n) {
            const std::size_t c = e.values[n];
            if (c % 2 != 0 || c > 2 * std::min(k, m - k)) ++failures;
            if (n > 0 && c != e.values[m - n]) ++failures;
        }
        const auto h = histogram(e);
        if (measure_sum(h) != 2ULL * k * (m - k)) ++failures;
        ++checked;
    }
    return {failures == 0 && checked >= 1000,
            fmt("%zu strings, M in [2, 512]: parity, symmetry, C_0=0, bound, N*C_bar=2k(M-k); "
                "%zu violations",
                checked, failures)};
}

Outcome model_agreement() {
    const std::size_t bits = std::size_t{1} << 16;
    EquilibriumModel m;
    m.bits = bits;
    m.observations = bits;
    m.c_bar = static_cast<double>(bits) / 2.0;
    m.density = 0.5;
    m.k_factor = 1.0;
    m.temperature = 0.25;
    m.sigma2 = static_cast<double>(bits) * m.temperature;
    m.peak = 2.0 * static_cast<double>(bits) / std::sqrt(2.0 * std::numbers::pi * m.sigma2);
    double worst = 0.0;
    for (std::size_t c = 0; c <= bits; ++c) {
        const auto x = static_cast<double>(c);
        worst = std::max(worst, std::abs(normal_counts(m, x) - binomial_counts(m, x)) / m.peak);
    }
    return {worst < kModelAgreement,
            fmt("M=2^16, density 1/2: max |N_normal - N_binomial|/N0 = %.2e < %.2f", worst,
                kModelAgreement)};
}

Outcome partition_function_derivative() {
    double worst = 0.0;
    for (std::size_t bits : {std::size_t{1} << 10, std::size_t{1} << 17}) {
        for (double t : {0.01, 0.1, 0.25}) {
            const double h = 1e-6 * t;
            const double derivative = (std::log(partition_function(bits, t + h)) -
                                       std::log(partition_function(bits, t - h))) /
                                      (2.0 * h);
            worst = std::max(worst, rel(t * t * derivative, equilibrium_internal_energy(t)));
        }
    }
    return {worst < kFiniteDiffRel,
            fmt("T^2 dlnZ/dT vs T/2, max rel err %.2e < %.0e", worst, kFiniteDiffRel)};
}

Outcome pair_reduction() {
    std::mt19937_64 rng(0xBA1);
    int mismatches = 0;
    for (int i = 0; i < kPairStrings; ++i) {
        const std::size_t m = 2 + rng() % 255;
        const auto a = BitString::from_bits(oracle::random_biased_bits(rng, m));
        if (build_pair_ensemble(a, a, m).values != build_self_ensemble(a, m).values) ++mismatches;
    }
    return {mismatches == 0, fmt("%d strings, M in [2, 256]: %d mismatches", kPairStrings, mismatches)};
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(STRTHERM_CLI) + " " + args;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {};
    return out;
}

Outcome cli_determinism() {
    const fs::path dir = fs::temp_directory_path() / "strtherm_acceptance";
    fs::create_directories(dir);
    const fs::path input = dir / "random16k.bin";
    write_file(input, generate_corpus(CorpusKind::random, kRandomBytes, 42));
    const std::string first = run_cli("analyze " + input.string());
    const std::string second = run_cli("analyze " + input.string());
    fs::remove_all(dir);
    return {!first.empty() && first == second,
            fmt("two runs of 'strtherm analyze': %zu and %zu bytes, %s", first.size(),
                second.size(), first == second ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {"AC1 random-string equilibrium", random_string_equilibrium},
        {"AC2 temperature limit", temperature_limit},
        {"AC3 equilibrium thermodynamic entropy", equilibrium_thermo_entropy},
        {"AC4 non-equilibrium detection", non_equilibrium_detection},
        {"AC5 exact-combinatorics entropy oracle", entropy_oracle},
        {"AC6 measure property suite", property_suite},
        {"AC7 normal vs adjusted binomial", model_agreement},
        {"AC8 partition-function derivative", partition_function_derivative},
        {"AC9 pair-mode reduction", pair_reduction},
        {"AC10 CLI determinism", cli_determinism},
    };

    analyze_random_corpus();
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << '\n';
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
