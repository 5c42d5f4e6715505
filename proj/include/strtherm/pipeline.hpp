#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strtherm/bitstring.hpp"
#include "strtherm/ensemble.hpp"
#include "strtherm/equilibrium.hpp"
#include "strtherm/thermo.hpp"

namespace strtherm {

enum class OutputFormat { json, csv, human };

struct AnalysisOptions {
    BitOrder bit_order = BitOrder::msb_first;
    std::optional<std::size_t> max_bits;       // truncate each input to this many bits
    std::optional<std::size_t> ensemble_size;  // N; default is the full ensemble
    std::size_t pair_max_bits = kDefaultPairMaxBits;
    unsigned threads = 0;
};

/// One analysis request. One input selects self mode, two select pair mode.
/// The path "-" reads standard input.
struct AnalysisConfig {
    std::vector<std::filesystem::path> inputs;
    AnalysisOptions options;
    OutputFormat format = OutputFormat::json;
    std::optional<std::filesystem::path> histogram_path;
    std::optional<std::filesystem::path> curves_path;
};

struct AnalysisResult {
    std::string input;  // label, usually the path as given
    BitOrder bit_order = BitOrder::msb_first;
    EnsembleMode mode = EnsembleMode::self;
    std::size_t bits = 0;
    std::size_t set_bits = 0;
    bool full_ensemble = false;
    // Set only for full self ensembles: N * c_bar == 2 k (M - k) in integers.
    std::optional<bool> mean_identity;
    Histogram histogram;  // every shift, including n = 0
    // Observations the thermodynamic quantities are computed over. In self
    // mode the n = 0 self match is left out; the mean still uses all shifts.
    Histogram particles;
    EquilibriumModel model;
    ThermoReport report;
};

/// Runs ensemble -> histogram -> model -> thermo on bit strings already in memory.
/// `second` selects pair mode.
///
/// The mean measure (and with it K, sigma2 and T) comes from the whole
/// ensemble. Energies, entropies and the fit are taken over the particles:
/// in self mode that excludes the n = 0 shift, whose C_0 = 0 is fixed by
/// construction and would otherwise add C_bar^2 / (2 M N), about 1/8 for
/// random input, to the internal energy.
AnalysisResult analyze_bits(const BitString& first, const BitString* second,
                            const AnalysisOptions& options, std::string label = {});

/// Byte-level entry point: decode with options.bit_order, truncate, analyze.
AnalysisResult analyze_bytes(std::span<const std::uint8_t> first,
                             std::span<const std::uint8_t> second,
                             const AnalysisOptions& options, std::string label = {});

/// Reads the configured input file(s) and analyzes them. Throws Error(Io) on
/// unreadable input and Error(EmptyInput) on empty input.
AnalysisResult analyze(const AnalysisConfig& config);

std::vector<std::uint8_t> read_input(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, const std::string& text);

struct SummaryRow {
    std::string input;
    std::optional<AnalysisResult> result;
    std::string error;  // non-empty when the row failed
};

/// One row per config, in input order. Failures are recorded per row.
std::vector<SummaryRow> corpus_summary(const std::vector<AnalysisConfig>& configs);

/// Parses a batch manifest: one input per line, optionally followed by a
/// second whitespace-separated path for pair mode. Blank lines and lines
/// starting with '#' are skipped; relative paths resolve against the
/// manifest's directory.
std::vector<AnalysisConfig> read_manifest(const std::filesystem::path& manifest,
                                          const AnalysisOptions& options);

enum class CorpusKind { random, periodic, all_zero };

std::optional<CorpusKind> parse_corpus_kind(std::string_view name);

/// Deterministic synthetic input. `random` is seeded Bernoulli(1/2) bits;
/// `periodic` repeats a fixed 16-byte pattern.
std::vector<std::uint8_t> generate_corpus(CorpusKind kind, std::size_t bytes, std::uint64_t seed);

}  // namespace strtherm
