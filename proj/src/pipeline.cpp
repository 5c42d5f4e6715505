#include "strtherm/pipeline.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "strtherm/error.hpp"

namespace strtherm {

namespace {

constexpr std::array<std::uint8_t, 16> kPeriodicPattern = {
    0x5A, 0x3C, 0x0F, 0xF0, 0x69, 0x96, 0xC3, 0x81,
    0x7E, 0x24, 0xA5, 0x18, 0xE7, 0x42, 0xDB, 0x66,
};

BitString decode(std::span<const std::uint8_t> bytes, const AnalysisOptions& options) {
    BitString b = BitString::from_bytes(bytes, options.bit_order);
    if (options.max_bits && *options.max_bits < b.size()) {
        b = truncate(b, *options.max_bits);
    }
    return b;
}

}  // namespace

AnalysisResult analyze_bits(const BitString& first, const BitString* second,
                            const AnalysisOptions& options, std::string label) {
    AnalysisResult r;
    r.input = std::move(label);
    r.bit_order = options.bit_order;
    r.mode = second ? EnsembleMode::pair : EnsembleMode::self;

    Ensemble e;
    if (second) {
        const std::size_t bits =
            pair_extension_bits(first.size(), second->size(), options.pair_max_bits);
        e = build_pair_ensemble(first, *second, options.ensemble_size.value_or(bits),
                                options.pair_max_bits, options.threads);
    } else {
        e = build_self_ensemble(first, options.ensemble_size.value_or(first.size()),
                                options.threads);
    }
    r.bits = e.bits;
    r.set_bits = e.set_bits;
    r.full_ensemble = e.is_full();
    r.histogram = histogram(e);
    if (r.mode == EnsembleMode::self && r.full_ensemble) {
        const auto k = static_cast<unsigned long long>(e.set_bits);
        const auto m = static_cast<unsigned long long>(e.bits);
        r.mean_identity = measure_sum(r.histogram) == 2 * k * (m - k);
    }
    const bool drop_zero_shift = r.mode == EnsembleMode::self && e.size() > 1;
    r.particles = drop_zero_shift ? drop_self_match(r.histogram) : r.histogram;
    r.model = fit(r.particles, ensemble_mean(r.histogram));
    r.report = thermo_report(r.particles, r.model);
    return r;
}

AnalysisResult analyze_bytes(std::span<const std::uint8_t> first,
                             std::span<const std::uint8_t> second,
                             const AnalysisOptions& options, std::string label) {
    const BitString a = decode(first, options);
    if (second.empty()) {
        return analyze_bits(a, nullptr, options, std::move(label));
    }
    const BitString b = decode(second, options);
    return analyze_bits(a, &b, options, std::move(label));
}

std::vector<std::uint8_t> read_input(const std::filesystem::path& path) {
    std::vector<std::uint8_t> bytes;
    if (path == "-") {
        std::cin >> std::noskipws;
        bytes.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw Error(ErrorCode::Io, "cannot open " + path.string());
        }
        bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        if (in.bad()) {
            throw Error(ErrorCode::Io, "failed reading " + path.string());
        }
    }
    if (bytes.empty()) {
        throw Error(ErrorCode::EmptyInput, path.string() + " is empty");
    }
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(ErrorCode::Io, "failed writing " + path.string());
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

AnalysisResult analyze(const AnalysisConfig& config) {
    if (config.inputs.empty() || config.inputs.size() > 2) {
        throw Error(ErrorCode::InvalidArgument, "analysis needs one input, or two for pair mode");
    }
    const auto first = read_input(config.inputs[0]);
    std::vector<std::uint8_t> second;
    if (config.inputs.size() == 2) {
        second = read_input(config.inputs[1]);
    }
    std::string label = config.inputs[0].string();
    if (config.inputs.size() == 2) {
        label += "+" + config.inputs[1].string();
    }
    return analyze_bytes(first, second, config.options, std::move(label));
}

std::vector<SummaryRow> corpus_summary(const std::vector<AnalysisConfig>& configs) {
    std::vector<SummaryRow> rows;
    rows.reserve(configs.size());
    for (const auto& config : configs) {
        SummaryRow row;
        for (std::size_t i = 0; i < config.inputs.size(); ++i) {
            row.input += (i ? "+" : "") + config.inputs[i].string();
        }
        try {
            row.result = analyze(config);
        } catch (const Error& e) {
            row.error = std::string(to_string(e.code())) + ": " + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<AnalysisConfig> read_manifest(const std::filesystem::path& manifest,
                                          const AnalysisOptions& options) {
    std::ifstream in(manifest);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open manifest " + manifest.string());
    }
    const std::filesystem::path base = manifest.parent_path();
    std::vector<AnalysisConfig> configs;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string path;
        if (!(fields >> path) || path.front() == '#') {
            continue;
        }
        AnalysisConfig config;
        config.options = options;
        config.inputs.push_back(base / path);
        if (std::string pair; fields >> pair) {
            config.inputs.push_back(base / pair);
        }
        if (std::string extra; fields >> extra) {
            throw Error(ErrorCode::InvalidArgument,
                        "manifest line has more than two paths: " + line);
        }
        configs.push_back(std::move(config));
    }
    return configs;
}

std::optional<CorpusKind> parse_corpus_kind(std::string_view name) {
    if (name == "random") return CorpusKind::random;
    if (name == "periodic") return CorpusKind::periodic;
    if (name == "all_zero") return CorpusKind::all_zero;
    return std::nullopt;
}

std::vector<std::uint8_t> generate_corpus(CorpusKind kind, std::size_t bytes, std::uint64_t seed) {
    if (bytes == 0) {
        throw Error(ErrorCode::InvalidLength, "corpus size must be at least one byte");
    }
    switch (kind) {
        case CorpusKind::random:
            return random_bitstring(bytes * 8, 0.5, seed).to_bytes(BitOrder::msb_first);
        case CorpusKind::periodic: {
            std::vector<std::uint8_t> out(bytes);
            for (std::size_t i = 0; i < bytes; ++i) {
                out[i] = kPeriodicPattern[i % kPeriodicPattern.size()];
            }
            return out;
        }
        case CorpusKind::all_zero:
            return std::vector<std::uint8_t>(bytes, 0);
    }
    return {};
}

}  // namespace strtherm
