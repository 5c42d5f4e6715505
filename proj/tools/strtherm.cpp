// strtherm: thermodynamic analysis of binary strings from the command line.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "strtherm/error.hpp"
#include "strtherm/pipeline.hpp"
#include "strtherm/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 2;

const std::map<std::string, strtherm::BitOrder> kBitOrders = {
    {"msb", strtherm::BitOrder::msb_first},
    {"lsb", strtherm::BitOrder::lsb_first},
};

const std::map<std::string, strtherm::OutputFormat> kFormats = {
    {"json", strtherm::OutputFormat::json},
    {"csv", strtherm::OutputFormat::csv},
    {"human", strtherm::OutputFormat::human},
};

struct AnalyzeArgs {
    std::string input;
    std::string pair;
    std::optional<std::size_t> bits;
    std::optional<std::size_t> ensemble;
    std::string bit_order = "msb";
    std::string format = "json";
    std::string histogram_path;
    std::string curves_path;
};

struct BatchArgs {
    std::string manifest;
    std::optional<std::size_t> bits;
    std::optional<std::size_t> ensemble;
    std::string bit_order = "msb";
    std::string format = "human";
};

struct GenArgs {
    std::string kind;
    std::size_t bytes = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
    strtherm::AnalysisConfig config;
    config.inputs.emplace_back(args.input);
    if (!args.pair.empty()) {
        config.inputs.emplace_back(args.pair);
    }
    config.options.bit_order = kBitOrders.at(args.bit_order);
    config.options.max_bits = args.bits;
    config.options.ensemble_size = args.ensemble;
    config.format = kFormats.at(args.format);

    const strtherm::AnalysisResult result = strtherm::analyze(config);
    if (!args.histogram_path.empty()) {
        const std::filesystem::path path(args.histogram_path);
        strtherm::write_file(path, path.extension() == ".json"
                                       ? strtherm::histogram_json(result.histogram)
                                       : strtherm::histogram_csv(result.histogram));
    }
    if (!args.curves_path.empty()) {
        strtherm::write_file(args.curves_path,
                             strtherm::curves_csv(strtherm::model_curve(
                                 result.model, result.histogram.max_value)));
    }
    std::cout << strtherm::render_report(result, config.format);
    return kExitOk;
}

int run_batch(const BatchArgs& args) {
    strtherm::AnalysisOptions options;
    options.bit_order = kBitOrders.at(args.bit_order);
    options.max_bits = args.bits;
    options.ensemble_size = args.ensemble;
    const auto rows = strtherm::corpus_summary(strtherm::read_manifest(args.manifest, options));
    std::cout << (args.format == "human" ? strtherm::summary_human(rows)
                                         : strtherm::summary_csv(rows));
    return kExitOk;
}

int run_gen(const GenArgs& args) {
    const auto kind = strtherm::parse_corpus_kind(args.kind);
    if (!kind) {
        throw strtherm::Error(strtherm::ErrorCode::InvalidArgument,
                              "unknown corpus kind " + args.kind);
    }
    strtherm::write_file(args.out, strtherm::generate_corpus(*kind, args.bytes, args.seed));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shift-XOR ensemble thermodynamics of binary strings"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Analyze one file, or a pair with --pair");
    analyze->add_option("file", analyze_args.input, "Input file ('-' for stdin)")->required();
    analyze->add_option("--pair", analyze_args.pair, "Second input for pair mode");
    analyze->add_option("--bits", analyze_args.bits, "Truncate inputs to the first N bits")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--ensemble", analyze_args.ensemble, "Ensemble size N (default: M)")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--bit-order", analyze_args.bit_order, "Bit order within bytes (msb or lsb)")
        ->check(CLI::IsMember({"msb", "lsb"}));
    analyze->add_option("--format", analyze_args.format, "Report format (json, csv or human)")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    analyze->add_option("--emit-histogram", analyze_args.histogram_path,
                        "Write the observed histogram (CSV, or JSON for a .json path)");
    analyze->add_option("--emit-curves", analyze_args.curves_path,
                        "Write normal and adjusted binomial model curves as CSV");

    BatchArgs batch_args;
    auto* batch = app.add_subcommand("batch", "Summarize every input listed in a manifest");
    batch->add_option("manifest", batch_args.manifest, "One path (or path pair) per line")
        ->required();
    batch->add_option("--bits", batch_args.bits, "Truncate inputs to the first N bits")
        ->check(CLI::PositiveNumber);
    batch->add_option("--ensemble", batch_args.ensemble, "Ensemble size N (default: M)")
        ->check(CLI::PositiveNumber);
    batch->add_option("--bit-order", batch_args.bit_order, "Bit order within bytes (msb or lsb)")
        ->check(CLI::IsMember({"msb", "lsb"}));
    batch->add_option("--format", batch_args.format, "Table format (csv or human)")
        ->check(CLI::IsMember({"csv", "human"}));

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a synthetic corpus file");
    gen->add_option("--kind", gen_args.kind, "random, periodic or all_zero")
        ->required()
        ->check(CLI::IsMember({"random", "periodic", "all_zero"}));
    gen->add_option("--bytes", gen_args.bytes, "Size in bytes")->required()->check(
        CLI::PositiveNumber);
    gen->add_option("--seed", gen_args.seed, "Generator seed");
    gen->add_option("--out", gen_args.out, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*batch) return run_batch(batch_args);
        if (*gen) return run_gen(gen_args);
    } catch (const strtherm::Error& e) {
        std::cerr << "strtherm: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "strtherm: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
