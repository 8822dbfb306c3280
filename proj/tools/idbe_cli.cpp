#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "idbe/bench.hpp"
#include "idbe/dictionary.hpp"
#include "idbe/idbe_codec.hpp"
#include "idbe/pipeline.hpp"
#include "idbe/star_codec.hpp"

namespace {

using idbe::Bytes;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

Bytes read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        auto s = ss.str();
        return Bytes(s.begin(), s.end());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    auto s = ss.str();
    return Bytes(s.begin(), s.end());
}

void write_output(const std::string& path, idbe::ByteView data) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("cannot write " + path);
}

// --dict value, falling back to $IDBE_DICT.
std::string resolve_dict_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("IDBE_DICT")) return env;
    throw std::runtime_error("a dictionary is required: pass --dict or set IDBE_DICT");
}

idbe::Dictionary load_dict(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dictionary " + path);
    return idbe::Dictionary::load(in);
}

idbe::PreTransform parse_method(const std::string& name) {
    if (name == "none") return idbe::PreTransform::None;
    if (name == "star") return idbe::PreTransform::Star;
    if (name == "idbe") return idbe::PreTransform::Idbe;
    throw CLI::ValidationError("--methods", "unknown method: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IDBE text compression toolkit"};
    app.require_subcommand(1);

    // makedict
    auto* makedict = app.add_subcommand("makedict", "Build a dictionary from training files");
    std::vector<std::string> train_inputs;
    std::string dict_out;
    std::uint64_t min_frequency = 1;
    int max_code_length = 4;
    makedict->add_option("inputs", train_inputs, "Training files ('-' for stdin)")->required();
    makedict->add_option("-o,--output", dict_out, "Dictionary file to write")->required();
    makedict->add_option("--min-frequency", min_frequency, "Minimum word count")
        ->check(CLI::PositiveNumber);
    makedict->add_option("--max-code-length", max_code_length, "Cap code length (1..4)")
        ->check(CLI::Range(1, 4));

    // transform
    auto* transform = app.add_subcommand("transform", "Run a pre-transform by itself");
    std::string mode, trans_in, trans_out = "-", trans_dict;
    transform->add_option("--mode", mode, "idbe-enc | idbe-dec | star-enc | star-dec")
        ->required()
        ->check(CLI::IsMember({"idbe-enc", "idbe-dec", "star-enc", "star-dec"}));
    transform->add_option("--dict", trans_dict, "Dictionary file (or $IDBE_DICT)");
    transform->add_option("-o,--output", trans_out, "Output file ('-' for stdout)");
    transform->add_option("input", trans_in, "Input file ('-' for stdin)")->required();

    // compress
    auto* compress_cmd = app.add_subcommand("compress", "Compress a file to a container");
    std::string pre = "idbe", comp_in, comp_out, comp_dict;
    std::size_t block_size = idbe::kDefaultBlockSize;
    compress_cmd->add_option("--pre", pre, "Pre-transform: none | star | idbe (default idbe)")
        ->check(CLI::IsMember({"none", "star", "idbe"}));
    compress_cmd->add_option("--dict", comp_dict, "Dictionary file (or $IDBE_DICT)");
    compress_cmd->add_option("--block-size", block_size, "Block size in bytes")
        ->check(CLI::Range(idbe::kMinBlockSize, idbe::kMaxBlockSize));
    compress_cmd->add_option("-o,--output", comp_out, "Output container ('-' for stdout)")
        ->required();
    compress_cmd->add_option("input", comp_in, "Input file ('-' for stdin)")->required();

    // decompress
    auto* decompress_cmd = app.add_subcommand("decompress", "Restore a file from a container");
    std::string dec_in, dec_out, dec_dict;
    decompress_cmd->add_option("--dict", dec_dict, "Dictionary file (or $IDBE_DICT)");
    decompress_cmd->add_option("-o,--output", dec_out, "Output file ('-' for stdout)")->required();
    decompress_cmd->add_option("input", dec_in, "Container file ('-' for stdin)")->required();

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark a corpus directory");
    std::string corpus, methods_csv = "none,star,idbe", report = "csv", bench_out = "-",
                bench_dict;
    int jobs = 0;
    bench_cmd->add_option("--corpus", corpus, "Corpus directory")->required();
    bench_cmd->add_option("--methods", methods_csv, "Comma list of none,star,idbe");
    bench_cmd->add_option("--report", report, "csv | md")->check(CLI::IsMember({"csv", "md"}));
    bench_cmd->add_option("--dict", bench_dict,
                          "External dictionary (default: train on the corpus)");
    bench_cmd->add_option("--jobs", jobs, "Parallel workers (default: all cores)");
    bench_cmd->add_option("--block-size", block_size, "Block size in bytes")
        ->check(CLI::Range(idbe::kMinBlockSize, idbe::kMaxBlockSize));
    bench_cmd->add_option("-o,--output", bench_out, "Report file ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help goes to stdout, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (makedict->parsed()) {
            std::vector<Bytes> streams;
            streams.reserve(train_inputs.size());
            for (const auto& p : train_inputs) streams.push_back(read_input(p));
            std::vector<idbe::ByteView> views(streams.begin(), streams.end());
            idbe::Dictionary d = idbe::Dictionary::build(
                views, {min_frequency, max_code_length});
            std::ostringstream ss;
            d.save(ss);
            auto s = ss.str();
            write_output(dict_out, idbe::as_bytes(s));
            return kExitOk;
        }

        if (transform->parsed()) {
            Bytes input = read_input(trans_in);
            idbe::Dictionary d = load_dict(resolve_dict_path(trans_dict));
            Bytes output;
            if (mode == "idbe-enc") {
                output = idbe::idbe_encode(input, d);
            } else if (mode == "idbe-dec") {
                output = idbe::idbe_decode(input, d);
            } else {
                idbe::StarDictionary sd = idbe::StarDictionary::build(d);
                output = mode == "star-enc" ? idbe::star_encode(input, sd)
                                            : idbe::star_decode(input, sd);
            }
            write_output(trans_out, output);
            return kExitOk;
        }

        if (compress_cmd->parsed()) {
            Bytes input = read_input(comp_in);
            idbe::PipelineOptions opts{parse_method(pre), block_size};
            if (opts.pre_transform == idbe::PreTransform::None) {
                write_output(comp_out, idbe::compress(input, opts));
            } else {
                idbe::Dictionary d = load_dict(resolve_dict_path(comp_dict));
                write_output(comp_out, idbe::compress(input, opts, &d));
            }
            return kExitOk;
        }

        if (decompress_cmd->parsed()) {
            Bytes input = read_input(dec_in);
            std::optional<idbe::Dictionary> d;
            idbe::DictResolver resolver = [&](std::uint64_t) -> const idbe::Dictionary* {
                if (!d) d = load_dict(resolve_dict_path(dec_dict));
                return &*d;
            };
            write_output(dec_out, idbe::decompress(input, resolver));
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            idbe::BenchOptions opts;
            opts.methods.clear();
            std::istringstream ms(methods_csv);
            std::string m;
            while (std::getline(ms, m, ',')) opts.methods.push_back(parse_method(m));
            opts.block_size = block_size;
            opts.jobs = jobs;

            idbe::Dictionary d;
            if (!bench_dict.empty() || std::getenv("IDBE_DICT")) {
                d = load_dict(resolve_dict_path(bench_dict));
            } else {
                // Self-trained: build from every regular file in the corpus.
                std::vector<Bytes> streams;
                std::vector<std::filesystem::path> files;
                for (const auto& e : std::filesystem::directory_iterator(corpus))
                    if (e.is_regular_file()) files.push_back(e.path());
                std::sort(files.begin(), files.end());
                for (const auto& p : files) streams.push_back(read_input(p.string()));
                std::vector<idbe::ByteView> views(streams.begin(), streams.end());
                d = idbe::Dictionary::build(views);
            }

            auto records = idbe::run_benchmark(corpus, d, opts);
            std::string rendered = idbe::emit_report(
                records, report == "md" ? idbe::ReportFormat::Markdown : idbe::ReportFormat::Csv);
            write_output(bench_out, idbe::as_bytes(rendered));
            for (const auto& r : records)
                if (!r.read_ok)
                    std::cerr << "warning: skipped unreadable or empty file: " << r.file_name
                              << "\n";
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const idbe::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
