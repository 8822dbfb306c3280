#include "idbe/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idbe {

namespace fs = std::filesystem;

double bpc(std::uint64_t original_size, std::uint64_t compressed_size) {
    if (original_size == 0) throw std::invalid_argument("bpc of an empty file");
    return 8.0 * static_cast<double>(compressed_size) / static_cast<double>(original_size);
}

const char* method_name(PreTransform m) {
    switch (m) {
        case PreTransform::None: return "none";
        case PreTransform::Star: return "star";
        case PreTransform::Idbe: return "idbe";
    }
    return "?";
}

namespace {

bool read_file(const fs::path& p, Bytes& out) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    in.seekg(0, std::ios::end);
    auto size = in.tellg();
    if (size < 0) return false;
    out.resize(static_cast<std::size_t>(size));
    in.seekg(0);
    in.read(reinterpret_cast<char*>(out.data()), size);
    return static_cast<bool>(in);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const fs::path& corpus_dir, const Dictionary& d,
                                       const BenchOptions& opts) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    std::vector<BenchRecord> records(files.size() * opts.methods.size());
    std::string round_trip_failure;

#ifdef _OPENMP
    int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#else
    int threads = 1;
    (void)threads;
#endif

    const std::int64_t total = static_cast<std::int64_t>(records.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::size_t fi = idx / opts.methods.size();
        PreTransform method = opts.methods[idx % opts.methods.size()];

        BenchRecord& rec = records[idx];
        rec.file_name = files[fi].filename().string();
        rec.method = method;

        Bytes input;
        if (!read_file(files[fi], input) || input.empty()) {
            rec.read_ok = false;
            continue;
        }
        rec.original_size = input.size();

        PipelineOptions popts{method, opts.block_size};
        const Dictionary* dict = method == PreTransform::None ? nullptr : &d;
        DictResolver resolver = [&](std::uint64_t) { return &d; };

        auto t0 = std::chrono::steady_clock::now();
        Bytes container = compress(input, popts, dict);
        rec.encode_time = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        Bytes restored = decompress(container, resolver);
        rec.decode_time = seconds_since(t0);

        rec.compressed_size = container.size();
        rec.bpc = bpc(rec.original_size, rec.compressed_size);
        rec.round_trip_ok = (restored == input);
        if (!rec.round_trip_ok) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (round_trip_failure.empty())
                round_trip_failure = rec.file_name + " (" + method_name(method) + ")";
        }
    }

    if (!round_trip_failure.empty())
        throw DataError("round-trip mismatch on " + round_trip_failure);
    return records;
}

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

std::string emit_report(const std::vector<BenchRecord>& records, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "file,size_bytes,method,compressed_bytes,bpc,encode_s,decode_s\n";
        for (const auto& r : records) {
            if (!r.read_ok || !r.round_trip_ok) continue;
            out << r.file_name << ',' << r.original_size << ',' << method_name(r.method) << ','
                << r.compressed_size << ',' << fixed(r.bpc, 3) << ',' << fixed(r.encode_time, 2)
                << ',' << fixed(r.decode_time, 2) << '\n';
        }
        return out.str();
    }

    // Markdown: one row per file, (bpc, time) column pair per method.
    std::vector<PreTransform> methods;
    std::map<std::string, std::map<PreTransform, const BenchRecord*>> by_file;
    for (const auto& r : records) {
        if (!r.read_ok || !r.round_trip_ok) continue;
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
            methods.push_back(r.method);
        by_file[r.file_name][r.method] = &r;
    }

    out << "| File | Size (bytes) |";
    for (auto m : methods) out << ' ' << method_name(m) << " BPC | " << method_name(m) << " Time (s) |";
    out << "\n|---|---|";
    for (std::size_t i = 0; i < methods.size(); ++i) out << "---|---|";
    out << '\n';
    for (const auto& [file, row] : by_file) {
        std::uint64_t size = row.begin()->second->original_size;
        out << "| " << file << " | " << size << " |";
        for (auto m : methods) {
            auto it = row.find(m);
            if (it == row.end())
                out << " | |";
            else
                out << ' ' << fixed(it->second->bpc, 3) << " | " << fixed(it->second->encode_time, 2)
                    << " |";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace idbe
