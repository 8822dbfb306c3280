#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "idbe/dictionary.hpp"
#include "idbe/pipeline.hpp"

namespace idbe {

struct BenchRecord {
    std::string file_name;
    std::uint64_t original_size = 0;
    PreTransform method = PreTransform::None;
    std::uint64_t compressed_size = 0;
    double bpc = 0.0;
    double encode_time = 0.0;  // seconds, wall
    double decode_time = 0.0;
    bool round_trip_ok = false;
    bool read_ok = true;  // false: file was unreadable, excluded from reports
};

struct BenchOptions {
    std::vector<PreTransform> methods{PreTransform::None, PreTransform::Star,
                                      PreTransform::Idbe};
    std::size_t block_size = kDefaultBlockSize;
    int jobs = 0;  // 0 = all available
};

double bpc(std::uint64_t original_size, std::uint64_t compressed_size);

const char* method_name(PreTransform m);

// One record per regular file x method, files in ascending name order,
// methods in the order given. Every compression is verified by decompressing
// and comparing bytes; a mismatch throws (it is a bug, never a result).
// Unreadable files yield records with read_ok = false.
std::vector<BenchRecord> run_benchmark(const std::filesystem::path& corpus_dir,
                                       const Dictionary& d, const BenchOptions& opts = {});

enum class ReportFormat { Csv, Markdown };

std::string emit_report(const std::vector<BenchRecord>& records, ReportFormat format);

}  // namespace idbe
