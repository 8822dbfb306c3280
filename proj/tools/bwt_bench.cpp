// Kernel benchmark: prefix-doubling BWT vs the naive reference sort, and
// multi-block compression at 1 thread vs all threads.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "idbe/bwt.hpp"
#include "idbe/pipeline.hpp"

namespace {

using idbe::Bytes;

double time_of(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Bytes synthetic_input(std::size_t size) {
    // Mildly repetitive text-like data.
    static const char* words[] = {"the", "quick", "brown", "fox", "jumps",
                                  "over", "lazy", "dog", "and", "cat"};
    std::mt19937 rng(42);
    Bytes out;
    out.reserve(size + 16);
    while (out.size() < size) {
        const char* w = words[rng() % 10];
        out.insert(out.end(), w, w + std::strlen(w));
        out.push_back(' ');
    }
    out.resize(size);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BWT kernel benchmark"};
    std::string input_path;
    std::size_t size = 1 << 20;
    std::size_t naive_limit = 1 << 16;
    app.add_option("-f,--file", input_path, "Input file (default: synthetic data)");
    app.add_option("-n,--size", size, "Synthetic input size in bytes");
    app.add_option("--naive-limit", naive_limit,
                   "Skip the naive reference above this size (it is quadratic)");
    CLI11_PARSE(app, argc, argv);

    Bytes data;
    if (!input_path.empty()) {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) {
            std::fprintf(stderr, "cannot open %s\n", input_path.c_str());
            return 1;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        auto s = ss.str();
        data.assign(s.begin(), s.end());
    } else {
        data = synthetic_input(size);
    }
    std::printf("input: %zu bytes\n", data.size());

    idbe::BwtBlock fast;
    double t_fast = time_of([&] { fast = idbe::bwt_forward(data); });
    std::printf("bwt_forward (doubling): %.3f s\n", t_fast);

    if (data.size() <= naive_limit) {
        idbe::BwtBlock naive;
        double t_naive = time_of([&] { naive = idbe::bwt_forward_naive(data); });
        std::printf("bwt_forward_naive:      %.3f s (%.1fx)\n", t_naive, t_naive / t_fast);
        if (naive.data != fast.data) {
            std::fprintf(stderr, "MISMATCH between naive and doubling BWT\n");
            return 1;
        }
    } else {
        std::printf("bwt_forward_naive:      skipped (> naive-limit)\n");
    }

    Bytes restored = idbe::bwt_inverse(fast);
    if (restored != Bytes(data.begin(), data.end())) {
        std::fprintf(stderr, "bwt_inverse MISMATCH\n");
        return 1;
    }

#ifdef _OPENMP
    idbe::PipelineOptions opts;
    opts.block_size = std::max(idbe::kMinBlockSize, data.size() / 16);
    int max_threads = omp_get_max_threads();

    omp_set_num_threads(1);
    double t1 = time_of([&] { (void)idbe::compress(data, opts); });
    omp_set_num_threads(max_threads);
    double tn = time_of([&] { (void)idbe::compress(data, opts); });
    std::printf("compress 16 blocks: 1 thread %.3f s, %d threads %.3f s (%.2fx)\n", t1,
                max_threads, tn, t1 / tn);
#endif
    return 0;
}
