#pragma once

#include "natrep/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace natrep {

std::uint64_t fib(unsigned n); // f_1 = f_2 = 1, n <= 92

struct BenchRow {
    unsigned n = 0;
    std::uint64_t num = 0, den = 0;
    std::uint64_t cf_enc_us = 0, cf_dec_us = 0, nat_enc_us = 0, nat_dec_us = 0;
    unsigned cf_len = 0, nat_len = 0;
    std::uint64_t cf_iters = 0, nat_iters = 0;
};

// Times both codecs on f_n / f_{n+1}, single thread, monotonic clock,
// 3 untimed warmup passes then min of 3 timed runs per operation.
std::vector<BenchRow> run_suite(const std::vector<unsigned> &ns, std::uint64_t iterations);

enum class BenchFormat { Csv, Json };

std::string emit(const std::vector<BenchRow> &rows, BenchFormat format);

std::string build_metadata();

} // namespace natrep
