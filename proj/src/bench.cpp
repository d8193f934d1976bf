#include "natrep/bench.hpp"

#include "natrep/fastcodec.hpp"

#include <chrono>
#include <sstream>

namespace natrep {

std::uint64_t fib(unsigned n) {
    if (n == 0 || n > 92)
        throw range_error("fib: need 1 <= n <= 92");
    std::uint64_t a = 1, b = 1;
    for (unsigned i = 3; i <= n; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? 1 : b;
}

namespace {

using Clock = std::chrono::steady_clock;

// Keeps results live across iterations so the loops cannot be elided.
volatile std::uint64_t g_sink = 0;

template <typename F> std::uint64_t time_us(F &&body, std::uint64_t iterations) {
    auto start = Clock::now();
    for (std::uint64_t i = 0; i < iterations; ++i)
        body();
    auto stop = Clock::now();
    std::uint64_t ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return (ns + 999) / 1000; // round up so sub-microsecond runs stay visible
}

template <typename F> std::uint64_t min_of_3(F &&body, std::uint64_t iterations) {
    for (int warm = 0; warm < 3; ++warm)
        body();
    std::uint64_t best = UINT64_MAX;
    for (int rep = 0; rep < 3; ++rep)
        best = std::min(best, time_us(body, iterations));
    return best;
}

} // namespace

std::vector<BenchRow> run_suite(const std::vector<unsigned> &ns, std::uint64_t iterations) {
    if (iterations == 0)
        throw range_error("run_suite: iterations >= 1");
    std::vector<BenchRow> rows;
    for (unsigned n : ns) {
        if (n + 1 > 92)
            throw range_error("run_suite: f_{n+1} exceeds 64 bits");
        BenchRow row;
        row.n = n;
        row.num = fib(n);
        row.den = fib(n + 1);

        std::int32_t cf_seq[128], nat_seq[128];
        int cf_len = 0, nat_len = 0;
        row.cf_iters = fast::cf_encode_iters(row.num, row.den, cf_seq, &cf_len);
        row.nat_iters = fast::nat_encode_iters(row.num, row.den, nat_seq, &nat_len);
        row.cf_len = static_cast<unsigned>(cf_len);
        row.nat_len = static_cast<unsigned>(nat_len);

        row.cf_enc_us = min_of_3(
            [&] {
                std::int32_t seq[128];
                g_sink = g_sink + fast::cf_encode(row.num, row.den, seq);
            },
            iterations);
        row.cf_dec_us = min_of_3(
            [&] {
                std::uint64_t num, den;
                fast::cf_decode(&num, &den, cf_seq, cf_len);
                g_sink = g_sink + num;
            },
            iterations);
        row.nat_enc_us = min_of_3(
            [&] {
                std::int32_t seq[128];
                g_sink = g_sink + fast::nat_encode(row.num, row.den, seq);
            },
            iterations);
        row.nat_dec_us = min_of_3(
            [&] {
                std::uint64_t num, den;
                fast::nat_decode(&num, &den, nat_seq, nat_len);
                g_sink = g_sink + num;
            },
            iterations);
        rows.push_back(row);
    }
    return rows;
}

std::string emit(const std::vector<BenchRow> &rows, BenchFormat format) {
    std::ostringstream out;
    if (format == BenchFormat::Csv) {
        out << "n,num,den,cf_enc_us,cf_dec_us,nat_enc_us,nat_dec_us,cf_len,nat_len,cf_iters,"
               "nat_iters\n";
        for (const BenchRow &r : rows)
            out << r.n << ',' << r.num << ',' << r.den << ',' << r.cf_enc_us << ',' << r.cf_dec_us
                << ',' << r.nat_enc_us << ',' << r.nat_dec_us << ',' << r.cf_len << ',' << r.nat_len
                << ',' << r.cf_iters << ',' << r.nat_iters << '\n';
        return out.str();
    }
    out << "{\"meta\": " << build_metadata() << ", \"rows\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
        const BenchRow &r = rows[i];
        if (i)
            out << ", ";
        out << "{\"n\": " << r.n << ", \"num\": " << r.num << ", \"den\": " << r.den
            << ", \"cf_enc_us\": " << r.cf_enc_us << ", \"cf_dec_us\": " << r.cf_dec_us
            << ", \"nat_enc_us\": " << r.nat_enc_us << ", \"nat_dec_us\": " << r.nat_dec_us
            << ", \"cf_len\": " << r.cf_len << ", \"nat_len\": " << r.nat_len
            << ", \"cf_iters\": " << r.cf_iters << ", \"nat_iters\": " << r.nat_iters << "}";
    }
    out << "]}\n";
    return out.str();
}

std::string build_metadata() {
    std::ostringstream out;
    out << "{\"compiler\": \"";
#if defined(__clang__)
    out << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
    out << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#else
    out << "unknown";
#endif
    out << "\", \"optimized\": ";
#ifdef NDEBUG
    out << "true";
#else
    out << "false";
#endif
    out << ", \"int_width\": 64}";
    return out.str();
}

} // namespace natrep
