#pragma once

#include <cstdint>
#include <cstdlib>

// Fixed-width fast paths of both codecs for the benchmark: unsigned 64-bit
// numerators and denominators, int32 sequences, reduced inputs with n < d.
namespace natrep::fast {

inline int cf_encode(std::uint64_t numerator, std::uint64_t denominator, std::int32_t *sequence) {
    int i = 0;
    std::uint64_t new_numerator;
    while (denominator > 1) {
        sequence[i] = static_cast<std::int32_t>(numerator / denominator);
        new_numerator = numerator - static_cast<std::uint64_t>(sequence[i]) * denominator;
        numerator = denominator;
        denominator = new_numerator;
        ++i;
    }
    sequence[i] = static_cast<std::int32_t>(numerator);
    return i + static_cast<int>(denominator);
}

inline void cf_decode(std::uint64_t *numerator, std::uint64_t *denominator,
                      const std::int32_t *sequence, int sequence_size) {
    int i = sequence_size - 1;
    *numerator = static_cast<std::uint64_t>(sequence[i]);
    *denominator = 1;
    while (i > 0) {
        --i;
        std::uint64_t old_numerator = *numerator;
        *numerator = *denominator + static_cast<std::uint64_t>(sequence[i]) * *numerator;
        *denominator = old_numerator;
    }
}

inline int nat_encode(std::uint64_t numerator, std::uint64_t denominator, std::int32_t *sequence) {
    int sign = 1, i = 0;
    std::uint64_t integer_part, fractional_part, old_denominator;
    while (true) {
        integer_part = numerator / denominator;
        fractional_part = numerator - integer_part * denominator;
        sequence[i] = sign * static_cast<std::int32_t>(integer_part + (fractional_part > 0));
        ++i;
        if (2 * fractional_part >= denominator) {
            denominator = denominator - fractional_part;
            numerator = fractional_part - denominator;
        } else {
            if (fractional_part == 0)
                return i;
            old_denominator = denominator;
            denominator = fractional_part;
            numerator = old_denominator - 2 * fractional_part;
            sign = -sign;
        }
    }
}

inline void nat_decode(std::uint64_t *numerator, std::uint64_t *denominator,
                       const std::int32_t *sequence, int sequence_size) {
    int i = sequence_size - 1;
    int previous_sign = sequence[i] >= 0;
    *numerator = static_cast<std::uint64_t>(std::abs(sequence[i]));
    *denominator = 1;
    while (i > 0) {
        --i;
        std::uint64_t old_numerator = *numerator;
        std::uint64_t new_denominator = old_numerator + 2 * *denominator;
        *numerator = static_cast<std::uint64_t>(std::abs(sequence[i])) * new_denominator -
                     *denominator;
        if ((sequence[i] < 0) == previous_sign) {
            *numerator -= old_numerator;
            previous_sign = 1 - previous_sign;
        }
        *denominator = new_denominator;
    }
}

// Instrumented twins: identical arithmetic, returning loop-iteration counts.

inline std::uint64_t cf_encode_iters(std::uint64_t numerator, std::uint64_t denominator,
                                     std::int32_t *sequence, int *size) {
    std::uint64_t iters = 0;
    int i = 0;
    while (denominator > 1) {
        ++iters;
        sequence[i] = static_cast<std::int32_t>(numerator / denominator);
        std::uint64_t new_numerator =
            numerator - static_cast<std::uint64_t>(sequence[i]) * denominator;
        numerator = denominator;
        denominator = new_numerator;
        ++i;
    }
    sequence[i] = static_cast<std::int32_t>(numerator);
    *size = i + static_cast<int>(denominator);
    return iters;
}

inline std::uint64_t cf_decode_iters(std::uint64_t *numerator, std::uint64_t *denominator,
                                     const std::int32_t *sequence, int sequence_size) {
    std::uint64_t iters = 0;
    int i = sequence_size - 1;
    *numerator = static_cast<std::uint64_t>(sequence[i]);
    *denominator = 1;
    while (i > 0) {
        ++iters;
        --i;
        std::uint64_t old_numerator = *numerator;
        *numerator = *denominator + static_cast<std::uint64_t>(sequence[i]) * *numerator;
        *denominator = old_numerator;
    }
    return iters;
}

inline std::uint64_t nat_encode_iters(std::uint64_t numerator, std::uint64_t denominator,
                                      std::int32_t *sequence, int *size) {
    std::uint64_t iters = 0;
    int sign = 1, i = 0;
    while (true) {
        ++iters;
        std::uint64_t integer_part = numerator / denominator;
        std::uint64_t fractional_part = numerator - integer_part * denominator;
        sequence[i] = sign * static_cast<std::int32_t>(integer_part + (fractional_part > 0));
        ++i;
        if (2 * fractional_part >= denominator) {
            denominator = denominator - fractional_part;
            numerator = fractional_part - denominator;
        } else {
            if (fractional_part == 0) {
                *size = i;
                return iters;
            }
            std::uint64_t old_denominator = denominator;
            denominator = fractional_part;
            numerator = old_denominator - 2 * fractional_part;
            sign = -sign;
        }
    }
}

inline std::uint64_t nat_decode_iters(std::uint64_t *numerator, std::uint64_t *denominator,
                                      const std::int32_t *sequence, int sequence_size) {
    std::uint64_t iters = 0;
    int i = sequence_size - 1;
    int previous_sign = sequence[i] >= 0;
    *numerator = static_cast<std::uint64_t>(std::abs(sequence[i]));
    *denominator = 1;
    while (i > 0) {
        ++iters;
        --i;
        std::uint64_t old_numerator = *numerator;
        std::uint64_t new_denominator = old_numerator + 2 * *denominator;
        *numerator = static_cast<std::uint64_t>(std::abs(sequence[i])) * new_denominator -
                     *denominator;
        if ((sequence[i] < 0) == previous_sign) {
            *numerator -= old_numerator;
            previous_sign = 1 - previous_sign;
        }
        *denominator = new_denominator;
    }
    return iters;
}

} // namespace natrep::fast
