#pragma once

#include "natrep/codec.hpp"
#include "natrep/hfset.hpp"
#include "natrep/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace natrep {

struct nonterminating_error : std::runtime_error {
    explicit nonterminating_error(const std::string &msg, std::vector<std::string> tail = {})
        : std::runtime_error(msg), trace_tail(std::move(tail)) {}
    std::vector<std::string> trace_tail;
};

struct Factor;
using Word = std::vector<Factor>;

// Expression factor over the generators 1, diamond, 2_V and pairs.
struct Factor {
    enum class Kind { One, Diamond, TwoV, Pair };
    Kind kind = Kind::One;
    Word left, right; // Pair entries

    friend bool operator==(const Factor &a, const Factor &b) {
        return a.kind == b.kind && a.left == b.left && a.right == b.right;
    }
    friend bool operator!=(const Factor &a, const Factor &b) { return !(a == b); }
};

Factor f_one();
Factor f_diamond();
Factor f_two_v();
Factor f_pair(Word left, Word right);

Word concat(const Word &a, const Word &b);

// Builders.
Word natural_word(unsigned long n);
Word int_word(long z);
Word expr_add_int(const Word &x, const Word &y); // y ++ [D] ++ x
Word expr_sub_int(const Word &x, const Word &y); // [D] ++ y ++ x
Word mul_start(const Word &b);                   // [(D, b)]
Word close_expr(const Word &e);                  // [(e1, e)]
Word recip_word(unsigned long n);                // [1^n, V]
Word div_word(unsigned long n, unsigned long m); // [1^(n+2), (m 2_V D, 0)]
Word rational_open_word(const NatRep &s);        // s_k V ... s_1 V s_0

// Lowers a word to the hereditarily finite set it denotes.
HFSet lower(const Word &w);

struct RewriteStep {
    Word result;
    int rule = 0;   // 1..9
    size_t pos = 0; // top-level factor index of the match
};

std::optional<RewriteStep> rewrite_step(const Word &w);

struct EvalResult {
    Word normal_form;
    size_t steps = 0;
    std::vector<std::string> trace; // "step k: rule Rn at pos p: <word>"
};

constexpr size_t kDefaultMaxSteps = 100000;

Word evaluate(const Word &w, size_t max_steps = kDefaultMaxSteps);
EvalResult evaluate_traced(const Word &w, size_t max_steps = kDefaultMaxSteps,
                           bool keep_trace = true);

// Total numeric reading of a normal form, when one exists.
std::optional<Ratio> valuate(const Word &w, size_t max_steps = kDefaultMaxSteps);

// Parses a pair-free normal form as the natural representation it denotes.
std::optional<NatRep> to_natrep(const Word &w);

// Text grammar: '1', 'D', 'V', '(w,w)', juxtaposition, optional whitespace.
std::string word_str(const Word &w);
Word parse_word(const std::string &text);

} // namespace natrep
