#include "natrep/words.hpp"

#include <algorithm>
#include <sstream>

namespace natrep {

using K = Factor::Kind;

Factor f_one() { return Factor{K::One, {}, {}}; }
Factor f_diamond() { return Factor{K::Diamond, {}, {}}; }
Factor f_two_v() { return Factor{K::TwoV, {}, {}}; }
Factor f_pair(Word left, Word right) { return Factor{K::Pair, std::move(left), std::move(right)}; }

Word concat(const Word &a, const Word &b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word natural_word(unsigned long n) { return Word(n, f_one()); }

Word int_word(long z) {
    if (z > 0) {
        Word w{f_diamond()};
        w.insert(w.end(), static_cast<size_t>(z), f_one());
        return w;
    }
    if (z < 0) {
        Word w(static_cast<size_t>(-z), f_one());
        w.push_back(f_diamond());
        return w;
    }
    return Word{f_diamond()};
}

Word expr_add_int(const Word &x, const Word &y) {
    Word w = y;
    w.push_back(f_diamond());
    return concat(w, x);
}

Word expr_sub_int(const Word &x, const Word &y) {
    Word w{f_diamond()};
    w = concat(w, y);
    return concat(w, x);
}

Word mul_start(const Word &b) { return Word{f_pair(Word{f_diamond()}, b)}; }

Word close_expr(const Word &e) {
    Word e1 = e;
    e1.push_back(f_one());
    return Word{f_pair(std::move(e1), e)};
}

Word recip_word(unsigned long n) {
    Word w(n, f_one());
    w.push_back(f_two_v());
    return w;
}

Word div_word(unsigned long n, unsigned long m) {
    Word w(n + 2, f_one());
    Word entry(m, f_one());
    entry.push_back(f_two_v());
    entry.push_back(f_diamond());
    w.push_back(f_pair(std::move(entry), Word{}));
    return w;
}

namespace {

long to_long(const Int &v) {
    if (!v.fits_slong_p())
        throw range_error("words: entry out of range for word building");
    return v.get_si();
}

} // namespace

Word rational_open_word(const NatRep &s) {
    if (s.entries.empty())
        throw invalid_sequence("rational_open_word: empty sequence");
    Word w;
    for (size_t i = s.entries.size(); i-- > 1;) {
        w = concat(w, int_word(to_long(s.entries[i])));
        w.push_back(f_two_v());
    }
    return concat(w, int_word(to_long(s.entries[0])));
}

// ---------------------------------------------------------------------------
// Lowering

namespace {

HFSet lower_onto(const Word &w, HFSet acc) {
    for (size_t i = w.size(); i-- > 0;) {
        const Factor &f = w[i];
        switch (f.kind) {
        case K::One:
            acc = HFSet::from_elements({acc});
            break;
        case K::Diamond:
            acc = substitute(diamond(), acc);
            break;
        case K::TwoV:
            acc = substitute(two_v(), acc);
            break;
        case K::Pair:
            acc = kuratowski(lower_onto(f.left, acc), lower_onto(f.right, acc));
            break;
        }
    }
    return acc;
}

} // namespace

HFSet lower(const Word &w) { return lower_onto(w, HFSet::empty()); }

// ---------------------------------------------------------------------------
// Rewrite engine

namespace {

bool is_one(const Factor &f) { return f.kind == K::One; }
bool is_dia(const Factor &f) { return f.kind == K::Diamond; }
bool is_twov(const Factor &f) { return f.kind == K::TwoV; }
bool is_pair(const Factor &f) { return f.kind == K::Pair; }

bool all_ones(const Word &w) {
    return std::all_of(w.begin(), w.end(), [](const Factor &f) { return is_one(f); });
}

// Canonical integer words: D, D 1^a, 1^a D.
bool is_integer_word(const Word &w) {
    if (w.empty())
        return false;
    if (w.size() == 1)
        return is_dia(w[0]);
    if (is_dia(w.front()))
        return std::all_of(w.begin() + 1, w.end(), is_one);
    if (is_dia(w.back()))
        return std::all_of(w.begin(), w.end() - 1, is_one);
    return false;
}

// Number of consecutive Ones immediately before index q.
size_t ones_before(const Word &w, size_t q) {
    size_t t = 0;
    while (t < q && is_one(w[q - 1 - t]))
        ++t;
    return t;
}

enum class Spelling { Dia, Zero, Bare };

// Recognizes a multiply-by-reciprocal pair in its three spellings:
//   (m 2_V D, 0), (0, m 2_V), (m 2_V, 0).
struct RecipPair {
    size_t m;
    Spelling spelling;
};

std::optional<RecipPair> recip_pair(const Factor &f) {
    if (!is_pair(f))
        return std::nullopt;
    if (f.right.empty() && !f.left.empty()) {
        if (is_dia(f.left.back())) {
            Word body(f.left.begin(), f.left.end() - 1);
            if (!body.empty() && is_twov(body.back()) && all_ones(Word(body.begin(), body.end() - 1)))
                return RecipPair{body.size() - 1, Spelling::Dia};
        } else if (is_twov(f.left.back()) &&
                   all_ones(Word(f.left.begin(), f.left.end() - 1))) {
            return RecipPair{f.left.size() - 1, Spelling::Bare};
        }
    }
    if (f.left.empty() && !f.right.empty() && is_twov(f.right.back()) &&
        all_ones(Word(f.right.begin(), f.right.end() - 1)))
        return RecipPair{f.right.size() - 1, Spelling::Zero};
    return std::nullopt;
}

Word splice(const Word &w, size_t pos, size_t count, const Word &repl) {
    Word out(w.begin(), w.begin() + pos);
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), w.begin() + pos + count, w.end());
    return out;
}

std::optional<RewriteStep> match_r1(const Word &w) {
    for (size_t p = 0; p + 2 < w.size(); ++p)
        if (is_one(w[p]) && is_dia(w[p + 1]) && is_one(w[p + 2]))
            return RewriteStep{splice(w, p, 3, {f_diamond()}), 1, p};
    return std::nullopt;
}

std::optional<RewriteStep> match_r2(const Word &w) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (is_dia(w[p]) && is_dia(w[p + 1]))
            return RewriteStep{splice(w, p, 2, {}), 2, p};
    return std::nullopt;
}

std::optional<RewriteStep> match_r3(const Word &w) {
    // D 2_V -> 2_V D 1 reads "1 - 1/(2+...)"; applying it in a word that is
    // still in descending, diamond-terminated form changes the route the word
    // denotes, so it stays disabled until the word ends in something else.
    if (!w.empty() && is_dia(w.back()))
        return std::nullopt;
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (is_dia(w[p]) && is_twov(w[p + 1]))
            return RewriteStep{splice(w, p, 2, {f_two_v(), f_diamond(), f_one()}), 3, p};
    return std::nullopt;
}

std::optional<RewriteStep> match_r4(const Word &w) {
    std::optional<size_t> best;
    for (size_t q = 0; q < w.size(); ++q) {
        auto rp = recip_pair(w[q]);
        if (!rp)
            continue;
        size_t need = rp->m + 2;
        if (ones_before(w, q) >= need) {
            size_t pos = q - need;
            if (!best || pos < *best)
                best = pos;
        }
    }
    if (!best)
        return std::nullopt;
    size_t pos = *best;
    // Locate the pair again from the match position.
    size_t q = pos;
    while (!is_pair(w[q]))
        ++q;
    Word repl{w[q], f_one()};
    return RewriteStep{splice(w, pos, q - pos + 1, repl), 4, pos};
}

namespace {

Factor make_recip_pair(size_t m, bool flipped) {
    Word entry(m, f_one());
    entry.push_back(f_two_v());
    if (!flipped)
        entry.push_back(f_diamond());
    return f_pair(std::move(entry), Word{});
}

} // namespace

// Division structure: a run of h ones multiplying a reciprocal pair of
// denominator m+2 is ground through the continued-fraction step. The pair's
// spelling carries the sign parity: the trailing diamond in the entry marks
// even parity, its absence odd. Complements and descents both toggle it, and
// each descent closes the current digit with a 2_V, diamond-marked when the
// parity is odd.
std::optional<RewriteStep> match_r5(const Word &w) {
    std::optional<size_t> best;
    for (size_t q = 0; q < w.size(); ++q) {
        auto rp = recip_pair(w[q]);
        if (!rp)
            continue;
        size_t t = ones_before(w, q);
        if (t >= 1 && t < rp->m + 2) {
            size_t pos = q - t;
            if (!best || pos < *best)
                best = pos;
        }
    }
    if (!best)
        return std::nullopt;
    size_t pos = *best;
    size_t q = pos;
    while (!is_pair(w[q]))
        ++q;
    auto rp = recip_pair(w[q]);
    size_t h = q - pos;
    size_t m = rp->m;
    bool flipped = rp->spelling == Spelling::Bare;
    Word repl;
    if (h == 1) {
        // Final reciprocal: digit +-m, closing this level.
        repl.insert(repl.end(), m, f_one());
        repl.push_back(f_two_v());
        if (flipped) {
            repl.push_back(f_diamond());
            repl.push_back(f_one());
        }
    } else if (2 * h > m + 2) {
        // Complement: the live fraction exceeds one half.
        repl.insert(repl.end(), m + 2 - h, f_one());
        repl.push_back(make_recip_pair(m, !flipped));
    } else {
        // Descend one continued-fraction level.
        repl.insert(repl.end(), m + 2 - 2 * h, f_one());
        repl.push_back(make_recip_pair(h - 2, !flipped));
        repl.push_back(f_two_v());
        if (flipped) {
            repl.push_back(f_diamond());
            repl.push_back(f_one());
        }
    }
    return RewriteStep{splice(w, pos, q - pos + 1, repl), 5, pos};
}

std::optional<RewriteStep> match_r6(const Word &w) {
    for (size_t p = 0; p < w.size(); ++p) {
        if (!is_pair(w[p]))
            continue;
        const Factor &f = w[p];
        if (!f.left.empty() && is_pair(f.left.front())) {
            Word entry = f.left.front().right;
            entry.insert(entry.end(), f.left.begin() + 1, f.left.end());
            return RewriteStep{splice(w, p, 1, {f_pair(std::move(entry), f.right)}), 6, p};
        }
        if (!f.right.empty() && is_pair(f.right.front())) {
            Word entry = f.right.front().right;
            entry.insert(entry.end(), f.right.begin() + 1, f.right.end());
            return RewriteStep{splice(w, p, 1, {f_pair(f.left, std::move(entry))}), 6, p};
        }
    }
    return std::nullopt;
}

std::optional<RewriteStep> match_r7(const Word &w) {
    for (size_t p = 0; p + 1 < w.size(); ++p) {
        if (!is_one(w[p]) || !is_pair(w[p + 1]))
            continue;
        const Word &u = w[p + 1].left;
        const Word &v = w[p + 1].right;
        Word repl{w[p + 1]};
        if (is_integer_word(u) && is_integer_word(v)) {
            repl = concat(concat(repl, u), v);
        } else if (all_ones(u) && all_ones(v)) {
            repl.push_back(f_diamond());
            repl = concat(repl, u);
            repl.push_back(f_diamond());
            repl = concat(repl, v);
        } else {
            Word u1 = u;
            u1.push_back(f_one());
            Word v1 = v;
            v1.push_back(f_one());
            repl.push_back(f_pair(std::move(u1), u));
            repl.push_back(f_pair(std::move(v1), v));
        }
        return RewriteStep{splice(w, p, 2, repl), 7, p};
    }
    return std::nullopt;
}

std::optional<RewriteStep> match_r8(const Word &w) {
    // (1, 0) pairs are the diamond.
    for (size_t p = 0; p < w.size(); ++p) {
        if (is_pair(w[p]) && w[p].right.empty() && w[p].left.size() == 1 &&
            is_one(w[p].left[0]))
            return RewriteStep{splice(w, p, 1, {f_diamond()}), 8, p};
    }
    return std::nullopt;
}

std::optional<RewriteStep> match_r9(const Word &w) {
    for (size_t p = 0; p < w.size(); ++p) {
        if (!is_pair(w[p]))
            continue;
        const Factor &f = w[p];
        if (!f.left.empty() && !f.right.empty() && is_dia(f.left.front()) &&
            is_dia(f.right.front())) {
            Word l(f.left.begin() + 1, f.left.end());
            Word r(f.right.begin() + 1, f.right.end());
            return RewriteStep{splice(w, p, 1, {f_pair(std::move(l), std::move(r))}), 9, p};
        }
    }
    return std::nullopt;
}

// Falls back to reducing inside pair entries, left entry first.
std::optional<RewriteStep> match_inside(const Word &w) {
    for (size_t p = 0; p < w.size(); ++p) {
        if (!is_pair(w[p]))
            continue;
        if (auto r = rewrite_step(w[p].left)) {
            return RewriteStep{splice(w, p, 1, {f_pair(r->result, w[p].right)}), r->rule, p};
        }
        if (auto r = rewrite_step(w[p].right)) {
            return RewriteStep{splice(w, p, 1, {f_pair(w[p].left, r->result)}), r->rule, p};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<RewriteStep> rewrite_step(const Word &w) {
    if (auto r = match_r1(w))
        return r;
    if (auto r = match_r2(w))
        return r;
    if (auto r = match_r3(w))
        return r;
    if (auto r = match_r4(w))
        return r;
    if (auto r = match_r5(w))
        return r;
    if (auto r = match_r6(w))
        return r;
    if (auto r = match_r7(w))
        return r;
    if (auto r = match_r8(w))
        return r;
    if (auto r = match_r9(w))
        return r;
    return match_inside(w);
}

EvalResult evaluate_traced(const Word &w, size_t max_steps, bool keep_trace) {
    EvalResult res;
    res.normal_form = w;
    while (true) {
        auto step = rewrite_step(res.normal_form);
        if (!step)
            return res;
        if (res.steps >= max_steps) {
            size_t n = res.trace.size();
            std::vector<std::string> tail(res.trace.begin() + (n > 10 ? n - 10 : 0),
                                          res.trace.end());
            throw nonterminating_error("evaluate: step budget exhausted", std::move(tail));
        }
        res.normal_form = std::move(step->result);
        ++res.steps;
        if (keep_trace) {
            std::ostringstream line;
            line << "step " << res.steps << ": rule R" << step->rule << " at pos " << step->pos
                 << ": " << word_str(res.normal_form);
            res.trace.push_back(line.str());
        }
    }
}

Word evaluate(const Word &w, size_t max_steps) {
    return evaluate_traced(w, max_steps, false).normal_form;
}

// ---------------------------------------------------------------------------
// Numeric reading of normal forms

namespace {

struct Slot {
    bool lead = false, trail = false;
    Int ones = 0;
};

std::optional<Slot> parse_slot(const Word &w) {
    Slot s;
    size_t i = 0;
    if (i < w.size() && is_dia(w[i])) {
        s.lead = true;
        ++i;
    }
    while (i < w.size() && is_one(w[i])) {
        ++s.ones;
        ++i;
    }
    if (i < w.size() && is_dia(w[i])) {
        s.trail = true;
        ++i;
    }
    if (i != w.size())
        return std::nullopt;
    return s;
}

} // namespace

std::optional<NatRep> to_natrep(const Word &w) {
    for (const Factor &f : w)
        if (is_pair(f))
            return std::nullopt;
    // Split at the top-level 2_V factors: slots S_k .. S_0.
    std::vector<Word> raw;
    raw.emplace_back();
    for (const Factor &f : w) {
        if (is_twov(f))
            raw.emplace_back();
        else
            raw.back().push_back(f);
    }
    size_t k = raw.size() - 1;
    if (k == 0) {
        // Pure {1, D} word: a single integer.
        Int v = 0;
        int dir = 1;
        for (size_t i = w.size(); i-- > 0;) {
            if (is_one(w[i]))
                v += dir;
            else
                dir = -dir;
        }
        return NatRep({v});
    }
    std::vector<Slot> slots(k + 1); // slots[i] = S_i
    for (size_t j = 0; j < raw.size(); ++j) {
        auto s = parse_slot(raw[j]);
        if (!s)
            return std::nullopt;
        slots[k - j] = *s;
    }
    std::vector<Int> digits(k + 1);
    for (size_t i = k; i >= 1; --i) {
        const Slot &si = slots[i];
        if (si.trail) {
            digits[i] = -si.ones;
        } else if (i == k && si.lead) {
            digits[i] = si.ones;
        } else if (slots[i - 1].lead) {
            digits[i] = si.ones;
        } else {
            digits[i] = -si.ones;
            slots[i - 1].ones += 1;
        }
    }
    digits[0] = slots[0].trail ? Int(-slots[0].ones) : slots[0].ones;
    NatRep out;
    out.entries.assign(digits.begin(), digits.end());
    if (!is_valid(out))
        return std::nullopt;
    return out;
}

std::optional<Ratio> valuate(const Word &w, size_t max_steps) {
    Word nf = evaluate(w, max_steps);
    for (int depth = 0; depth < 64; ++depth) {
        if (nf.empty() || !is_pair(nf.front()))
            break;
        // (a, b) t keeps only the last number reached: b t.
        Word rest(nf.begin() + 1, nf.end());
        nf = evaluate(concat(nf.front().right, rest), max_steps);
    }
    for (const Factor &f : nf)
        if (is_pair(f))
            return std::nullopt;
    auto s = to_natrep(nf);
    if (!s)
        return std::nullopt;
    return decode(*s);
}

// ---------------------------------------------------------------------------
// Text grammar

std::string word_str(const Word &w) {
    std::string out;
    for (const Factor &f : w) {
        switch (f.kind) {
        case K::One:
            out += '1';
            break;
        case K::Diamond:
            out += 'D';
            break;
        case K::TwoV:
            out += 'V';
            break;
        case K::Pair:
            out += '(';
            out += word_str(f.left);
            out += ',';
            out += word_str(f.right);
            out += ')';
            break;
        }
    }
    return out;
}

namespace {

Word parse_word_at(const std::string &text, size_t &i) {
    Word w;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (c == '1') {
            w.push_back(f_one());
            ++i;
        } else if (c == 'D') {
            w.push_back(f_diamond());
            ++i;
        } else if (c == 'V') {
            w.push_back(f_two_v());
            ++i;
        } else if (c == '(') {
            ++i;
            Word l = parse_word_at(text, i);
            if (i >= text.size() || text[i] != ',')
                throw domain_error("word: expected ',' in pair");
            ++i;
            Word r = parse_word_at(text, i);
            if (i >= text.size() || text[i] != ')')
                throw domain_error("word: expected ')'");
            ++i;
            w.push_back(f_pair(std::move(l), std::move(r)));
        } else {
            break;
        }
    }
    return w;
}

} // namespace

Word parse_word(const std::string &text) {
    size_t i = 0;
    Word w = parse_word_at(text, i);
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
        ++i;
    if (i != text.size())
        throw domain_error("word: cannot parse '" + text + "'");
    return w;
}

} // namespace natrep
