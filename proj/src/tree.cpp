#include "natrep/tree.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace natrep {

namespace {

const NatRep kRoot{0};

NatRep with_last(const NatRep &s, const Int &v) {
    NatRep r = s;
    r.entries.back() = v;
    return r;
}

NatRep appended(const NatRep &s, const Int &v) {
    NatRep r = s;
    r.entries.push_back(v);
    return r;
}

} // namespace

std::string edge_label_str(EdgeLabel e) {
    switch (e) {
    case EdgeLabel::Plain:
        return "1";
    case EdgeLabel::DiamondMarked:
        return "D";
    case EdgeLabel::Branch:
        return "DVD";
    }
    return "?";
}

std::vector<Child> children(const NatRep &s) {
    if (!is_valid(s))
        throw invalid_sequence("children: invalid sequence");
    std::vector<Child> out;
    if (s == kRoot) {
        out.push_back({NatRep{-1}, EdgeLabel::DiamondMarked});
        out.push_back({NatRep{0, 0}, EdgeLabel::Branch});
        out.push_back({NatRep{1}, EdgeLabel::Plain});
        return out;
    }
    const Int &z = s.entries.back();
    if (z != 0) {
        Int forward = z > 0 ? Int(z + 1) : Int(z - 1);
        out.push_back({with_last(s, forward), EdgeLabel::Plain});
        out.push_back({appended(s, 0), EdgeLabel::Branch});
    } else {
        out.push_back({with_last(s, 1), EdgeLabel::DiamondMarked});
        out.push_back({with_last(s, -1), EdgeLabel::Plain});
    }
    std::sort(out.begin(), out.end(), [](const Child &a, const Child &b) {
        return compare(a.seq, b.seq) == Order::less;
    });
    return out;
}

std::optional<NatRep> parent(const NatRep &s) {
    if (!is_valid(s))
        throw invalid_sequence("parent: invalid sequence");
    if (s == kRoot)
        return std::nullopt;
    const Int &z = s.entries.back();
    if (s.size() == 1) {
        if (z > 1)
            return with_last(s, z - 1);
        if (z < -1)
            return with_last(s, z + 1);
        return kRoot; // [1] and [-1] hang off the root
    }
    if (z == 0) {
        NatRep r = s;
        r.entries.pop_back();
        return r;
    }
    if (z > 1)
        return with_last(s, z - 1);
    if (z < -1)
        return with_last(s, z + 1);
    return with_last(s, 0);
}

namespace {

EdgeLabel edge_into(const NatRep &par, const NatRep &child) {
    if (par == kRoot) {
        if (child == NatRep{1})
            return EdgeLabel::Plain;
        if (child == NatRep{-1})
            return EdgeLabel::DiamondMarked;
        return EdgeLabel::Branch;
    }
    if (child.size() > par.size())
        return EdgeLabel::Branch;
    if (par.entries.back() == 0)
        return child.entries.back() == 1 ? EdgeLabel::DiamondMarked : EdgeLabel::Plain;
    return EdgeLabel::Plain;
}

} // namespace

std::vector<EdgeLabel> route(const NatRep &s) {
    std::vector<EdgeLabel> edges;
    NatRep cur = s;
    while (cur != kRoot) {
        NatRep par = *parent(cur);
        edges.push_back(edge_into(par, cur));
        cur = std::move(par);
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

Word route_word(const NatRep &s) {
    Word w;
    for (EdgeLabel e : route(s)) {
        Word prefix;
        switch (e) {
        case EdgeLabel::Plain:
            prefix = {f_one()};
            break;
        case EdgeLabel::DiamondMarked:
            prefix = {f_one(), f_diamond()};
            break;
        case EdgeLabel::Branch:
            prefix = {f_diamond(), f_two_v(), f_diamond()};
            break;
        }
        w = concat(prefix, w);
    }
    return w;
}

Int level_size(unsigned h) {
    if (h == 0)
        throw range_error("level_size: h >= 1");
    if (h == 1)
        return 1;
    Int r = 3;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), h - 2);
    return r;
}

namespace {

std::array<NatRep, 2> sorted_children(const NatRep &s) {
    auto cs = children(s);
    return {cs[0].seq, cs[1].seq};
}

} // namespace

std::vector<NatRep> level_serial(unsigned h) {
    if (h == 0)
        throw range_error("level: h >= 1");
    std::vector<NatRep> cur{kRoot};
    if (h == 1)
        return cur;
    cur.clear();
    for (const Child &c : children(kRoot))
        cur.push_back(c.seq);
    for (unsigned hh = 3; hh <= h; ++hh) {
        std::vector<NatRep> next(cur.size() * 2);
        for (size_t i = 0; i < cur.size(); ++i) {
            auto cs = sorted_children(cur[i]);
            next[2 * i] = std::move(cs[0]);
            next[2 * i + 1] = std::move(cs[1]);
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<NatRep> level(unsigned h) {
    constexpr unsigned kShardHeight = 8;
    if (h <= kShardHeight)
        return level_serial(h);
    // Shard the expansion: each task grows one height-8 subtree serially and
    // writes its block, so the merged list stays in index order.
    std::vector<NatRep> roots = level_serial(kShardHeight);
    size_t width = size_t(1) << (h - kShardHeight);
    std::vector<NatRep> out(roots.size() * width);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long i = 0; i < static_cast<long>(roots.size()); ++i) {
        std::vector<NatRep> cur{roots[i]};
        for (unsigned hh = kShardHeight + 1; hh <= h; ++hh) {
            std::vector<NatRep> next(cur.size() * 2);
            for (size_t j = 0; j < cur.size(); ++j) {
                auto cs = sorted_children(cur[j]);
                next[2 * j] = std::move(cs[0]);
                next[2 * j + 1] = std::move(cs[1]);
            }
            cur = std::move(next);
        }
        std::move(cur.begin(), cur.end(), out.begin() + i * width);
    }
    return out;
}

NatRep node_at(unsigned h, const Int &index) {
    if (h == 0 || index < 0 || index >= level_size(h))
        throw range_error("node_at: index out of range");
    if (h == 1)
        return kRoot;
    // Top 2 bits pick one of the root's three subtrees, the rest descend.
    Int sub = index >> (h - 2);
    Int rest = index - (sub << (h - 2));
    NatRep node = children(kRoot)[sub.get_ui()].seq;
    for (unsigned bit = h - 2; bit-- > 0;) {
        bool right = mpz_tstbit(rest.get_mpz_t(), bit);
        node = sorted_children(node)[right ? 1 : 0];
    }
    return node;
}

std::pair<unsigned, Int> index_of(const NatRep &s) {
    Int h = height(s);
    if (!h.fits_uint_p())
        throw range_error("index_of: height too large");
    unsigned hu = static_cast<unsigned>(h.get_ui());
    if (s == kRoot)
        return {1, 0};
    // Walk up to a level-2 node, recording which child we were at each step.
    std::vector<bool> bits;
    NatRep cur = s;
    NatRep par = *parent(cur);
    while (par != kRoot) {
        bits.push_back(sorted_children(par)[1] == cur);
        cur = std::move(par);
        par = *parent(cur);
    }
    Int sub = cur == NatRep{-1} ? 0 : cur == NatRep{0, 0} ? 1 : 2;
    Int idx = sub << (hu - 2);
    // bits were collected bottom-up; reassemble top-down.
    Int acc = 0;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        acc <<= 1;
        if (*it)
            acc += 1;
    }
    return {hu, idx + acc};
}

NatRep negate(const NatRep &s) {
    NatRep r = s;
    for (Int &e : r.entries)
        e = -e;
    return r;
}

std::string anchor_str(Anchor a) {
    switch (a) {
    case Anchor::MinusTwo:
        return "-2";
    case Anchor::MinusOne:
        return "-1";
    case Anchor::MinusHalf:
        return "-1/2";
    case Anchor::Zero:
        return "0";
    case Anchor::One:
        return "1";
    }
    return "?";
}

std::optional<Anchor> parse_anchor(const std::string &text) {
    if (text == "-2")
        return Anchor::MinusTwo;
    if (text == "-1")
        return Anchor::MinusOne;
    if (text == "-1/2")
        return Anchor::MinusHalf;
    if (text == "0")
        return Anchor::Zero;
    if (text == "1")
        return Anchor::One;
    return std::nullopt;
}

Ratio symmetry_map(Anchor a, const Ratio &x) {
    switch (a) {
    case Anchor::MinusHalf:
        return Ratio(-1) - x;
    case Anchor::MinusOne:
    case Anchor::One:
        if (x == Ratio(0))
            throw pole_error("symmetry_map: reciprocal of zero");
        return Ratio(1) / x;
    case Anchor::Zero:
    case Anchor::MinusTwo:
        if (x == Ratio(-1))
            throw pole_error("symmetry_map: pole at -1");
        return -x / (Ratio(1) + x);
    }
    throw domain_error("symmetry_map: unknown anchor");
}

namespace {

Ratio anchor_value(Anchor a) {
    switch (a) {
    case Anchor::MinusTwo:
        return Ratio(-2);
    case Anchor::MinusOne:
        return Ratio(-1);
    case Anchor::MinusHalf:
        return Ratio(-1, 2);
    case Anchor::Zero:
        return Ratio(0);
    case Anchor::One:
        return Ratio(1);
    }
    throw domain_error("anchor_value");
}

} // namespace

SymmetryReport check_symmetry(Anchor a, unsigned h) {
    if (h < 2)
        throw range_error("check_symmetry: h >= 2");
    SymmetryReport rep;
    rep.anchor = a;
    rep.height = h;
    auto seqs = level(h);
    std::vector<Ratio> values(seqs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long i = 0; i < static_cast<long>(seqs.size()); ++i)
        values[i] = decode(seqs[i]);
    Ratio alpha = anchor_value(a);
    size_t idx = std::lower_bound(values.begin(), values.end(), alpha) - values.begin();
    rep.center_times_2 = 2 * static_cast<long>(idx) - 1;
    long w = static_cast<long>(values.size());
    for (long i = 0; i < static_cast<long>(idx); ++i) {
        long j = rep.center_times_2 - i;
        if (j < 0 || j >= w || j <= i)
            continue;
        bool match = false;
        try {
            match = symmetry_map(a, values[i]) == values[j];
        } catch (const pole_error &) {
            match = false;
        }
        if (match)
            rep.pairs.push_back({static_cast<size_t>(i), static_cast<size_t>(j), values[i],
                                 values[static_cast<size_t>(j)]});
    }
    // Maximal contiguous run of verified pairs around the center.
    size_t dmax = 0;
    for (size_t d = 1;; ++d) {
        long i = static_cast<long>(idx) - static_cast<long>(d);
        long j = static_cast<long>(idx) + static_cast<long>(d) - 1;
        if (i < 0 || j >= w)
            break;
        bool match = false;
        try {
            match = symmetry_map(a, values[i]) == values[j];
        } catch (const pole_error &) {
            match = false;
        }
        if (!match)
            break;
        dmax = d;
    }
    if (dmax > 0)
        rep.span = std::make_pair(idx - dmax, idx - 1 + dmax);
    return rep;
}

std::string symmetry_report_json(const SymmetryReport &r) {
    std::ostringstream out;
    out << "{\"anchor\": \"" << anchor_str(r.anchor) << "\", \"height\": " << r.height
        << ", \"center_times_2\": " << r.center_times_2 << ", \"pairs\": [";
    for (size_t k = 0; k < r.pairs.size(); ++k) {
        const auto &p = r.pairs[k];
        if (k)
            out << ", ";
        out << "{\"i\": " << p.i << ", \"j\": " << p.j << ", \"value_i\": \"" << p.value_i.str()
            << "\", \"value_j\": \"" << p.value_j.str() << "\"}";
    }
    out << "], \"span\": ";
    if (r.span)
        out << "[" << r.span->first << ", " << r.span->second << "]";
    else
        out << "null";
    out << "}";
    return out.str();
}

namespace {

Ratio apply_name(const std::string &name, const Ratio &x) {
    Ratio v = x;
    // Composite names apply right to left.
    for (auto it = name.rbegin(); it != name.rend(); ++it) {
        if (*it == 'f')
            v = Ratio(-1) - v;
        else
            v = Ratio(1) / v;
    }
    return v;
}

} // namespace

D3Report d3_check(const std::vector<Ratio> &samples) {
    D3Report rep;
    for (const Ratio &x : samples) {
        // Every composite's intermediate values stay off the poles iff the
        // sample itself avoids 0 and -1.
        if (x == Ratio(0) || x == Ratio(-1))
            throw pole_error("d3_check: sample hits a pole of the composites");
    }
    auto equal_on_samples = [&](const std::string &lhs, const std::string &rhs) {
        for (const Ratio &x : samples)
            if (apply_name(lhs, x) != apply_name(rhs, x))
                return false;
        return true;
    };
    rep.ok = equal_on_samples("ff", "") && equal_on_samples("gg", "") &&
             equal_on_samples("fgfgfg", "") && equal_on_samples("fgf", "gfg");
    // fgf must equal the third reflection x -> -x/(1+x).
    for (const Ratio &x : samples)
        if (apply_name("fgf", x) != symmetry_map(Anchor::Zero, x))
            rep.ok = false;
    rep.samples_checked = samples.size();

    const char *elems[6] = {"", "f", "g", "fg", "gf", "fgf"};
    auto canon = [&](const std::string &word) -> std::string {
        for (const char *e : elems) {
            if (equal_on_samples(word, e))
                return e[0] ? e : "id";
        }
        return "?";
    };
    for (const char *a : elems)
        for (const char *b : elems) {
            std::string prod = std::string(a) + b;
            std::ostringstream line;
            line << (a[0] ? a : "id") << " * " << (b[0] ? b : "id") << " = " << canon(prod);
            rep.composition_table.push_back(line.str());
        }
    return rep;
}

} // namespace natrep
