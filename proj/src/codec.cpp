#include "natrep/codec.hpp"

#include <sstream>

namespace natrep {

std::string NatRep::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i == 1)
            out << "; ";
        else if (i > 1)
            out << ", ";
        out << entries[i].get_str();
    }
    out << "]";
    return out.str();
}

NatRep NatRep::parse(const std::string &text) {
    auto bad = [&]() -> Int { throw invalid_sequence("NatRep: cannot parse '" + text + "'"); };
    size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= n || text[i] != c)
            bad();
        ++i;
    };
    auto integer = [&]() -> Int {
        skip();
        size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+'))
            ++i;
        size_t digits = i;
        while (i < n && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == digits)
            bad();
        return Int(text.substr(start, i - start));
    };
    expect('[');
    NatRep s;
    s.entries.push_back(integer());
    skip();
    if (i < n && text[i] == ';') {
        ++i;
        s.entries.push_back(integer());
        skip();
        while (i < n && text[i] == ',') {
            ++i;
            s.entries.push_back(integer());
            skip();
        }
    }
    expect(']');
    skip();
    if (i != n)
        bad();
    return s;
}

bool is_valid(const std::vector<Int> &entries) {
    if (entries.empty())
        return false;
    for (size_t i = 1; i + 1 < entries.size(); ++i)
        if (entries[i] == 0)
            return false;
    return true;
}

Int height(const NatRep &s) {
    Int h = s.entries.size();
    for (const Int &e : s.entries)
        h += abs(e);
    return h;
}

namespace {

void check_fraction_args(const Int &n, const Int &d) {
    if (!(0 < n && n < d))
        throw domain_error("codec: need 0 < n < d");
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1)
        throw domain_error("codec: n/d not in lowest terms");
}

} // namespace

std::vector<Int> encode_nonneg(const Int &n, const Int &d) {
    check_fraction_args(n, d);
    std::vector<Int> out;
    Int ni = n, di = d;
    while (true) {
        if (ni == 1) {
            out.push_back(di - 2);
            return out;
        }
        Int mi = di / ni - 1;
        out.push_back(mi);
        Int next_n = (2 + mi) * ni - di;
        di = ni;
        ni = next_n;
    }
}

Ratio eval_nonneg(const std::vector<Int> &ms) {
    Ratio acc(0);
    for (auto it = ms.rbegin(); it != ms.rend(); ++it)
        acc = Ratio(1) / (Ratio(2 + *it) - acc);
    return acc;
}

std::vector<Int> encode_signed(const Int &n, const Int &d) {
    check_fraction_args(n, d);
    std::vector<Int> out;
    int sign = 1;
    Int ni = n, di = d;
    while (true) {
        if (ni == 1) {
            out.push_back(sign * (di - 2));
            return out;
        }
        Int si = sign * (di / ni - 1);
        if (si == 0) {
            sign = -sign;
            ni = di - ni;
            continue;
        }
        out.push_back(si);
        Int next_n = (2 + abs(si)) * ni - di;
        di = ni;
        ni = next_n;
    }
}

Ratio eval_signed(const std::vector<Int> &ss) {
    for (size_t i = 0; i + 1 < ss.size(); ++i)
        if (ss[i] == 0)
            throw invalid_sequence("eval_signed: interior zero");
    // Track the sign-flip parity instead of materializing the negated tails.
    std::vector<bool> flips(ss.size());
    bool f = false;
    for (size_t i = 0; i < ss.size(); ++i) {
        if ((f ? -ss[i] : ss[i]) < 0)
            f = !f;
        flips[i] = f;
    }
    Ratio acc(0);
    for (size_t idx = ss.size(); idx-- > 0;) {
        Int head = flips[idx] ? Int(-ss[idx]) : ss[idx];
        acc = Ratio(1) / (Ratio(2 + head) - acc);
        if (idx > 0 && flips[idx] != flips[idx - 1])
            acc = Ratio(1) - acc;
    }
    if (!ss.empty() && flips[0])
        acc = Ratio(1) - acc;
    return acc;
}

NatRep encode(const Ratio &q) {
    std::vector<Int> out;
    int sign = 1;
    Ratio x = q;
    while (true) {
        Int fl = x.floor();
        Ratio frac = x - Ratio(fl);
        if (frac == Ratio(0)) {
            out.push_back(sign * fl);
            return NatRep(std::move(out));
        }
        out.push_back(sign * (fl + 1));
        if (frac >= Ratio(1, 2)) {
            x = (Ratio(1) / (Ratio(1) - frac)) - Ratio(2);
        } else {
            x = (Ratio(1) / frac) - Ratio(2);
            sign = -sign;
        }
    }
}

Ratio decode(const NatRep &s) {
    if (s.entries.empty())
        throw invalid_sequence("decode: empty sequence");
    if (!is_valid(s))
        throw invalid_sequence("decode: interior zero in " + s.str());
    // f(s0..sk), unrolled from the right with sign-flip parity.
    std::vector<bool> flips(s.entries.size());
    bool f = false;
    flips[0] = false;
    for (size_t i = 1; i < s.entries.size(); ++i) {
        if ((f ? -s.entries[i] : s.entries[i]) < 0)
            f = !f;
        flips[i] = f;
    }
    Ratio acc(flips.back() ? Int(-s.entries.back()) : s.entries.back());
    for (size_t idx = s.entries.size() - 1; idx-- > 0;) {
        Ratio term = Ratio(1) / (Ratio(2) + acc);
        bool flipped_here = flips[idx + 1];
        Int head = flips[idx] ? Int(-s.entries[idx]) : s.entries[idx];
        // s_{idx} - 1/(2+f(tail)) when tail head >= 0 in the current parity,
        // s_{idx} - 1 + 1/(2+f(-tail)) otherwise.
        if (flipped_here != flips[idx])
            acc = Ratio(head) - Ratio(1) + term;
        else
            acc = Ratio(head) - term;
    }
    return acc;
}

std::vector<Int> cf_encode(const Ratio &q) {
    std::vector<Int> out;
    Ratio x = q;
    while (true) {
        Int a = x.floor();
        out.push_back(a);
        Ratio frac = x - Ratio(a);
        if (frac == Ratio(0))
            break;
        x = Ratio(1) / frac;
    }
    // Greedy floor expansion already ends with a term >= 2; normalize anyway.
    if (out.size() > 1 && out.back() == 1) {
        out.pop_back();
        out.back() += 1;
    }
    return out;
}

Ratio cf_eval(const std::vector<Int> &as) {
    if (as.empty())
        throw invalid_sequence("cf_eval: empty sequence");
    Ratio acc(as.back());
    for (size_t idx = as.size() - 1; idx-- > 0;)
        acc = Ratio(as[idx]) + Ratio(1) / acc;
    return acc;
}

Order compare(const NatRep &a, const NatRep &b) {
    if (!is_valid(a) || !is_valid(b))
        throw invalid_sequence("compare: invalid sequence");
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? Order::less : Order::greater;
    }
    if (a.size() == b.size())
        return Order::equal;
    // One is a proper prefix of the other, ending at index n-1.
    const NatRep &prefix = a.size() < b.size() ? a : b;
    bool a_is_prefix = a.size() < b.size();
    const Int &last = prefix.entries.back();
    size_t last_idx = prefix.size() - 1;
    if (last == 0 && last_idx > 0)
        throw invalid_sequence("compare: prefix ends in interior zero of the longer sequence");
    bool prefix_greater = last > 0 || last_idx == 0;
    if (prefix_greater)
        return a_is_prefix ? Order::greater : Order::less;
    return a_is_prefix ? Order::less : Order::greater;
}

} // namespace natrep
