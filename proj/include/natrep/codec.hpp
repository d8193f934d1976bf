#pragma once

#include "natrep/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace natrep {

// A natural representation [s0; s1..sk]: nonempty, interior entries nonzero.
struct NatRep {
    std::vector<Int> entries;

    NatRep() = default;
    explicit NatRep(std::vector<Int> e) : entries(std::move(e)) {}
    NatRep(std::initializer_list<long> e) {
        for (long v : e)
            entries.emplace_back(v);
    }

    size_t size() const { return entries.size(); }
    const Int &operator[](size_t i) const { return entries[i]; }

    friend bool operator==(const NatRep &a, const NatRep &b) { return a.entries == b.entries; }
    friend bool operator!=(const NatRep &a, const NatRep &b) { return !(a == b); }

    // Text form: "[s0; s1, s2]" / "[s0]".
    std::string str() const;
    static NatRep parse(const std::string &text);
};

enum class Order { less, equal, greater };

bool is_valid(const std::vector<Int> &entries);
inline bool is_valid(const NatRep &s) { return is_valid(s.entries); }
Int height(const NatRep &s);

// Signed continued-fraction codec (the natural representation).
NatRep encode(const Ratio &q);
Ratio decode(const NatRep &s);

// The non-negative variant restricted to 0 < n < d.
std::vector<Int> encode_nonneg(const Int &n, const Int &d);
Ratio eval_nonneg(const std::vector<Int> &ms);

// The signed fractional-part variant restricted to 0 < n < d.
std::vector<Int> encode_signed(const Int &n, const Int &d);
Ratio eval_signed(const std::vector<Int> &ss);

// Standard continued fraction, canonical (final term >= 2 unless length 1).
std::vector<Int> cf_encode(const Ratio &q);
Ratio cf_eval(const std::vector<Int> &as);

// Total order on valid sequences, isomorphic to the decoded rationals.
Order compare(const NatRep &a, const NatRep &b);

} // namespace natrep
