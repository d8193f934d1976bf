#pragma once

#include "natrep/codec.hpp"
#include "natrep/words.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace natrep {

enum class EdgeLabel { Plain, DiamondMarked, Branch };

std::string edge_label_str(EdgeLabel e); // "1", "D", "DVD"

struct Child {
    NatRep seq;
    EdgeLabel label;
};

// Children in increasing value order; the root has three, everything else two.
std::vector<Child> children(const NatRep &s);
std::optional<NatRep> parent(const NatRep &s);

// Edge list from the root [0] to s; length = height(s) - 1.
std::vector<EdgeLabel> route(const NatRep &s);

// The expression built by prepending each traversed edge's symbols:
// Plain adds 1, DiamondMarked adds the diamond then 1, Branch adds D 2_V D.
Word route_word(const NatRep &s);

Int level_size(unsigned h);

// All valid sequences of height h in increasing order. level() shards the
// child expansion across threads and merges in index order; level_serial()
// is the reference implementation.
std::vector<NatRep> level(unsigned h);
std::vector<NatRep> level_serial(unsigned h);

NatRep node_at(unsigned h, const Int &index);
std::pair<unsigned, Int> index_of(const NatRep &s);

NatRep negate(const NatRep &s);

enum class Anchor { MinusTwo, MinusOne, MinusHalf, Zero, One };

std::string anchor_str(Anchor a);
std::optional<Anchor> parse_anchor(const std::string &text);

// The anchored involutions: x -> -1-x around -1/2, x -> 1/x around +/-1,
// x -> -x/(1+x) around 0 and -2.
Ratio symmetry_map(Anchor a, const Ratio &x);

struct SymmetryPair {
    size_t i, j;
    Ratio value_i, value_j;
};

struct SymmetryReport {
    Anchor anchor;
    unsigned height = 0;
    long center_times_2 = 0; // the mirror column, doubled (it sits between indices)
    std::vector<SymmetryPair> pairs;
    std::optional<std::pair<size_t, size_t>> span; // maximal contiguous index range
};

SymmetryReport check_symmetry(Anchor a, unsigned h);
std::string symmetry_report_json(const SymmetryReport &r);

struct D3Report {
    bool ok = false;
    size_t samples_checked = 0;
    std::vector<std::string> composition_table; // six lines "a*b = c"
};

// Verifies f^2 = g^2 = (fg)^3 = id and fgf = gfg = x -> -x/(1+x) pointwise.
D3Report d3_check(const std::vector<Ratio> &samples);

} // namespace natrep
