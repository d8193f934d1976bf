#pragma once

#include "natrep/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace natrep {

// Canonical hereditarily finite set. A value is a handle into a process-wide
// interning table: extensionally equal sets always share one node, so
// equality is an id comparison.
class HFSet {
  public:
    HFSet(); // the empty set

    static HFSet empty();
    static HFSet from_elements(std::vector<HFSet> elems);

    friend bool operator==(HFSet a, HFSet b) { return a.id_ == b.id_; }
    friend bool operator!=(HFSet a, HFSet b) { return a.id_ != b.id_; }

    std::uint32_t id() const { return id_; }
    std::uint32_t rank() const;
    std::vector<HFSet> elements() const; // canonical order
    bool is_empty() const { return id_ == 0; }

    // Total structural order: by rank, then lexicographically over the
    // canonically ordered element lists. Independent of interning order.
    static int cmp(HFSet a, HFSet b);

    std::string str() const; // canonical serialization: {}, {a,b,...}

  private:
    explicit HFSet(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
    friend class HFSetTable;
};

struct HFLess {
    bool operator()(HFSet a, HFSet b) const { return HFSet::cmp(a, b) < 0; }
};

HFSet zermelo(unsigned long n);
HFSet diamond();
HFSet two_v();
HFSet kuratowski(HFSet a, HFSet b);
HFSet integer_set(long z);

// ab = a({} -> b): every occurrence of the empty set in a replaced by b.
HFSet substitute(HFSet a, HFSet b);

// All sets reachable by iterated membership from x, excluding x itself,
// in canonical order.
std::vector<HFSet> transitive_closure(HFSet x);
bool is_constituent(HFSet c, HFSet x);

// One edge per membership pair within {x} plus its transitive closure.
std::vector<std::pair<HFSet, HFSet>> structure_edges(HFSet x);

std::string to_dot(HFSet x);

// Guard against runaway constructions: number of distinct interned sets.
std::size_t hf_node_budget();
void set_hf_node_budget(std::size_t budget);
std::size_t hf_interned_count();

} // namespace natrep
