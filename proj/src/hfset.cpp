#include "natrep/hfset.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace natrep {

namespace {

struct Node {
    std::vector<HFSet> elems; // canonical order, deduplicated
    std::uint32_t rank = 0;
};

struct ElemsHash {
    std::size_t operator()(const std::vector<HFSet> &v) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (HFSet s : v)
            h = h * 1099511628211ull ^ s.id();
        return h;
    }
};
struct ElemsEq {
    bool operator()(const std::vector<HFSet> &a, const std::vector<HFSet> &b) const {
        return a == b;
    }
};

} // namespace

class HFSetTable {
  public:
    static HFSetTable &instance() {
        static HFSetTable table;
        return table;
    }

    HFSet intern(std::vector<HFSet> elems) {
        std::sort(elems.begin(), elems.end(), HFLess{});
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        std::lock_guard<std::mutex> lock(mu_);
        auto it = index_.find(elems);
        if (it != index_.end())
            return HFSet(it->second);
        if (nodes_.size() >= budget_.load())
            throw resource_error("hfset: node budget exceeded");
        Node node;
        node.rank = 0;
        for (HFSet e : elems)
            node.rank = std::max(node.rank, nodes_[e.id()].rank + 1);
        node.elems = std::move(elems);
        std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(std::move(node));
        index_.emplace(nodes_.back().elems, id);
        return HFSet(id);
    }

    std::uint32_t rank(std::uint32_t id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return nodes_[id].rank;
    }
    std::vector<HFSet> elements(std::uint32_t id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return nodes_[id].elems;
    }
    std::size_t count() const {
        std::lock_guard<std::mutex> lock(mu_);
        return nodes_.size();
    }
    std::size_t budget() const { return budget_.load(); }
    void set_budget(std::size_t b) { budget_.store(b); }

  private:
    HFSetTable() {
        nodes_.push_back(Node{}); // id 0: {}
        index_.emplace(std::vector<HFSet>{}, 0u);
    }
    mutable std::mutex mu_;
    std::deque<Node> nodes_;
    std::unordered_map<std::vector<HFSet>, std::uint32_t, ElemsHash, ElemsEq> index_;
    std::atomic<std::size_t> budget_{1000000};
};

HFSet::HFSet() : id_(0) {}

HFSet HFSet::empty() { return HFSet(0); }

HFSet HFSet::from_elements(std::vector<HFSet> elems) {
    return HFSetTable::instance().intern(std::move(elems));
}

std::uint32_t HFSet::rank() const { return HFSetTable::instance().rank(id_); }

std::vector<HFSet> HFSet::elements() const { return HFSetTable::instance().elements(id_); }

int HFSet::cmp(HFSet a, HFSet b) {
    if (a == b)
        return 0;
    std::uint32_t ra = a.rank(), rb = b.rank();
    if (ra != rb)
        return ra < rb ? -1 : 1;
    auto ea = a.elements(), eb = b.elements();
    size_t n = std::min(ea.size(), eb.size());
    for (size_t i = 0; i < n; ++i) {
        int c = cmp(ea[i], eb[i]);
        if (c != 0)
            return c;
    }
    if (ea.size() == eb.size())
        return 0;
    return ea.size() < eb.size() ? -1 : 1;
}

std::string HFSet::str() const {
    if (is_empty())
        return "{}";
    std::ostringstream out;
    out << "{";
    auto es = elements();
    for (size_t i = 0; i < es.size(); ++i) {
        if (i)
            out << ",";
        out << es[i].str();
    }
    out << "}";
    return out.str();
}

HFSet zermelo(unsigned long n) {
    HFSet s = HFSet::empty();
    for (unsigned long i = 0; i < n; ++i)
        s = HFSet::from_elements({s});
    return s;
}

HFSet two_v() { return HFSet::from_elements({zermelo(0), zermelo(1)}); }

HFSet kuratowski(HFSet a, HFSet b) {
    HFSet first = HFSet::from_elements({a});
    HFSet both = HFSet::from_elements({a, b});
    return HFSet::from_elements({first, both});
}

HFSet diamond() { return kuratowski(zermelo(1), zermelo(0)); }

HFSet integer_set(long z) {
    if (z >= 0)
        return substitute(diamond(), zermelo(static_cast<unsigned long>(z)));
    HFSet s = diamond();
    for (long i = 0; i < -z; ++i)
        s = HFSet::from_elements({s});
    return s;
}

namespace {

HFSet substitute_memo(HFSet a, HFSet b, std::unordered_map<std::uint32_t, HFSet> &memo) {
    if (a.is_empty())
        return b;
    auto it = memo.find(a.id());
    if (it != memo.end())
        return it->second;
    std::vector<HFSet> out;
    for (HFSet e : a.elements())
        out.push_back(substitute_memo(e, b, memo));
    HFSet r = HFSet::from_elements(std::move(out));
    memo.emplace(a.id(), r);
    return r;
}

} // namespace

HFSet substitute(HFSet a, HFSet b) {
    if (b.is_empty())
        return a;
    std::unordered_map<std::uint32_t, HFSet> memo;
    return substitute_memo(a, b, memo);
}

namespace {

void collect(HFSet x, std::vector<HFSet> &out, std::vector<bool> &seen) {
    for (HFSet e : x.elements()) {
        if (e.id() < seen.size() && seen[e.id()])
            continue;
        if (e.id() >= seen.size())
            seen.resize(e.id() + 1, false);
        seen[e.id()] = true;
        out.push_back(e);
        collect(e, out, seen);
    }
}

} // namespace

std::vector<HFSet> transitive_closure(HFSet x) {
    std::vector<HFSet> out;
    std::vector<bool> seen;
    collect(x, out, seen);
    std::sort(out.begin(), out.end(), HFLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // x itself is excluded unless it reappears as its own constituent,
    // which well-foundedness rules out.
    return out;
}

bool is_constituent(HFSet c, HFSet x) {
    if (c == x)
        return true;
    auto tc = transitive_closure(x);
    return std::binary_search(tc.begin(), tc.end(), c, HFLess{});
}

std::vector<std::pair<HFSet, HFSet>> structure_edges(HFSet x) {
    std::vector<HFSet> nodes = transitive_closure(x);
    nodes.push_back(x);
    std::sort(nodes.begin(), nodes.end(), HFLess{});
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::reverse(nodes.begin(), nodes.end()); // top-down, x first
    std::vector<std::pair<HFSet, HFSet>> edges;
    for (HFSet p : nodes)
        for (HFSet c : p.elements())
            edges.emplace_back(p, c);
    return edges;
}

std::string to_dot(HFSet x) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto &[p, c] : structure_edges(x))
        out << "  \"" << p.str() << "\" -> \"" << c.str() << "\";\n";
    out << "}\n";
    return out.str();
}

std::size_t hf_node_budget() { return HFSetTable::instance().budget(); }
void set_hf_node_budget(std::size_t budget) { HFSetTable::instance().set_budget(budget); }
std::size_t hf_interned_count() { return HFSetTable::instance().count(); }

} // namespace natrep
