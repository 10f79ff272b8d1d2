#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace rcx {

// Simple undirected graph on vertices 0..order-1. Edges are stored with the
// smaller endpoint first and sorted lexicographically; the structure is
// immutable after construction, so instances can be shared freely across
// threads.
class Graph {
public:
    static constexpr int max_order = 1024;

    Graph() = default;
    // Validates and canonicalises the edge list. Throws std::invalid_argument
    // on self-loops, duplicate edges or endpoints out of range.
    Graph(int order, std::vector<std::pair<int, int>> edges);

    static Graph complete(int n);
    static Graph cycle(int n);
    // G(n,p) driven by a splitmix64 stream: vertex pairs are visited in
    // lexicographic order and pair (i,j) is kept when the next draw, mapped
    // to [0,1), falls below p. One draw is consumed per pair, so identical
    // (n,p,seed) triples always produce the same graph.
    static Graph random(int n, double p, std::uint64_t seed);

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_vertex(int v) const { return v >= 0 && v < order_; }
    bool adjacent(int u, int v) const;
    // Index into edges() for the pair {u,v}, or -1 when not an edge.
    int edge_index(int u, int v) const;
    bool is_complete() const;

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::int32_t> index_;  // order*order lookup, -1 for non-edges
};

// A cycle in canonical form: the vertex sequence starts at the minimum
// vertex and runs towards the smaller of its two neighbours on the cycle,
// so every cycle has exactly one representation.
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Cycle&) const = default;
};

// A simple path with at least one edge.
struct Path {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Path&) const = default;
};

// Rotates/reflects a cycle's vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<int> vertices);

// Visits every cycle containing all of `through` exactly once, in a fixed
// depth-first order. `visit` returns false to stop the enumeration early;
// the function then returns false as well. With an empty `through`, every
// cycle of the graph is visited. `max_len` caps the cycle length (number of
// edges).
bool for_each_cycle_through(const Graph& g, const std::vector<int>& through,
                            std::optional<int> max_len,
                            const std::function<bool(const Cycle&)>& visit);

std::vector<Cycle> cycles_through(const Graph& g, const std::vector<int>& through,
                                  std::optional<int> max_len = {});

// First cycle through `through` of minimum length, or nullopt when no cycle
// contains the set.
std::optional<Cycle> shortest_cycle_through(const Graph& g, const std::vector<int>& through);

bool is_connected(const Graph& g);

// Standard vertex connectivity; n-1 for complete graphs, otherwise the
// minimum over non-adjacent pairs of the number of internally disjoint
// paths between them.
int vertex_connectivity(const Graph& g);

enum class FkVerdict { exact_yes, exact_no, sufficient_k_connected };

// Evidence for "every k vertices of the graph lie on a common cycle".
// exact_yes carries the subset whose shortest covering cycle is longest
// (first such subset in lexicographic order) together with that cycle;
// exact_no carries the lexicographically first k-subset not covered by any
// cycle; sufficient_k_connected carries the connectivity value that makes
// the k-connectivity sufficient condition fire.
struct FkEvidence {
    FkVerdict verdict;
    std::vector<int> subset;
    std::optional<Cycle> witness;
    int connectivity = 0;
};

enum class FkMode { exact, fast };

FkEvidence check_fk_membership(const Graph& g, int k, FkMode mode);

namespace detail {

// splitmix64: the documented stream behind Graph::random and the test
// generators.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Lexicographic k-subset iteration over {0..n-1}.
inline std::vector<int> first_k_subset(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    return s;
}

inline bool next_k_subset(std::vector<int>& s, int n) {
    const int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

}  // namespace rcx
