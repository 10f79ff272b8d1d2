#pragma once

#include <optional>
#include <vector>

#include "rcx/graph.hpp"

namespace rcx {

// Total assignment of colours to the edges of a host graph. Colour ids are
// opaque positive integers and need not be contiguous; colour_count() is the
// number of distinct ids actually used. Immutable after construction.
class EdgeColouring {
public:
    EdgeColouring(Graph host, std::vector<int> colour_by_edge);

    const Graph& host() const { return host_; }
    int colour(int u, int v) const;  // throws on non-edges
    int colour_of_edge(int edge_idx) const { return colours_[edge_idx]; }
    const std::vector<int>& colours() const { return colours_; }
    int colour_count() const { return distinct_; }
    int max_colour() const { return max_colour_; }
    // Colours remapped onto 1..colour_count(), same partition of the edges.
    int dense_colour_of_edge(int edge_idx) const { return dense_[edge_idx]; }
    const std::vector<int>& dense_colours() const { return dense_; }

private:
    Graph host_;
    std::vector<int> colours_;
    std::vector<int> dense_;
    int distinct_ = 0;
    int max_colour_ = 0;
};

// Total assignment of positive colour ids to vertices 0..n-1.
struct VertexColouring {
    std::vector<int> colours;
    int order() const { return static_cast<int>(colours.size()); }
    int colour_count() const;
};

bool is_proper(const VertexColouring& vc, const Graph& g);

bool is_rainbow(const EdgeColouring& c, const Cycle& cycle);
bool is_rainbow(const EdgeColouring& c, const Path& path);

// First rainbow cycle containing all of `through`, in the same order as
// for_each_cycle_through visits cycles, or nullopt when none exists. The
// search prunes on repeated colours, so it only ever explores walks no
// longer than the number of distinct colours.
std::optional<Cycle> find_rainbow_cycle_through(const EdgeColouring& c,
                                                const std::vector<int>& through,
                                                std::optional<int> max_len = {});

// First rainbow path containing all of `through` (exhaustive search over
// rainbow paths, starts in ascending vertex order), or nullopt.
std::optional<Path> find_rainbow_path_connecting(const EdgeColouring& c,
                                                 const std::vector<int>& through);

struct Witness {
    std::vector<int> subset;
    Cycle cycle;
};

// Outcome of a k-rainbow verification sweep. On failure, failing_subset is
// the lexicographically first k-subset that lies on no rainbow cycle.
struct Verdict {
    bool ok = false;
    std::vector<int> failing_subset;
    std::optional<std::vector<Witness>> witnesses;
};

struct VerifyOptions {
    std::optional<int> max_len;
    bool collect_witnesses = false;
    int threads = 1;
};

// Checks that every k-subset of the host's vertices lies on a rainbow
// cycle. Worst-case exponential by design; intended for desk-scale hosts.
// The verdict is independent of the thread count.
Verdict verify_k_rainbow(const EdgeColouring& c, int k, VerifyOptions opts = {});

namespace internal {
// Subset check on raw colour arrays (values in 1..colour_bound), shared by
// verify_k_rainbow and the exact solver's leaf tests.
bool subset_has_rainbow_cycle(const Graph& g, const int* colour_by_edge, int colour_bound,
                              const std::vector<int>& subset, std::optional<int> max_len);
std::optional<Cycle> first_rainbow_cycle(const Graph& g, const int* colour_by_edge,
                                         int colour_bound, const std::vector<int>& subset,
                                         std::optional<int> max_len);
}  // namespace internal

}  // namespace rcx
