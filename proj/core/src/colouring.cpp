#include "rcx/colouring.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <thread>

namespace rcx {

EdgeColouring::EdgeColouring(Graph host, std::vector<int> colour_by_edge)
    : host_(std::move(host)), colours_(std::move(colour_by_edge)) {
    if (static_cast<int>(colours_.size()) != host_.edge_count())
        throw std::invalid_argument("colouring must cover every host edge");
    for (int c : colours_)
        if (c < 1) throw std::invalid_argument("colour ids must be positive");
    std::vector<int> sorted = colours_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    distinct_ = static_cast<int>(sorted.size());
    max_colour_ = sorted.empty() ? 0 : sorted.back();
    dense_.resize(colours_.size());
    for (std::size_t i = 0; i < colours_.size(); ++i)
        dense_[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colours_[i]) -
                                     sorted.begin()) +
                    1;
}

int EdgeColouring::colour(int u, int v) const {
    const int idx = host_.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("walk uses a non-edge");
    return colours_[idx];
}

int VertexColouring::colour_count() const {
    std::vector<int> sorted = colours;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

bool is_proper(const VertexColouring& vc, const Graph& g) {
    if (vc.order() != g.order())
        throw std::invalid_argument("vertex colouring must cover every vertex");
    for (auto [u, v] : g.edges())
        if (vc.colours[u] == vc.colours[v]) return false;
    return true;
}

namespace {

bool walk_is_rainbow(const EdgeColouring& c, const std::vector<int>& vertices, bool closed) {
    std::vector<char> seen(c.colour_count() + 1, 0);
    const int edges = static_cast<int>(vertices.size()) - (closed ? 0 : 1);
    for (int i = 0; i < edges; ++i) {
        const int u = vertices[i];
        const int v = vertices[(i + 1) % vertices.size()];
        const int idx = c.host().edge_index(u, v);
        if (idx < 0) throw std::invalid_argument("walk uses a non-edge");
        const int col = c.dense_colour_of_edge(idx);
        if (seen[col]) return false;
        seen[col] = 1;
    }
    return true;
}

}  // namespace

bool is_rainbow(const EdgeColouring& c, const Cycle& cycle) {
    if (cycle.length() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    return walk_is_rainbow(c, cycle.vertices, true);
}

bool is_rainbow(const EdgeColouring& c, const Path& path) {
    if (path.vertices.size() < 2) throw std::invalid_argument("path needs at least one edge");
    return walk_is_rainbow(c, path.vertices, false);
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), INT_MAX);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbours(v))
            if (dist[w] == INT_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// Anchored cycle walker with a distinct-colour filter. It visits the same
// search tree as the plain enumerator, skipping branches whose partial walk
// already repeats a colour; since a prefix of a rainbow cycle never repeats
// a colour, rainbow cycles are reached in the same relative order as in the
// unfiltered enumeration.
struct RainbowCycleSearch {
    const Graph& g;
    const int* colour;  // by edge index, values 1..colour_bound
    int colour_bound;
    int cap;
    int anchor = -1;
    std::vector<char> required;
    std::vector<int> req_list;
    int missed = 0;
    bool capped = false;
    std::vector<int> dist_anchor;
    std::vector<std::vector<int>> dist_req;
    std::vector<char> colour_used;
    std::vector<char> on_path;
    std::vector<int> path;
    std::optional<Cycle> found;

    RainbowCycleSearch(const Graph& g_, const int* colour_, int bound, int cap_)
        : g(g_), colour(colour_), colour_bound(bound), cap(std::min(cap_, bound)) {}

    void run(const std::vector<int>& through) {
        anchor = *std::min_element(through.begin(), through.end());
        required.assign(g.order(), 0);
        for (int v : through)
            if (!required[v] && v != anchor) {
                required[v] = 1;
                req_list.push_back(v);
            }
        missed = static_cast<int>(req_list.size());
        capped = cap < INT_MAX;
        if (capped) {
            dist_anchor = bfs_distances(g, anchor);
            for (int x : req_list) dist_req.push_back(bfs_distances(g, x));
        }
        colour_used.assign(colour_bound + 1, 0);
        on_path.assign(g.order(), 0);
        on_path[anchor] = 1;
        path.assign(1, anchor);
        extend();
    }

    bool prune(int w, int missed_after) const {
        if (!capped) return false;
        const int used = static_cast<int>(path.size());
        if (missed_after == 0) return used + dist_anchor[w] > cap;
        if (used + missed_after + 1 > cap) return true;
        for (std::size_t i = 0; i < req_list.size(); ++i) {
            const int x = req_list[i];
            if (!on_path[x] && x != w) {
                if (dist_req[i][w] == INT_MAX || dist_anchor[x] == INT_MAX) return true;
                if (used + dist_req[i][w] + dist_anchor[x] > cap) return true;
            }
        }
        return false;
    }

    void extend() {
        const int v = path.back();
        for (int w : g.neighbours(v)) {
            if (found) return;
            const int col = colour[g.edge_index(v, w)];
            if (colour_used[col]) continue;
            if (w == anchor) {
                if (path.size() >= 3 && missed == 0 && path[1] < path.back())
                    found = canonical_cycle(path);
            } else if (!on_path[w] && static_cast<int>(path.size()) < cap) {
                const int missed_after = missed - (required[w] ? 1 : 0);
                if (prune(w, missed_after)) continue;
                colour_used[col] = 1;
                on_path[w] = 1;
                path.push_back(w);
                missed = missed_after;
                extend();
                missed += required[w] ? 1 : 0;
                path.pop_back();
                on_path[w] = 0;
                colour_used[col] = 0;
            }
        }
    }
};

}  // namespace

namespace internal {

std::optional<Cycle> first_rainbow_cycle(const Graph& g, const int* colour_by_edge,
                                         int colour_bound, const std::vector<int>& subset,
                                         std::optional<int> max_len) {
    if (subset.empty()) throw std::invalid_argument("subset must be nonempty");
    for (int v : subset)
        if (!g.has_vertex(v)) throw std::invalid_argument("subset vertex out of range");
    const int cap = max_len.value_or(INT_MAX);
    if (cap < 3) return std::nullopt;
    RainbowCycleSearch search(g, colour_by_edge, colour_bound, cap);
    search.run(subset);
    return search.found;
}

bool subset_has_rainbow_cycle(const Graph& g, const int* colour_by_edge, int colour_bound,
                              const std::vector<int>& subset, std::optional<int> max_len) {
    return first_rainbow_cycle(g, colour_by_edge, colour_bound, subset, max_len).has_value();
}

}  // namespace internal

std::optional<Cycle> find_rainbow_cycle_through(const EdgeColouring& c,
                                                const std::vector<int>& through,
                                                std::optional<int> max_len) {
    return internal::first_rainbow_cycle(c.host(), c.dense_colours().data(), c.colour_count(), through,
                                         max_len);
}

namespace {

struct RainbowPathSearch {
    const EdgeColouring& c;
    const Graph& g;
    std::vector<char> required;
    int missed = 0;
    std::vector<char> colour_used;
    std::vector<char> on_path;
    std::vector<int> path;
    std::optional<Path> found;

    explicit RainbowPathSearch(const EdgeColouring& col) : c(col), g(col.host()) {}

    void run(const std::vector<int>& through) {
        required.assign(g.order(), 0);
        int req_count = 0;
        for (int v : through)
            if (!required[v]) {
                required[v] = 1;
                ++req_count;
            }
        for (int start = 0; start < g.order() && !found; ++start) {
            colour_used.assign(c.colour_count() + 1, 0);
            on_path.assign(g.order(), 0);
            on_path[start] = 1;
            path.assign(1, start);
            missed = req_count - (required[start] ? 1 : 0);
            extend();
        }
    }

    void extend() {
        const int v = path.back();
        for (int w : g.neighbours(v)) {
            if (found) return;
            if (on_path[w]) continue;
            const int col = c.dense_colour_of_edge(g.edge_index(v, w));
            if (colour_used[col]) continue;
            colour_used[col] = 1;
            on_path[w] = 1;
            path.push_back(w);
            const bool was_required = required[w] != 0;
            if (was_required) --missed;
            if (missed == 0) {
                found = Path{path};
            } else {
                extend();
            }
            if (was_required) ++missed;
            path.pop_back();
            on_path[w] = 0;
            colour_used[col] = 0;
        }
    }
};

}  // namespace

std::optional<Path> find_rainbow_path_connecting(const EdgeColouring& c,
                                                 const std::vector<int>& through) {
    if (through.empty()) throw std::invalid_argument("subset must be nonempty");
    for (int v : through)
        if (!c.host().has_vertex(v)) throw std::invalid_argument("subset vertex out of range");
    RainbowPathSearch search(c);
    search.run(through);
    return search.found;
}

Verdict verify_k_rainbow(const EdgeColouring& c, int k, VerifyOptions opts) {
    const Graph& g = c.host();
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > g.order()) throw std::invalid_argument("k exceeds host order");

    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> s = detail::first_k_subset(k);
        do {
            subsets.push_back(s);
        } while (detail::next_k_subset(s, g.order()));
    }

    const int threads = std::max(1, opts.threads);
    std::vector<std::optional<Cycle>> cycles(opts.collect_witnesses ? subsets.size() : 0);
    std::atomic<std::size_t> first_fail{subsets.size()};

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (i >= first_fail.load(std::memory_order_relaxed)) break;
            auto cyc = internal::first_rainbow_cycle(g, c.dense_colours().data(), c.colour_count(),
                                                     subsets[i], opts.max_len);
            if (!cyc) {
                std::size_t cur = first_fail.load(std::memory_order_relaxed);
                while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
                }
                break;
            }
            if (opts.collect_witnesses) cycles[i] = std::move(cyc);
        }
    };

    if (threads == 1 || subsets.size() < 2) {
        work(0, subsets.size());
    } else {
        const std::size_t chunk = (subsets.size() + threads - 1) / threads;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(subsets.size(), t * chunk);
            const std::size_t end = std::min(subsets.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
        // A worker may have stopped early on a stale first_fail; re-scan the
        // prefix so the reported subset is the lexicographic first failure.
        const std::size_t claimed = first_fail.load();
        if (claimed < subsets.size()) {
            for (std::size_t i = 0; i < claimed; ++i) {
                if (opts.collect_witnesses && cycles[i]) continue;
                auto cyc = internal::first_rainbow_cycle(g, c.dense_colours().data(), c.colour_count(),
                                                         subsets[i], opts.max_len);
                if (!cyc) {
                    first_fail.store(i);
                    break;
                }
                if (opts.collect_witnesses) cycles[i] = std::move(cyc);
            }
        }
    }

    Verdict verdict;
    const std::size_t fail = first_fail.load();
    if (fail < subsets.size()) {
        verdict.ok = false;
        verdict.failing_subset = subsets[fail];
        return verdict;
    }
    verdict.ok = true;
    if (opts.collect_witnesses) {
        std::vector<Witness> ws;
        ws.reserve(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i)
            ws.push_back({subsets[i], *cycles[i]});
        verdict.witnesses = std::move(ws);
    }
    return verdict;
}

}  // namespace rcx
