#include "rcx/graph.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>
#include <string>

namespace rcx {

Graph::Graph(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
    if (order < 0 || order > max_order)
        throw std::invalid_argument("graph order out of range: " + std::to_string(order));
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(order_, {});
    index_.assign(static_cast<std::size_t>(order_) * order_, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        index_[static_cast<std::size_t>(u) * order_ + v] = static_cast<std::int32_t>(i);
        index_[static_cast<std::size_t>(v) * order_ + u] = static_cast<std::int32_t>(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return -1;
    return index_[static_cast<std::size_t>(u) * order_ + v];
}

bool Graph::is_complete() const {
    return edge_count() == order_ * (order_ - 1) / 2;
}

Graph Graph::complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph Graph::random(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
    detail::SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Cycle canonical_cycle(std::vector<int> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    int k = static_cast<int>(std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    const int next = vertices[(k + 1) % n];
    const int prev = vertices[(k + n - 1) % n];
    std::vector<int> out;
    out.reserve(n);
    if (next < prev) {
        for (int i = 0; i < n; ++i) out.push_back(vertices[(k + i) % n]);
    } else {
        for (int i = 0; i < n; ++i) out.push_back(vertices[(k + n - i) % n]);
    }
    return Cycle{std::move(out)};
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), INT_MAX);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbours(v))
            if (dist[w] == INT_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// Enumeration of all cycles: for each root r in ascending order, extend
// simple paths from r through vertices > r only; a closure back to r with
// at least 3 vertices is a cycle with minimum vertex r. Fixing
// path[1] < path.back() picks one of the two traversal directions, so each
// cycle is reported exactly once and is already in canonical form.
struct FullEnumerator {
    const Graph& g;
    int cap;
    const std::function<bool(const Cycle&)>& visit;
    std::vector<char> on_path;
    std::vector<int> path;
    bool stopped = false;

    void run() {
        for (int r = 0; r < g.order() && !stopped; ++r) {
            path.assign(1, r);
            on_path.assign(g.order(), 0);
            on_path[r] = 1;
            extend(r);
        }
    }

    void extend(int root) {
        const int v = path.back();
        for (int w : g.neighbours(v)) {
            if (stopped) return;
            if (w == root) {
                if (path.size() >= 3 && path[1] < path.back())
                    if (!visit(Cycle{path})) stopped = true;
            } else if (w > root && !on_path[w] && static_cast<int>(path.size()) < cap) {
                on_path[w] = 1;
                path.push_back(w);
                extend(root);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    }
};

// Enumeration of cycles through a required vertex set: paths are anchored at
// the minimum required vertex, may pass through arbitrary other vertices and
// close back at the anchor once every required vertex has been collected.
// The direction fix path[1] < path.back() again yields each cycle once;
// found cycles are canonicalised before being reported (the anchor need not
// be the cycle's minimum vertex).
struct AnchoredEnumerator {
    const Graph& g;
    int cap;
    const std::function<bool(const Cycle&)>& visit;

    AnchoredEnumerator(const Graph& g_, int cap_, const std::function<bool(const Cycle&)>& visit_)
        : g(g_), cap(cap_), visit(visit_) {}

    int anchor = -1;
    std::vector<char> required;
    std::vector<int> req_list;
    int missed = 0;
    bool capped = false;
    std::vector<int> dist_anchor;
    std::vector<std::vector<int>> dist_req;  // parallel to req_list
    std::vector<char> on_path;
    std::vector<int> path;
    bool stopped = false;

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
        on_path.assign(g.order(), 0);
        on_path[anchor] = 1;
        path.assign(1, anchor);
        extend();
    }

    bool prune(int w, int missed_after) const {
        if (!capped) return false;
        // Edges used once w is appended; the closed cycle needs at most
        // cap edges in total.
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
            if (stopped) return;
            if (w == anchor) {
                if (path.size() >= 3 && missed == 0 && path[1] < path.back())
                    if (!visit(canonical_cycle(path))) stopped = true;
            } else if (!on_path[w] && static_cast<int>(path.size()) < cap) {
                const int missed_after = missed - (required[w] ? 1 : 0);
                if (prune(w, missed_after)) continue;
                on_path[w] = 1;
                path.push_back(w);
                missed = missed_after;
                extend();
                missed += required[w] ? 1 : 0;
                path.pop_back();
                on_path[w] = 0;
            }
        }
    }
};

}  // namespace

bool for_each_cycle_through(const Graph& g, const std::vector<int>& through,
                            std::optional<int> max_len,
                            const std::function<bool(const Cycle&)>& visit) {
    for (int v : through)
        if (!g.has_vertex(v)) throw std::invalid_argument("required vertex out of range");
    const int cap = max_len.value_or(INT_MAX);
    if (cap < 3) return true;
    if (through.empty()) {
        FullEnumerator e{g, cap, visit, {}, {}, false};
        e.run();
        return !e.stopped;
    }
    AnchoredEnumerator e{g, cap, visit};
    e.run(through);
    return !e.stopped;
}

std::vector<Cycle> cycles_through(const Graph& g, const std::vector<int>& through,
                                  std::optional<int> max_len) {
    std::vector<Cycle> out;
    for_each_cycle_through(g, through, max_len, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::optional<Cycle> shortest_cycle_through(const Graph& g, const std::vector<int>& through) {
    for (int len = 3; len <= g.order(); ++len) {
        std::optional<Cycle> found;
        for_each_cycle_through(g, through, len, [&](const Cycle& c) {
            found = c;
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), INT_MAX) == dist.end();
}

namespace {

// Max-flow formulation of Menger's theorem: each vertex other than the two
// terminals is split into an in/out pair joined by a unit-capacity arc, each
// edge becomes two unit arcs. The number of augmenting paths from s to t
// equals the number of internally disjoint s-t paths. `limit` stops the
// augmentation early once the running minimum cannot be improved.
struct FlowNetwork {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNetwork(int nodes) : arcs(nodes) {}

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> parent(arcs.size(), {-1, -1});
        std::deque<int> queue{s};
        parent[s] = {s, 0};
        while (!queue.empty() && parent[t].first < 0) {
            int v = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < arcs[v].size(); ++i) {
                const Arc& a = arcs[v][i];
                if (a.cap > 0 && parent[a.to].first < 0) {
                    parent[a.to] = {v, static_cast<int>(i)};
                    queue.push_back(a.to);
                }
            }
        }
        if (parent[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [pv, pi] = parent[v];
            Arc& a = arcs[pv][pi];
            a.cap -= 1;
            arcs[a.to][a.rev].cap += 1;
            v = pv;
        }
        return true;
    }
};

int disjoint_paths(const Graph& g, int s, int t, int limit) {
    const int n = g.order();
    FlowNetwork net(2 * n);
    for (int v = 0; v < n; ++v) {
        const int cap = (v == s || v == t) ? n : 1;
        net.add(2 * v, 2 * v + 1, cap);  // v_in -> v_out
    }
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    int flow = 0;
    while (flow < limit && net.augment(2 * s + 1, 2 * t)) ++flow;
    return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n && best > 0; ++s)
        for (int t = s + 1; t < n && best > 0; ++t)
            if (!g.adjacent(s, t)) best = std::min(best, disjoint_paths(g, s, t, best));
    return best;
}

FkEvidence check_fk_membership(const Graph& g, int k, FkMode mode) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > g.order()) throw std::invalid_argument("k exceeds graph order");
    if (mode == FkMode::fast && k >= 2) {
        const int kappa = vertex_connectivity(g);
        if (kappa >= k) return {FkVerdict::sufficient_k_connected, {}, std::nullopt, kappa};
    }
    std::vector<int> subset = detail::first_k_subset(k);
    int worst_len = 0;
    std::vector<int> worst_subset;
    std::optional<Cycle> worst_cycle;
    do {
        auto cyc = shortest_cycle_through(g, subset);
        if (!cyc) return {FkVerdict::exact_no, subset, std::nullopt, 0};
        if (cyc->length() > worst_len) {
            worst_len = cyc->length();
            worst_subset = subset;
            worst_cycle = std::move(cyc);
        }
    } while (detail::next_k_subset(subset, g.order()));
    return {FkVerdict::exact_yes, std::move(worst_subset), std::move(worst_cycle), 0};
}

}  // namespace rcx
