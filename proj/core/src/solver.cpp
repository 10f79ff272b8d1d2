#include "rcx/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcx {

std::optional<EdgeColouring> decide_crx1_le3(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("graph must be nonempty");
    const int n = g.order();
    std::vector<int> colour(g.edge_count(), 0);  // 0 = not coloured yet
    std::vector<char> finished(n, 0);

    for (int v = 0; v < n; ++v) {
        if (finished[v]) continue;
        // Pick adjacent neighbours u < w of v; prefer a pair whose joining
        // edge is already coloured.
        int pick_u = -1, pick_w = -1;
        bool pick_coloured = false;
        const auto& nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size() && !pick_coloured; ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int u = nb[i], w = nb[j];
                const int uw = g.edge_index(u, w);
                if (uw < 0) continue;
                if (colour[uw] != 0) {
                    pick_u = u;
                    pick_w = w;
                    pick_coloured = true;
                    break;
                }
                if (pick_u < 0) {
                    pick_u = u;
                    pick_w = w;
                }
            }
        }
        if (pick_u < 0) return std::nullopt;  // v lies on no triangle

        const int vu = g.edge_index(v, pick_u);
        const int vw = g.edge_index(v, pick_w);
        const int uw = g.edge_index(pick_u, pick_w);
        if (colour[uw] != 0) {
            int a = 0, b = 0;
            for (int c = 1; c <= 3; ++c)
                if (c != colour[uw]) (a == 0 ? a : b) = c;
            colour[vu] = a;
            colour[vw] = b;
        } else {
            colour[vu] = 1;
            colour[vw] = 2;
            colour[uw] = 3;
        }
        finished[v] = finished[pick_u] = finished[pick_w] = 1;
    }

    for (int& c : colour)
        if (c == 0) c = 1;
    return EdgeColouring(g, std::move(colour));
}

namespace {

// Depth-first assignment with canonical colour introduction. Verifies only
// leaves that use exactly `target` distinct colours; assignments with fewer
// colours were already covered at smaller targets.
struct ExactSearch {
    const Graph& g;
    int k;
    int target;
    std::vector<int> colour;
    std::vector<std::vector<int>> subsets;
    bool found = false;

    ExactSearch(const Graph& g_, int k_, int target_) : g(g_), k(k_), target(target_) {
        colour.assign(g.edge_count(), 0);
        std::vector<int> s = detail::first_k_subset(k);
        do {
            subsets.push_back(s);
        } while (detail::next_k_subset(s, g.order()));
    }

    bool leaf_passes() const {
        for (const auto& s : subsets)
            if (!internal::subset_has_rainbow_cycle(g, colour.data(), target, s, std::nullopt))
                return false;
        return true;
    }

    void assign(int edge, int max_used) {
        if (found) return;
        if (edge == g.edge_count()) {
            if (max_used == target && leaf_passes()) found = true;
            return;
        }
        // Not enough edges left to ever introduce `target` colours: cut.
        if (max_used + (g.edge_count() - edge) < target) return;
        const int limit = std::min(target, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            colour[edge] = c;
            assign(edge + 1, std::max(max_used, c));
            if (found) return;  // keep the witness assignment intact
        }
        colour[edge] = 0;
    }
};

}  // namespace

CrxOutcome crx_exact(const Graph& g, int k, std::optional<int> upper) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > g.order()) throw std::invalid_argument("k exceeds graph order");
    FkEvidence fk = check_fk_membership(g, k, FkMode::exact);
    if (fk.verdict == FkVerdict::exact_no) return NotInFk{fk.subset};

    const int cap = upper.value_or(g.edge_count());
    for (int t = 3; t <= cap; ++t) {
        ExactSearch search(g, k, t);
        search.assign(0, 0);
        if (search.found)
            return CrxResult{t, EdgeColouring(g, std::move(search.colour)),
                             CrxMethod::exact_search};
    }
    return AboveCap{cap};
}

namespace {

// Edge colours of a complete graph held as a symmetric matrix during the
// inductive construction.
struct CompleteColours {
    int n;
    std::vector<int> m;
    explicit CompleteColours(int n_) : n(n_), m(static_cast<std::size_t>(n_) * n_, 0) {}
    int& at(int u, int v) { return m[static_cast<std::size_t>(u) * n + v]; }
    int get(int u, int v) const { return m[static_cast<std::size_t>(u) * n + v]; }
    void set(int u, int v, int c) {
        at(u, v) = c;
        at(v, u) = c;
    }
};

}  // namespace

EdgeColouring construct_2rainbow_complete(int n) {
    if (n < 3) throw std::invalid_argument("construction needs n >= 3");
    CompleteColours col(n);
    col.set(0, 1, 1);
    col.set(0, 2, 2);
    col.set(1, 2, 3);

    for (int u = 3; u < n; ++u) {
        const int prev = u;  // current graph is complete on 0..u-1
        if (prev % 2 == 0) {
            // Even order: attach u over the matching (0,1),(2,3),...
            for (int x = 0; x < prev; x += 2) {
                const int y = x + 1;
                int a = 0, b = 0;
                for (int c = 1; c <= 3; ++c)
                    if (c != col.get(x, y)) (a == 0 ? a : b) = c;
                col.set(u, x, a);
                col.set(u, y, b);
            }
        } else {
            // Odd order: lexicographically first rainbow triangle x1 x2 x3,
            // u->x_i gets the colour of the opposite edge; the rest is
            // matched pairwise in ascending order.
            int t0 = -1, t1 = -1, t2 = -1;
            for (int a = 0; a < prev && t0 < 0; ++a)
                for (int b = a + 1; b < prev && t0 < 0; ++b)
                    for (int c = b + 1; c < prev; ++c) {
                        const int ab = col.get(a, b), bc = col.get(b, c), ca = col.get(c, a);
                        if (ab != bc && bc != ca && ca != ab) {
                            t0 = a;
                            t1 = b;
                            t2 = c;
                            break;
                        }
                    }
            col.set(u, t0, col.get(t1, t2));
            col.set(u, t1, col.get(t2, t0));
            col.set(u, t2, col.get(t0, t1));
            std::vector<int> rest;
            for (int x = 0; x < prev; ++x)
                if (x != t0 && x != t1 && x != t2) rest.push_back(x);
            for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
                const int x = rest[i], y = rest[i + 1];
                int a = 0, b = 0;
                for (int c = 1; c <= 3; ++c)
                    if (c != col.get(x, y)) (a == 0 ? a : b) = c;
                col.set(u, x, a);
                col.set(u, y, b);
            }
        }
    }

    Graph host = Graph::complete(n);
    std::vector<int> by_edge(host.edge_count());
    for (int i = 0; i < host.edge_count(); ++i) {
        auto [u, v] = host.edges()[i];
        by_edge[i] = col.get(u, v);
    }
    return EdgeColouring(std::move(host), std::move(by_edge));
}

EdgeColouring construct_3rainbow_k4() {
    Graph host = Graph::complete(4);
    std::vector<int> by_edge(host.edge_count());
    auto set = [&](int u, int v, int c) { by_edge[host.edge_index(u, v)] = c; };
    set(0, 1, 1);
    set(2, 3, 1);
    set(0, 2, 2);
    set(1, 3, 2);
    set(0, 3, 3);
    set(1, 2, 3);
    return EdgeColouring(std::move(host), std::move(by_edge));
}

bool recognize_crx2_eq3(const Graph& g) { return g.order() >= 3 && g.is_complete(); }

bool recognize_crx3_eq3(const Graph& g) {
    return (g.order() == 3 || g.order() == 4) && g.is_complete();
}

std::uint64_t ramsey_upper_bound(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > 20) throw std::out_of_range("k too large for exact 64-bit evaluation");
    // sum_{i=0..k} k!/i!, accumulated from the i=k term downwards.
    std::uint64_t term = 1, total = 0;
    for (int i = k; i >= 0; --i) {
        total += term;
        term *= static_cast<std::uint64_t>(i);
    }
    return total + 1;
}

bool crx3_gt4_by_order(const Graph& g) { return g.order() >= 66; }

std::optional<Cycle> find_monochromatic_triangle(const EdgeColouring& c) {
    const Graph& g = c.host();
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            const int ab = g.edge_index(a, b);
            if (ab < 0) continue;
            for (int d = b + 1; d < g.order(); ++d) {
                const int bd = g.edge_index(b, d), ad = g.edge_index(a, d);
                if (bd < 0 || ad < 0) continue;
                if (c.colour_of_edge(ab) == c.colour_of_edge(bd) &&
                    c.colour_of_edge(bd) == c.colour_of_edge(ad))
                    return Cycle{{a, b, d}};
            }
        }
    return std::nullopt;
}

}  // namespace rcx
