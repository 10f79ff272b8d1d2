#include "rcx/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rcx::oracle {

namespace {

bool proper_backtrack(const Graph& g, int cap, int v, int max_used, std::vector<int>& assign) {
    if (v == g.order()) return true;
    // Trying colours in ascending order with the first-fit bound yields the
    // lexicographically smallest proper assignment.
    const int limit = std::min(cap, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool clash = false;
        for (int w : g.neighbours(v))
            if (w < v && assign[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        assign[v] = c;
        if (proper_backtrack(g, cap, v + 1, std::max(max_used, c), assign)) return true;
    }
    assign[v] = 0;
    return false;
}

}  // namespace

std::optional<VertexColouring> find_proper_colouring(const Graph& g, int colours) {
    if (colours < 1) throw std::invalid_argument("colour bound must be positive");
    if (g.order() == 0) return VertexColouring{{}};
    std::vector<int> assign(g.order(), 0);
    if (!proper_backtrack(g, colours, 0, 0, assign)) return std::nullopt;
    return VertexColouring{std::move(assign)};
}

ChiResult chromatic_number(const Graph& g, int cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    if (g.order() == 0) return 0;
    for (int t = 1; t <= cap; ++t)
        if (find_proper_colouring(g, t)) return t;
    return AboveCap{cap};
}

namespace {

struct CycleRec {
    std::vector<int> vertices;
    std::vector<int> edge_ids;
    std::uint64_t vertex_mask = 0;
};

// All cycles by root-anchored backtracking: roots ascending, interior
// vertices above the root, one direction per cycle.
struct CycleCollector {
    const Graph& g;
    int cap;
    std::vector<CycleRec> out;
    std::vector<char> used;
    std::vector<int> stack;

    void run() {
        used.assign(g.order(), 0);
        for (int r = 0; r < g.order(); ++r) {
            stack.assign(1, r);
            used[r] = 1;
            walk(r);
            used[r] = 0;
        }
    }

    void walk(int root) {
        const int v = stack.back();
        for (int w : g.neighbours(v)) {
            if (w == root && stack.size() >= 3 && stack[1] < stack.back()) {
                CycleRec rec;
                rec.vertices = stack;
                for (std::size_t i = 0; i < stack.size(); ++i) {
                    rec.edge_ids.push_back(
                        g.edge_index(stack[i], stack[(i + 1) % stack.size()]));
                    rec.vertex_mask |= std::uint64_t{1} << stack[i];
                }
                out.push_back(std::move(rec));
            } else if (w > root && !used[w] && static_cast<int>(stack.size()) < cap) {
                used[w] = 1;
                stack.push_back(w);
                walk(root);
                stack.pop_back();
                used[w] = 0;
            }
        }
    }
};

std::uint64_t subset_mask(const std::vector<int>& subset) {
    std::uint64_t m = 0;
    for (int v : subset) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

CrxBruteResult crx_bruteforce(const Graph& g, int k, int cap) {
    const int n = g.order();
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > n) throw std::invalid_argument("k exceeds graph order");
    if (n > 62) throw std::invalid_argument("oracle limited to order <= 62");
    if (cap < 3 || cap > 62) throw std::invalid_argument("cap must be in 3..62");

    CycleCollector collector{g, n, {}, {}, {}};
    collector.run();
    const std::vector<CycleRec>& cycles = collector.out;

    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> s = detail::first_k_subset(k);
        do {
            subsets.push_back(s);
        } while (detail::next_k_subset(s, n));
    }

    // Family membership first: every subset needs some covering cycle.
    std::vector<std::vector<int>> candidates(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const std::uint64_t m = subset_mask(subsets[i]);
        for (std::size_t ci = 0; ci < cycles.size(); ++ci)
            if ((cycles[ci].vertex_mask & m) == m) candidates[i].push_back(static_cast<int>(ci));
        if (candidates[i].empty()) return NotInFk{subsets[i]};
    }

    const int m_edges = g.edge_count();
    for (int t = 3; t <= cap; ++t) {
        // Every map E -> {1..t} with the first edge pinned to colour 1.
        std::vector<int> colour(m_edges, 1);
        while (true) {
            bool all_ok = true;
            for (std::size_t i = 0; i < subsets.size() && all_ok; ++i) {
                bool covered = false;
                for (int ci : candidates[i]) {
                    const CycleRec& cyc = cycles[ci];
                    // A cycle longer than the palette cannot be rainbow.
                    if (static_cast<int>(cyc.edge_ids.size()) > t) continue;
                    std::uint64_t seen = 0;
                    bool rainbow = true;
                    for (int e : cyc.edge_ids) {
                        const std::uint64_t bit = std::uint64_t{1} << colour[e];
                        if (seen & bit) {
                            rainbow = false;
                            break;
                        }
                        seen |= bit;
                    }
                    if (rainbow) {
                        covered = true;
                        break;
                    }
                }
                all_ok = covered;
            }
            if (all_ok) return t;

            int pos = m_edges - 1;
            while (pos >= 1 && colour[pos] == t) colour[pos--] = 1;
            if (pos < 1) break;
            ++colour[pos];
        }
    }
    return AboveCap{cap};
}

namespace {

struct RainbowReach {
    const Graph& g;
    const EdgeColouring& c;
    int target;
    std::vector<char> colour_used;
    std::vector<char> visited;
    bool found = false;

    void walk(int v) {
        if (found) return;
        if (v == target) {
            found = true;
            return;
        }
        for (int w : g.neighbours(v)) {
            if (visited[w]) continue;
            const int col = c.dense_colour_of_edge(g.edge_index(v, w));
            if (colour_used[col]) continue;
            visited[w] = 1;
            colour_used[col] = 1;
            walk(w);
            colour_used[col] = 0;
            visited[w] = 0;
            if (found) return;
        }
    }
};

}  // namespace

bool rainbow_path_exists(const Graph& g, const EdgeColouring& c, int s, int t) {
    if (!g.has_vertex(s) || !g.has_vertex(t)) throw std::invalid_argument("vertex out of range");
    if (s == t) throw std::invalid_argument("endpoints must differ");
    if (!(c.host() == g)) throw std::invalid_argument("colouring host mismatch");
    RainbowReach reach{g, c, t, std::vector<char>(c.colour_count() + 1, 0),
                       std::vector<char>(g.order(), 0), false};
    reach.visited[s] = 1;
    reach.walk(s);
    return reach.found;
}

namespace {

// Coverage bookkeeping for k_rainbow_path_connected: k-subsets are ranked
// combinadically and each enumerated rainbow path marks every subset of its
// vertex set that contains the newly appended vertex.
struct Coverage {
    int n, k;
    std::vector<std::vector<long long>> binom;
    std::vector<char> marked;
    long long remaining;

    Coverage(int n_, int k_) : n(n_), k(k_) {
        binom.assign(n + 1, std::vector<long long>(k + 1, 0));
        for (int i = 0; i <= n; ++i) {
            binom[i][0] = 1;
            for (int j = 1; j <= std::min(i, k); ++j)
                binom[i][j] = binom[i - 1][j - 1] + (i - 1 >= j ? binom[i - 1][j] : 0);
        }
        marked.assign(static_cast<std::size_t>(binom[n][k]), 0);
        remaining = binom[n][k];
    }

    long long rank(const std::vector<int>& sorted) const {
        long long r = 0;
        for (int i = 0; i < k; ++i) r += binom[sorted[i]][i + 1];
        return r;
    }

    void mark(const std::vector<int>& sorted) {
        const long long r = rank(sorted);
        if (!marked[r]) {
            marked[r] = 1;
            --remaining;
        }
    }
};

struct PathEnumerator {
    const Graph& g;
    const EdgeColouring& c;
    Coverage& cover;
    int k;
    std::vector<char> colour_used;
    std::vector<char> on_path;
    std::vector<int> path;

    void run() {
        for (int start = 0; start < g.order() && cover.remaining > 0; ++start) {
            colour_used.assign(c.colour_count() + 1, 0);
            on_path.assign(g.order(), 0);
            on_path[start] = 1;
            path.assign(1, start);
            extend();
        }
    }

    void mark_subsets_with(int w) {
        // Every k-subset of the current path containing w.
        std::vector<int> others(path.begin(), path.end() - 1);
        std::sort(others.begin(), others.end());
        if (k == 1) {
            cover.mark({w});
            if (path.size() == 2) cover.mark({others[0]});
            return;
        }
        const int m = static_cast<int>(others.size());
        if (m < k - 1) return;
        std::vector<int> idx(k - 1);
        for (int i = 0; i < k - 1; ++i) idx[i] = i;
        while (true) {
            std::vector<int> subset;
            subset.reserve(k);
            for (int i : idx) subset.push_back(others[i]);
            subset.push_back(w);
            std::sort(subset.begin(), subset.end());
            cover.mark(subset);
            int pos = k - 2;
            while (pos >= 0 && idx[pos] == m - (k - 1) + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    void extend() {
        if (cover.remaining == 0) return;
        const int v = path.back();
        for (int w : g.neighbours(v)) {
            if (on_path[w]) continue;
            const int col = c.dense_colour_of_edge(g.edge_index(v, w));
            if (colour_used[col]) continue;
            colour_used[col] = 1;
            on_path[w] = 1;
            path.push_back(w);
            mark_subsets_with(w);
            extend();
            path.pop_back();
            on_path[w] = 0;
            colour_used[col] = 0;
            if (cover.remaining == 0) return;
        }
    }
};

}  // namespace

bool k_rainbow_path_connected(const Graph& g, const EdgeColouring& c, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (k > g.order()) throw std::invalid_argument("k exceeds graph order");
    if (!(c.host() == g)) throw std::invalid_argument("colouring host mismatch");
    Coverage cover(g.order(), k);
    PathEnumerator paths{g, c, cover, k, {}, {}, {}};
    paths.run();
    return cover.remaining == 0;
}

}  // namespace rcx::oracle
