#include "rcx/reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rcx/solver.hpp"

namespace rcx {

namespace {

// Accumulates gadget edges with class tags and optional colours, then
// reindexes both against the canonical edge order of the built graph.
struct GadgetBuilder {
    int order;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, std::string> cls;
    std::map<std::pair<int, int>, int> col;

    explicit GadgetBuilder(int order_) : order(order_) {}

    void add(int u, int v, const char* c, int colour = 0) {
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        cls[{u, v}] = c;
        if (colour > 0) col[{u, v}] = colour;
    }

    void finish(ReductionInstance& inst, bool with_colouring) {
        inst.graph = Graph(order, edges);
        inst.edge_classes.resize(inst.graph.edge_count());
        for (int i = 0; i < inst.graph.edge_count(); ++i)
            inst.edge_classes[i] = cls.at(inst.graph.edges()[i]);
        if (with_colouring) {
            std::vector<int> by_edge(inst.graph.edge_count());
            for (int i = 0; i < inst.graph.edge_count(); ++i)
                by_edge[i] = col.at(inst.graph.edges()[i]);
            inst.base_colouring = EdgeColouring(inst.graph, std::move(by_edge));
        }
    }
};

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

// Vertex ids of a role family, in ascending id order.
std::vector<int> ids_with_tag(const ReductionInstance& inst, RoleTag tag) {
    std::vector<int> out;
    for (std::size_t v = 0; v < inst.roles.size(); ++v)
        if (inst.roles[v].tag == tag) out.push_back(static_cast<int>(v));
    return out;
}

int single_id_with_tag(const ReductionInstance& inst, RoleTag tag, const char* what) {
    auto ids = ids_with_tag(inst, tag);
    if (ids.size() != 1) throw std::invalid_argument(std::string("instance has no ") + what);
    return ids[0];
}

void require_problem(const ReductionInstance& inst, const std::string& problem, int l) {
    if (inst.source.problem != problem || !inst.source.l || *inst.source.l != l)
        throw std::invalid_argument("instance kind mismatch");
}

void require_proper_with_palette(const VertexColouring& vc, const Graph& source, int palette) {
    if (vc.order() != source.order())
        throw std::invalid_argument("vertex colouring order mismatch");
    for (int c : vc.colours)
        if (c < 1 || c > palette)
            throw std::invalid_argument("vertex colours must lie in 1.." +
                                        std::to_string(palette));
    if (!is_proper(vc, source)) throw std::invalid_argument("vertex colouring is not proper");
}

// Colours of the inductive 3-colour construction, indexed by positions into
// an ascending id list; degenerate hosts (< 3 vertices) fall back to colour
// 1 on their at most one edge.
struct CliqueColours {
    int size;
    std::optional<EdgeColouring> colouring;

    explicit CliqueColours(int size_) : size(size_) {
        if (size >= 3) colouring = construct_2rainbow_complete(size);
    }

    int at(int p, int q) const {
        if (!colouring) return 1;
        return colouring->colour(p, q);
    }
};

}  // namespace

ReductionInstance reduce_vc_to_crx1(const Graph& g, int l) {
    if (l < 4) throw std::invalid_argument("palette size must be at least 4");
    if (g.order() < 2)
        throw std::invalid_argument(
            "construction needs order >= 2 (a single source vertex leaves the gadget acyclic)");
    const int n = g.order();
    const int m = g.edge_count();
    const auto non = non_edges(g);
    const int interior = l - 3;

    ReductionInstance inst;
    inst.source = {"vertex-colouring", g, std::nullopt, l, std::nullopt, std::nullopt,
                   std::nullopt};

    const int hub = n;
    const int path_base = n + 1;
    const int wedge_base = path_base + m * interior;
    GadgetBuilder b(wedge_base + 2 * static_cast<int>(non.size()));

    inst.roles.resize(b.order);
    for (int i = 0; i < n; ++i) inst.roles[i] = {RoleTag::original, {i + 1}};
    inst.roles[hub] = {RoleTag::hub, {}};

    for (int i = 0; i < n; ++i) b.add(hub, i, "E1");

    for (int e = 0; e < m; ++e) {
        auto [i, j] = g.edges()[e];
        int prev = i;
        for (int t = 1; t <= interior; ++t) {
            const int u = path_base + e * interior + (t - 1);
            inst.roles[u] = {RoleTag::path_aux, {i + 1, j + 1, t}};
            b.add(prev, u, "E2");
            prev = u;
        }
        b.add(prev, j, "E2");
    }

    for (std::size_t w = 0; w < non.size(); ++w) {
        auto [i, j] = non[w];
        const int w1 = wedge_base + 2 * static_cast<int>(w);
        const int w2 = w1 + 1;
        inst.roles[w1] = {RoleTag::wedge, {i + 1, j + 1, 1}};
        inst.roles[w2] = {RoleTag::wedge, {i + 1, j + 1, 2}};
        b.add(i, w1, "E3");
        b.add(w1, j, "E3");
        b.add(i, w2, "E3");
        b.add(w2, j, "E3");
    }

    b.finish(inst, false);
    return inst;
}

EdgeColouring lift_vc_to_crx1(const ReductionInstance& inst, const VertexColouring& vc) {
    const Graph& source = inst.source.graph;
    if (inst.source.problem != "vertex-colouring" || !inst.source.l || *inst.source.l < 4)
        throw std::invalid_argument("instance kind mismatch");
    const int l = *inst.source.l;
    require_proper_with_palette(vc, source, l);

    const Graph& g = inst.graph;
    const int hub = single_id_with_tag(inst, RoleTag::hub, "hub");
    std::vector<int> colour(g.edge_count(), 0);
    auto set = [&](int u, int v, int c) { colour[g.edge_index(u, v)] = c; };

    // Hub star carries the vertex colours.
    for (int i = 0; i < source.order(); ++i) set(hub, i, vc.colours[i]);

    // Each edge path is completed with the remaining l-2 colours in
    // ascending order, so the closed walk through the hub sees all l.
    std::map<std::pair<int, int>, std::vector<int>> path_interior;
    for (std::size_t v = 0; v < inst.roles.size(); ++v)
        if (inst.roles[v].tag == RoleTag::path_aux) {
            const auto& p = inst.roles[v].params;
            path_interior[{p[0] - 1, p[1] - 1}].push_back(static_cast<int>(v));
        }
    for (auto& [edge, interior] : path_interior) {
        auto [i, j] = edge;
        std::sort(interior.begin(), interior.end());
        std::vector<int> free;
        for (int c = 1; c <= l; ++c)
            if (c != vc.colours[i] && c != vc.colours[j]) free.push_back(c);
        int prev = i;
        std::size_t next_colour = 0;
        for (int u : interior) {
            set(prev, u, free[next_colour++]);
            prev = u;
        }
        set(prev, j, free[next_colour++]);
    }

    // Parallel 2-paths get the fixed pattern 1/2 towards i and 3/4 towards j.
    for (std::size_t v = 0; v < inst.roles.size(); ++v)
        if (inst.roles[v].tag == RoleTag::wedge) {
            const auto& p = inst.roles[v].params;
            const int i = p[0] - 1, j = p[1] - 1, s = p[2];
            set(i, static_cast<int>(v), s == 1 ? 1 : 2);
            set(static_cast<int>(v), j, s == 1 ? 3 : 4);
        }

    return EdgeColouring(g, std::move(colour));
}

VertexColouring extract_vertex_colouring(const ReductionInstance& inst, const EdgeColouring& c) {
    if (!(c.host() == inst.graph))
        throw std::invalid_argument("colouring host does not match the instance");
    const int hub = single_id_with_tag(inst, RoleTag::hub, "hub");
    std::vector<int> out(inst.source.graph.order(), 0);
    for (std::size_t v = 0; v < inst.roles.size(); ++v)
        if (inst.roles[v].tag == RoleTag::original) {
            const int i = inst.roles[v].params[0] - 1;
            out[i] = c.colour(hub, static_cast<int>(v));
        }
    return VertexColouring{std::move(out)};
}

namespace {

// Shared body of the two 2-rainbow reductions; `split` switches between one
// shortcut vertex per source edge and a split pair.
ReductionInstance build_vc_to_crx2(const Graph& g, bool split) {
    const int n = g.order();
    const int m = g.edge_count();
    const auto non = non_edges(g);
    const int ne = static_cast<int>(non.size());
    const int per_edge = split ? 2 : 1;

    ReductionInstance inst;
    inst.source = {"vertex-colouring", g, std::nullopt, split ? 5 : 4,
                   std::nullopt, std::nullopt, std::nullopt};

    const int extra = n;  // the appended vertex v_{n+1}
    const int u_base = n + 1;
    const int hub = u_base + per_edge * m;
    const int w1_base = hub + 1;
    const int w2_base = w1_base + 2 * ne;
    GadgetBuilder b(w2_base + 2 * (n + 1));

    inst.roles.resize(b.order);
    for (int i = 0; i < n; ++i) inst.roles[i] = {RoleTag::original, {i + 1}};
    inst.roles[extra] = {RoleTag::extra_v, {}};
    inst.roles[hub] = {RoleTag::hub, {}};
    for (int e = 0; e < m; ++e) {
        auto [i, j] = g.edges()[e];
        if (split) {
            inst.roles[u_base + 2 * e] = {RoleTag::edge_aux, {i + 1, j + 1, 1}};
            inst.roles[u_base + 2 * e + 1] = {RoleTag::edge_aux, {i + 1, j + 1, 2}};
        } else {
            inst.roles[u_base + e] = {RoleTag::edge_aux, {i + 1, j + 1}};
        }
    }
    for (int w = 0; w < ne; ++w) {
        auto [i, j] = non[w];
        inst.roles[w1_base + 2 * w] = {RoleTag::wedge, {i + 1, j + 1, 1}};
        inst.roles[w1_base + 2 * w + 1] = {RoleTag::wedge, {i + 1, j + 1, 2}};
    }
    for (int i = 0; i <= n; ++i) {
        inst.roles[w2_base + 2 * i] = {RoleTag::wedge, {i + 1, n + 1, 1}};
        inst.roles[w2_base + 2 * i + 1] = {RoleTag::wedge, {i + 1, n + 1, 2}};
    }

    // E1: clique on the shortcut family plus the hub.
    std::vector<int> u_ids;
    for (int e = 0; e < per_edge * m; ++e) u_ids.push_back(u_base + e);
    u_ids.push_back(hub);
    for (std::size_t x = 0; x < u_ids.size(); ++x)
        for (std::size_t y = x + 1; y < u_ids.size(); ++y) b.add(u_ids[x], u_ids[y], "E1");

    // E2^1: clique on the first wedge level.
    for (int x = 0; x < 2 * ne; ++x)
        for (int y = x + 1; y < 2 * ne; ++y) b.add(w1_base + x, w1_base + y, "E2^1");

    // E2^2: complete bipartite between the wedge levels.
    for (int x = 0; x < 2 * ne; ++x)
        for (int y = 0; y < 2 * (n + 1); ++y) b.add(w1_base + x, w2_base + y, "E2^2");

    // E2^3: second-level wedges of different families.
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l2 = 0; l2 < 2; ++l2)
                    b.add(w2_base + 2 * i + k, w2_base + 2 * j + l2, "E2^3");

    // E3: shortcut attachments and the hub star over the originals.
    for (int e = 0; e < m; ++e) {
        auto [i, j] = g.edges()[e];
        if (split) {
            b.add(i, u_base + 2 * e, "E3");
            b.add(u_base + 2 * e + 1, j, "E3");
        } else {
            b.add(i, u_base + e, "E3");
            b.add(u_base + e, j, "E3");
        }
    }
    for (int i = 0; i < n; ++i) b.add(hub, i, "E3");

    // E4^1: first-level wedge 2-paths.
    for (int w = 0; w < ne; ++w) {
        auto [i, j] = non[w];
        b.add(i, w1_base + 2 * w, "E4^1");
        b.add(w1_base + 2 * w, j, "E4^1");
        b.add(i, w1_base + 2 * w + 1, "E4^1");
        b.add(w1_base + 2 * w + 1, j, "E4^1");
    }

    // E4^2: second-level wedges; family i <= n hangs between v_i and the
    // appended vertex, the last family between v_n and the appended vertex.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 2; ++k) {
            b.add(i, w2_base + 2 * i + k, "E4^2");
            b.add(extra, w2_base + 2 * i + k, "E4^2");
        }
    for (int k = 0; k < 2; ++k) {
        b.add(n - 1, w2_base + 2 * n + k, "E4^2");
        b.add(extra, w2_base + 2 * n + k, "E4^2");
    }

    // E5: complete bipartite between the shortcut family and all wedges.
    for (int u : u_ids) {
        for (int x = 0; x < 2 * ne; ++x) b.add(u, w1_base + x, "E5");
        for (int y = 0; y < 2 * (n + 1); ++y) b.add(u, w2_base + y, "E5");
    }

    b.finish(inst, false);
    return inst;
}

// Wedge colour patterns shared by both lifts: superscript-1 vertices take
// c3 towards cliques/shortcuts, superscript-2 vertices c4.
void colour_wedge_edges(const ReductionInstance& inst, std::vector<int>& colour) {
    const Graph& g = inst.graph;
    const int n = inst.source.graph.order();
    const int extra = single_id_with_tag(inst, RoleTag::extra_v, "extra vertex");

    for (int idx = 0; idx < g.edge_count(); ++idx) {
        const std::string& cls = inst.edge_classes[idx];
        auto [x, y] = g.edges()[idx];
        if (cls == "E2^2" || cls == "E5") {
            // y is the wedge endpoint (wedge ids are above shortcut ids for
            // E5; for E2^2 the second-level wedge has the larger id).
            const VertexRole& role = inst.roles[y];
            colour[idx] = role.params[2] == 1 ? 3 : 4;
        } else if (cls == "E2^3") {
            const int k = inst.roles[x].params[2], l2 = inst.roles[y].params[2];
            colour[idx] = (k == l2) ? 3 : 4;
        } else if (cls == "E4^1") {
            const VertexRole& wedge = inst.roles[std::max(x, y)];
            const int other = std::min(x, y);
            const int i = wedge.params[0] - 1, s = wedge.params[2];
            if (other == i)
                colour[idx] = (s == 1) ? 1 : 2;  // towards v_i
            else
                colour[idx] = (s == 1) ? 3 : 4;  // towards v_j
        } else if (cls == "E4^2") {
            const VertexRole& wedge = inst.roles[std::max(x, y)];
            const int other = std::min(x, y);
            const int i = wedge.params[0] - 1, s = wedge.params[2];
            if (i < n) {
                if (other == i)
                    colour[idx] = (s == 1) ? 1 : 2;  // v_i side
                else
                    colour[idx] = (s == 1) ? 3 : 4;  // appended-vertex side
            } else {
                if (other == extra)
                    colour[idx] = (s == 1) ? 1 : 2;  // appended-vertex side
                else
                    colour[idx] = (s == 1) ? 3 : 4;  // v_n side
            }
        }
    }
}

}  // namespace

ReductionInstance reduce_vc_to_crx2_le4(const Graph& g) { return build_vc_to_crx2(g, false); }

EdgeColouring lift_vc_to_crx2_le4(const ReductionInstance& inst, const VertexColouring& vc) {
    require_problem(inst, "vertex-colouring", 4);
    const Graph& source = inst.source.graph;
    require_proper_with_palette(vc, source, 4);

    const Graph& g = inst.graph;
    const int hub = single_id_with_tag(inst, RoleTag::hub, "hub");
    std::vector<int> colour(g.edge_count(), 0);
    auto set = [&](int u, int v, int c) { colour[g.edge_index(u, v)] = c; };

    colour_wedge_edges(inst, colour);

    // Cliques on the shortcut family and the first wedge level carry the
    // inductive 3-colour pattern.
    const auto u_ids = [&] {
        auto ids = ids_with_tag(inst, RoleTag::edge_aux);
        ids.push_back(hub);
        std::sort(ids.begin(), ids.end());
        return ids;
    }();
    CliqueColours u_col(static_cast<int>(u_ids.size()));
    for (std::size_t x = 0; x < u_ids.size(); ++x)
        for (std::size_t y = x + 1; y < u_ids.size(); ++y)
            set(u_ids[x], u_ids[y], u_col.at(static_cast<int>(x), static_cast<int>(y)));

    const auto w1_ids = [&] {
        std::vector<int> ids;
        for (std::size_t v = 0; v < inst.roles.size(); ++v)
            if (inst.roles[v].tag == RoleTag::wedge &&
                inst.roles[v].params[1] - 1 < source.order())
                ids.push_back(static_cast<int>(v));
        return ids;
    }();
    CliqueColours w_col(static_cast<int>(w1_ids.size()));
    for (std::size_t x = 0; x < w1_ids.size(); ++x)
        for (std::size_t y = x + 1; y < w1_ids.size(); ++y)
            set(w1_ids[x], w1_ids[y], w_col.at(static_cast<int>(x), static_cast<int>(y)));

    // Hub star carries the vertex colours; each shortcut pair of edges takes
    // the two missing colours, making the 4-cycle through the hub rainbow.
    for (int i = 0; i < source.order(); ++i) set(hub, i, vc.colours[i]);
    for (std::size_t v = 0; v < inst.roles.size(); ++v)
        if (inst.roles[v].tag == RoleTag::edge_aux) {
            const auto& p = inst.roles[v].params;
            const int i = p[0] - 1, j = p[1] - 1;
            int a = 0, b2 = 0;
            for (int c = 1; c <= 4; ++c)
                if (c != vc.colours[i] && c != vc.colours[j]) (a == 0 ? a : b2) = c;
            set(i, static_cast<int>(v), a);
            set(static_cast<int>(v), j, b2);
        }

    return EdgeColouring(g, std::move(colour));
}

ReductionInstance reduce_vc_to_crx2_le5(const Graph& g) { return build_vc_to_crx2(g, true); }

EdgeColouring lift_vc_to_crx2_le5(const ReductionInstance& inst, const VertexColouring& vc) {
    require_problem(inst, "vertex-colouring", 5);
    const Graph& source = inst.source.graph;
    require_proper_with_palette(vc, source, 5);

    const Graph& g = inst.graph;
    const int hub = single_id_with_tag(inst, RoleTag::hub, "hub");
    std::vector<int> colour(g.edge_count(), 0);
    auto set = [&](int u, int v, int c) { colour[g.edge_index(u, v)] = c; };

    colour_wedge_edges(inst, colour);

    // The clique pattern is computed on one node per source edge plus the
    // hub and pulled back to the split shortcut vertices; edges between the
    // two halves of one split pair are excluded here and coloured by the
    // 5-cycle rule below.
    const int m = source.edge_count();
    std::vector<std::pair<int, int>> pair_ids(m, {-1, -1});  // by source edge index
    for (std::size_t v = 0; v < inst.roles.size(); ++v)
        if (inst.roles[v].tag == RoleTag::edge_aux) {
            const auto& p = inst.roles[v].params;
            const int e = source.edge_index(p[0] - 1, p[1] - 1);
            (p[2] == 1 ? pair_ids[e].first : pair_ids[e].second) = static_cast<int>(v);
        }
    CliqueColours u_col(m + 1);
    auto node_of = [&](int vertex) {
        if (vertex == hub) return m;
        const auto& p = inst.roles[vertex].params;
        return source.edge_index(p[0] - 1, p[1] - 1);
    };
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        if (inst.edge_classes[idx] != "E1") continue;
        auto [x, y] = g.edges()[idx];
        const int nx = node_of(x), ny = node_of(y);
        if (nx != ny) colour[idx] = u_col.at(std::min(nx, ny), std::max(nx, ny));
    }

    const auto w1_ids = [&] {
        std::vector<int> ids;
        for (std::size_t v = 0; v < inst.roles.size(); ++v)
            if (inst.roles[v].tag == RoleTag::wedge &&
                inst.roles[v].params[1] - 1 < source.order())
                ids.push_back(static_cast<int>(v));
        return ids;
    }();
    CliqueColours w_col(static_cast<int>(w1_ids.size()));
    for (std::size_t x = 0; x < w1_ids.size(); ++x)
        for (std::size_t y = x + 1; y < w1_ids.size(); ++y)
            set(w1_ids[x], w1_ids[y], w_col.at(static_cast<int>(x), static_cast<int>(y)));

    // Hub star, then each source edge's 3 free path edges take the three
    // missing colours in path order, making the 5-cycle through the hub
    // rainbow.
    for (int i = 0; i < source.order(); ++i) set(hub, i, vc.colours[i]);
    for (int e = 0; e < m; ++e) {
        auto [i, j] = source.edges()[e];
        auto [u1, u2] = pair_ids[e];
        std::vector<int> free;
        for (int c = 1; c <= 5; ++c)
            if (c != vc.colours[i] && c != vc.colours[j]) free.push_back(c);
        set(i, u1, free[0]);
        set(u1, u2, free[1]);
        set(u2, j, free[2]);
    }

    return EdgeColouring(g, std::move(colour));
}

ReductionInstance reduce_rpath_to_verify1(const Graph& g, const EdgeColouring& c, int s, int t) {
    const int n = g.order();
    if (n < 4)
        throw std::invalid_argument("construction needs order >= 4 (the ring degenerates below)");
    if (!g.has_vertex(s) || !g.has_vertex(t) || s == t)
        throw std::invalid_argument("invalid terminals");
    if (!(c.host() == g)) throw std::invalid_argument("colouring host mismatch");

    ReductionInstance inst;
    inst.source = {"rainbow-path", g, c, std::nullopt, std::nullopt, s, t};

    std::vector<int> ring_order;  // the non-terminals, ascending: v_1..v_{n-2}
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) ring_order.push_back(v);
    const int r = n - 2;
    const int u_base = n;
    const int w_base = n + r;
    GadgetBuilder b(w_base + 2 * n - 4);

    inst.roles.resize(b.order);
    for (int pos = 0; pos < r; ++pos) inst.roles[ring_order[pos]] = {RoleTag::original, {pos + 1}};
    inst.roles[s] = {RoleTag::s_orig, {}};
    inst.roles[t] = {RoleTag::t_orig, {}};
    for (int i = 0; i < r; ++i) inst.roles[u_base + i] = {RoleTag::bridge, {i + 1}};
    for (int i = 0; i < 2 * n - 4; ++i) inst.roles[w_base + i] = {RoleTag::ladder, {i + 1}};

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edges()[e];
        b.add(x, y, "source", c.colour_of_edge(e));
    }

    const int base = c.max_colour();
    // Ring v_1 u_1 v_2 u_2 ... v_{n-2} u_{n-2} v_1, one fresh colour per edge.
    for (int i = 1; i <= r - 1; ++i) {
        b.add(ring_order[i - 1], u_base + i - 1, "ring", base + 2 * i - 1);
        b.add(u_base + i - 1, ring_order[i], "ring", base + 2 * i);
    }
    b.add(ring_order[r - 1], u_base + r - 1, "ring", base + 2 * n - 5);
    b.add(u_base + r - 1, ring_order[0], "ring", base + 2 * n - 4);

    // Ladder s w_1 ... w_{2n-4} t, fresh colours in path order.
    b.add(s, w_base, "ladder", base + 1);
    for (int i = 1; i <= 2 * n - 5; ++i) b.add(w_base + i - 1, w_base + i, "ladder", base + i + 1);
    b.add(w_base + 2 * n - 5, t, "ladder", base + 2 * n - 3);

    b.finish(inst, true);
    return inst;
}

ReductionInstance reduce_kpathconn_to_kverify(const Graph& g, const EdgeColouring& c, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (!(c.host() == g)) throw std::invalid_argument("colouring host mismatch");
    const int n = g.order();

    ReductionInstance inst;
    inst.source = {"k-path-connectivity", g, c, std::nullopt, k, std::nullopt, std::nullopt};

    const int apex_a = n, apex_b = n + 1;
    GadgetBuilder b(n + 2);
    inst.roles.resize(b.order);
    for (int i = 0; i < n; ++i) inst.roles[i] = {RoleTag::original, {i + 1}};
    inst.roles[apex_a] = {RoleTag::apex, {1}};
    inst.roles[apex_b] = {RoleTag::apex, {2}};

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edges()[e];
        b.add(x, y, "source", c.colour_of_edge(e));
    }
    const int base = c.max_colour();
    for (int i = 0; i < n; ++i) {
        b.add(apex_a, i, "apex_a", base + 1);
        b.add(apex_b, i, "apex_b", base + 2);
    }
    b.add(apex_a, apex_b, "apex_ab", base + 3);

    b.finish(inst, true);
    return inst;
}

ReductionInstance reduce_rpath_to_3pathconn(const Graph& g, const EdgeColouring& c, int s, int t) {
    const int n = g.order();
    if (n < 4) throw std::invalid_argument("construction needs order >= 4");
    if (!g.has_vertex(s) || !g.has_vertex(t) || s == t)
        throw std::invalid_argument("invalid terminals");
    if (!(c.host() == g)) throw std::invalid_argument("colouring host mismatch");

    ReductionInstance inst;
    inst.source = {"rainbow-path", g, c, std::nullopt, std::nullopt, s, t};

    std::vector<int> vbar;  // the non-terminals, ascending: v_1..v_{n-2}
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) vbar.push_back(v);
    const int r = n - 2;
    const int u_base = n;                // u^1_i, u^2_i interleaved
    const int w_base = n + 2 * r;        // w^1_i, w^2_i interleaved
    const int s_hat = w_base + 2 * r;
    const int t_hat = s_hat + 1;
    GadgetBuilder b(t_hat + 1);

    inst.roles.resize(b.order);
    for (int pos = 0; pos < r; ++pos) inst.roles[vbar[pos]] = {RoleTag::original, {pos + 1}};
    inst.roles[s] = {RoleTag::s_orig, {}};
    inst.roles[t] = {RoleTag::t_orig, {}};
    for (int i = 0; i < r; ++i) {
        inst.roles[u_base + 2 * i] = {RoleTag::u_aux, {i + 1, 1}};
        inst.roles[u_base + 2 * i + 1] = {RoleTag::u_aux, {i + 1, 2}};
        inst.roles[w_base + 2 * i] = {RoleTag::w_aux, {i + 1, 1}};
        inst.roles[w_base + 2 * i + 1] = {RoleTag::w_aux, {i + 1, 2}};
    }
    inst.roles[s_hat] = {RoleTag::s_hat, {}};
    inst.roles[t_hat] = {RoleTag::t_hat, {}};

    for (int e = 0; e < g.edge_count(); ++e) {
        auto [x, y] = g.edges()[e];
        b.add(x, y, "source", c.colour_of_edge(e));
    }

    const int base = c.max_colour();
    auto u1 = [&](int i) { return u_base + 2 * i; };
    auto u2 = [&](int i) { return u_base + 2 * i + 1; };
    auto w1 = [&](int i) { return w_base + 2 * i; };
    auto w2 = [&](int i) { return w_base + 2 * i + 1; };

    for (int i = 0; i < r; ++i) {
        b.add(vbar[i], w1(i), "new1", base + 1);
        b.add(vbar[i], u2(i), "new2", base + 2);
        b.add(vbar[i], u1(i), "new3", base + 3);
        b.add(vbar[i], w2(i), "new6", base + 6);
        b.add(u1(i), u2(i), i == 0 ? "new5" : "new4", i == 0 ? base + 5 : base + 4);
        b.add(w1(i), w2(i), "new7", base + 7);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int a = 0; a < 2; ++a)
                for (int bb = 0; bb < 2; ++bb) {
                    b.add(u_base + 2 * i + a, u_base + 2 * j + bb, "new5", base + 5);
                    b.add(w_base + 2 * i + a, w_base + 2 * j + bb, "new8", base + 8);
                }

    b.add(s_hat, s, "new1", base + 1);
    b.add(t_hat, t, "new2", base + 2);
    b.add(u1(0), s_hat, "new3", base + 3);
    b.add(u1(0), s, "new3", base + 3);
    b.add(w1(0), s_hat, "new3", base + 3);
    b.add(w1(0), s, "new3", base + 3);
    b.add(u1(r - 1), t_hat, "new3", base + 3);
    b.add(u1(r - 1), t, "new3", base + 3);
    b.add(w1(r - 1), t_hat, "new3", base + 3);
    b.add(w1(r - 1), t, "new3", base + 3);

    b.finish(inst, true);
    return inst;
}

}  // namespace rcx
