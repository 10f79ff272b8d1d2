#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"

namespace rcx {

// Role of a vertex inside a constructed instance. Parameters follow the
// 1-based labelling of the source instance (vertex indices, family indices,
// superscripts), so serialized instances diff cleanly against hand-written
// constructions.
enum class RoleTag {
    original,  // (i)    source vertex, or position among non-terminals
    hub,       //        star centre adjoined to all source vertices
    path_aux,  // (i,j,t) t-th interior vertex of the path replacing edge ij
    edge_aux,  // (i,j) or (i,j,s)  cycle shortcut vertex for edge ij
    wedge,     // (i,j,s) s-th parallel 2-path midpoint between v_i and v_j
    extra_v,   //        the appended vertex v_{n+1}
    s_hat,     //        terminal guard attached to s
    t_hat,     //        terminal guard attached to t
    s_orig,    //        the designated source vertex s
    t_orig,    //        the designated source vertex t
    ladder,    // (i)    i-th vertex of the fresh-coloured s-t ladder
    bridge,    // (i)    i-th vertex of the ring interleaving the non-terminals
    apex,      // (1|2)  the two adjacent vertices joined to every source vertex
    u_aux,     // (i,s)  u-side clique vertex of the path-connectivity gadget
    w_aux,     // (i,s)  w-side clique vertex of the path-connectivity gadget
};

struct VertexRole {
    RoleTag tag;
    std::vector<int> params;
    bool operator==(const VertexRole&) const = default;
};

// Description of the instance a reduction was built from. s and t are held
// 0-based like every other internal vertex id.
struct SourceInfo {
    std::string problem;
    Graph graph;
    std::optional<EdgeColouring> colouring;
    std::optional<int> l;
    std::optional<int> k;
    std::optional<int> s;
    std::optional<int> t;
};

struct ReductionInstance {
    Graph graph;
    std::vector<VertexRole> roles;          // indexed by gadget vertex
    std::vector<std::string> edge_classes;  // indexed by gadget edge
    SourceInfo source;
    std::optional<EdgeColouring> base_colouring;
};

// --- vertex colouring -> 1-rainbow cycle colouring with l colours (l >= 4)
//
// Star centre a over the originals; every source edge v_i v_j becomes a
// path of length l-2 through fresh interior vertices; every source non-edge
// becomes two parallel 2-paths. A proper l-colouring of the source lifts to
// an l-colour edge colouring under which every vertex lies on a rainbow
// cycle; conversely the hub-edge colours of any valid colouring read off a
// proper vertex colouring. Requires order >= 2; the lift guarantee needs at
// least one source edge (on an edgeless source a constant proper colouring
// leaves the hub without a rainbow cycle).
ReductionInstance reduce_vc_to_crx1(const Graph& g, int l);
EdgeColouring lift_vc_to_crx1(const ReductionInstance& inst, const VertexColouring& vc);

// Vertex colouring read off the hub edges: vertex i gets the colour of the
// edge between the hub and v_i. No properness guarantee.
VertexColouring extract_vertex_colouring(const ReductionInstance& inst, const EdgeColouring& c);

// --- vertex colouring -> 2-rainbow cycle colouring with 4 colours
//
// Originals stay independent; each source edge gets a single shortcut
// vertex so that v_i u_{i,j} v_j a v_i is the unique short cycle through the
// pair; cliques on the shortcut and wedge families plus a two-level wedge
// ladder over an appended vertex keep every other pair on a short rainbow
// cycle.
ReductionInstance reduce_vc_to_crx2_le4(const Graph& g);
EdgeColouring lift_vc_to_crx2_le4(const ReductionInstance& inst, const VertexColouring& vc);

// --- vertex colouring -> 2-rainbow cycle colouring with 5 colours
//
// Same construction with each edge shortcut split in two, forcing every
// cycle of length <= 5 through a source pair over both hub edges.
ReductionInstance reduce_vc_to_crx2_le5(const Graph& g);
EdgeColouring lift_vc_to_crx2_le5(const ReductionInstance& inst, const VertexColouring& vc);

// --- rainbow s-t path -> verifying a 1-rainbow cycle colouring
//
// Keeps the source colouring, adds a rainbow ring joining the non-terminal
// vertices through fresh bridges and a fresh-coloured ladder from s to t;
// the ladder vertices lie on a rainbow cycle exactly when the source has a
// rainbow s-t path. Requires order >= 4 (with 3 vertices the ring
// degenerates to a parallel edge).
ReductionInstance reduce_rpath_to_verify1(const Graph& g, const EdgeColouring& c, int s, int t);

// --- k-subset rainbow-path connectivity -> verifying a k-rainbow cycle
// colouring (k >= 2): adds two adjacent apexes joined to every source
// vertex, each apex star in its own fresh colour.
ReductionInstance reduce_kpathconn_to_kverify(const Graph& g, const EdgeColouring& c, int k);

// --- rainbow s-t path -> 3-subset rainbow-path connectivity
//
// Every non-terminal v_i grows two u-vertices and two w-vertices; the u and
// w families form cliques; guards s-hat/t-hat attach near s and t. Eight
// fresh colour classes route every 3-subset through a rainbow path exactly
// when the source has a rainbow s-t path. Requires order >= 4.
ReductionInstance reduce_rpath_to_3pathconn(const Graph& g, const EdgeColouring& c, int s, int t);

}  // namespace rcx
