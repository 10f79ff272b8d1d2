#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"

// Brute-force ground truth for the decisions made elsewhere in the library.
// Everything here is implemented by plain enumeration and shares no search
// code with the solver or the colouring verifier; it reads graphs and
// colourings through their public accessors only. Intended for desk-scale
// instances.
namespace rcx::oracle {

struct AboveCap {
    int cap;
};

struct NotInFk {
    std::vector<int> subset;
};

using ChiResult = std::variant<int, AboveCap>;
using CrxBruteResult = std::variant<int, AboveCap, NotInFk>;

// Chromatic number by exhaustive assignment with first-fit symmetry
// breaking (vertex i may use a colour at most one above the maximum used so
// far).
ChiResult chromatic_number(const Graph& g, int cap);

// Lexicographically first proper colouring with at most `colours` colours,
// or nullopt when none exists.
std::optional<VertexColouring> find_proper_colouring(const Graph& g, int colours);

// Ground-truth crx_k: enumerates every colouring of the edges with t
// colours (first edge pinned to colour 1) for t = 3..cap and returns the
// first t admitting a k-rainbow cycle colouring. Membership in the family
// is decided first by its own exhaustive cycle search.
CrxBruteResult crx_bruteforce(const Graph& g, int k, int cap);

// Exhaustive search over simple paths for a rainbow s-t path.
bool rainbow_path_exists(const Graph& g, const EdgeColouring& c, int s, int t);

// True when every k-subset of the vertices lies on some rainbow path;
// enumerates all rainbow paths and marks the subsets they cover.
bool k_rainbow_path_connected(const Graph& g, const EdgeColouring& c, int k);

}  // namespace rcx::oracle
