#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"

namespace rcx {

// Greedy decision procedure for "is there a 1-rainbow cycle colouring with
// 3 colours". Processes unfinished vertices in ascending order; for each it
// picks a pair of adjacent neighbours (preferring a pair whose joining edge
// is already coloured, ties broken lexicographically) and colours the
// triangle so that it is rainbow. Leftover edges get colour 1. Returns
// nullopt as soon as some vertex has no two adjacent neighbours, i.e. lies
// on no triangle; such a vertex cannot be on any rainbow cycle of length 3.
std::optional<EdgeColouring> decide_crx1_le3(const Graph& g);

enum class CrxMethod { exact_search, recognizer, constructive };

struct CrxResult {
    int value;
    EdgeColouring witness;
    CrxMethod method;
};

struct NotInFk {
    std::vector<int> witness_subset;
};

struct AboveCap {
    int cap;
};

using CrxOutcome = std::variant<CrxResult, NotInFk, AboveCap>;

// Exact k-rainbow cycle index by branch and bound over edge colour
// assignments. Colour symmetry is quotiented by canonical introduction: the
// colour of each edge may exceed the maximum colour used so far by at most
// one. Candidate assignments are verified at the leaves only. Searches
// colour counts upward from 3 (a rainbow cycle needs at least 3 colours);
// `upper` caps the search, defaulting to the edge count (an all-distinct
// colouring always works for members of the family).
CrxOutcome crx_exact(const Graph& g, int k, std::optional<int> upper = {});

// 3-colour colouring of the complete graph K_n under which any two vertices
// lie on a rainbow triangle. Built inductively: rainbow K_3, then each new
// vertex u is attached over a perfect matching of the previous graph (even
// order), or over a rainbow triangle plus a matching of the rest (odd
// order). All choices are lexicographic, so the output is deterministic.
EdgeColouring construct_2rainbow_complete(int n);

// The perfect-matching colouring of K_4 (three matchings, colours 1/2/3);
// every triangle of K_4 is rainbow under it.
EdgeColouring construct_3rainbow_k4();

// crx_2 equals 3 exactly for complete graphs of order >= 3: any non-adjacent
// pair only lies on cycles of length >= 4.
bool recognize_crx2_eq3(const Graph& g);

// crx_3 equals 3 exactly for K_3 and K_4.
bool recognize_crx3_eq3(const Graph& g);

// floor(k! * e) + 1, computed exactly as 1 + sum_{i=0..k} k!/i!. This is an
// upper bound for the smallest n such that every k-edge-colouring of K_n
// contains a monochromatic triangle. Throws for k < 1 and for k > 20
// (64-bit overflow).
std::uint64_t ramsey_upper_bound(int k);

// One-sided shortcut: true means crx_3(g) > 4 is forced by the order alone
// (order >= 66); false means no conclusion.
bool crx3_gt4_by_order(const Graph& g);

// First triangle (in lexicographic vertex order) whose three edges share a
// colour, or nullopt.
std::optional<Cycle> find_monochromatic_triangle(const EdgeColouring& c);

}  // namespace rcx
