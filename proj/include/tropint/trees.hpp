#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropint/orderings.hpp"

namespace tropint {

// Leaf subset as a bitmask: bit (k-1) stands for label k.
using Mask = std::uint32_t;

inline Mask label_bit(int label) { return Mask{1} << (label - 1); }
inline Mask full_mask(int n) { return (Mask{1} << n) - 1; }

// A split (internal tree edge) stored by its canonical side: the side that
// does not contain label n. 2 <= popcount <= n-2.
struct Split {
    int n = 0;
    Mask members = 0;

    Split() = default;
    Split(int n_, Mask side);  // flips to the n-free side, validates size

    auto operator<=>(const Split&) const = default;
};

// Two canonical splits coexist in a tree iff one contains the other or they
// are disjoint.
bool splits_compatible(Mask a, Mask b);

// An unrooted binary tree with n labeled leaves, identified with its set of
// n-3 canonical splits (sorted by mask value).
struct Tree {
    int n = 0;
    std::vector<Mask> splits;

    // Text form: sorted splits as label sets, e.g. "{1,2}|{1,2,3}".
    std::string str() const;

    auto operator<=>(const Tree&) const = default;
};

// A tree with exactly one degree-4 internal vertex: n-4 compatible splits.
struct DegenerateTree {
    int n = 0;
    std::vector<Mask> splits;

    // For n=5 the text form is "(ab)(cde)" with a<b and c<d<e.
    std::string str() const;

    auto operator<=>(const DegenerateTree&) const = default;
};

// Tree reconstructed from a pairwise-compatible split family (not
// necessarily binary). Vertex 0 is the one leaf-n attaches to; vertex i+1
// sits below splits[i]. branches[v] lists, for each edge at v, the leaf set
// on the far side.
struct SplitTreeStructure {
    int n = 0;
    std::vector<Mask> splits;                 // as passed in, sorted
    std::vector<std::vector<Mask>> branches;  // per vertex
};

SplitTreeStructure structure_from_splits(int n, std::vector<Mask> splits);

// All (2n-5)!! unrooted binary trees, built by attaching leaf k+1 to every
// edge of every k-leaf tree. 4 <= n <= 8 (10395 trees at n=8).
std::vector<Tree> enumerate_all_trees(int n);

// True iff every split of t is a contiguous arc of the cyclic order o.
bool is_planar(const Tree& t, const Ordering& o);

// The C_{n-2} binary trees planar with respect to o, via the bijection with
// triangulations of the n-gon whose sides follow o.
std::vector<Tree> enumerate_planar(const Ordering& o);

// All trees with exactly one degree-4 vertex, 4 <= n <= 7.
std::vector<DegenerateTree> enumerate_codim1(int n);

// The three binary trees refining d (the three pairings of the four
// branches at its degree-4 vertex).
std::vector<Tree> smoothings(const DegenerateTree& d);

// Link of the origin for n=5: vertices are the 10 degenerate trees, edges
// the 15 binary trees, each joining the two degenerate trees it smooths.
struct LinkGraph {
    std::vector<DegenerateTree> vertices;
    // edges[i] = (u, v, tree); u < v index into vertices
    std::vector<std::tuple<int, int, Tree>> edges;

    std::vector<int> degrees() const;
    int girth() const;
    // Indices of the edges carrying the planar trees of o, in catalog order.
    std::vector<int> edges_of(const Ordering& o) const;
    // True iff the given edge subset forms a single cycle on 5 vertices.
    bool is_five_cycle(const std::vector<int>& edge_ids) const;
};

LinkGraph link_graph5();

// Unordered label pairs adjacent in both cyclic orders.
std::vector<std::pair<int, int>> common_cherries(const Ordering& a, const Ordering& b);

}  // namespace tropint
