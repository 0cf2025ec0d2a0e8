#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgb/signed_graph.hpp"

namespace sgb {

// Signed edge-weighted graph: nonzero integer weights, no loops.
struct WEdge {
    int u = 0;
    int v = 0;
    int w = 0;
};

struct WeightedSignedGraph {
    int n = 0;
    std::vector<WEdge> edges;

    WeightedSignedGraph() = default;
    explicit WeightedSignedGraph(int n_) : n(n_) {}

    int m() const { return static_cast<int>(edges.size()); }
    int add_edge(int u, int v, int w);
};

// Weights of magnitude exactly k are stored positive: the two-path gadget
// for +k and -k is the same graph.
int canonicalize_weight(int w, int k);

// true iff every cycle's weight sum is even
bool is_bipartite_weighted(const WeightedSignedGraph& h);
std::optional<std::vector<char>> weighted_bipartition(const WeightedSignedGraph& h);

// Replace each edge xy of weight w by two internally disjoint x-y paths,
// one of length |w| and sign sign(w), one of length 2k-|w| of opposite
// sign. A negative path carries its negative sign on the first edge from
// x. Original vertex ids are preserved.
SignedGraph barbar_expand(const WeightedSignedGraph& h, int k);

// Wideness test for a bipartite weighted triangle with |a|,|b|,|c| <= k
// and even sum: wide iff (abc < 0 and |a|+|b|+|c| >= 2k) or
// (abc > 0 and the two smaller magnitudes sum to at least the largest).
bool triangle_is_2k_wide(int a, int b, int c, int k);

// A vertex-labeled weighted clique bound to a parameter k. Pair weights
// are stored in a packed upper triangle over local indices.
struct WeightedClique {
    int k = 0;
    std::vector<int> labels;
    std::vector<int> weights;  // packed: pair (i,j), i<j, at index i*(2r-i-1)/2 + (j-i-1)

    int size() const { return static_cast<int>(labels.size()); }
    int pair_index(int i, int j) const;
    int weight(int i, int j) const { return weights[pair_index(i, j)]; }
    int& weight(int i, int j) { return weights[pair_index(i, j)]; }

    static WeightedClique from_weights(int k, std::vector<int> labels, std::vector<int> packed);
};

bool clique_is_bipartite(const WeightedClique& c);
bool clique_is_2k_wide(const WeightedClique& c);

// wide iff the expansion's negative girth is exactly 2k
bool is_2k_wide(const WeightedSignedGraph& h, int k);

// .swg text format: "swg <n> <m>" then m lines "u v w". Loading
// canonicalizes magnitude-k weights; *rewritten reports whether any
// weight changed.
WeightedSignedGraph read_swg(std::istream& in, int k, bool* rewritten = nullptr,
                             const std::string& source = "<stream>");
WeightedSignedGraph read_swg_file(const std::string& path, int k, bool* rewritten = nullptr);
void write_swg(std::ostream& out, const WeightedSignedGraph& h);

}  // namespace sgb
