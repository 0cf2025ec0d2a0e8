#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgb/bounds.hpp"
#include "sgb/signed_graph.hpp"
#include "sgb/weighted_graph.hpp"

namespace sgb {

// Signed projective cube of dimension n on vertex set Z_2^n: positive
// edges between vertices at Hamming distance 1 (labeled by the differing
// unit vector), negative edges between antipodal pairs (labeled J).
// Label indices: 0..n-1 for e_1..e_n, n for J.
struct SpcGraph {
    int dim = 0;
    SignedGraph graph;
    std::vector<int> label;  // per edge id
};

SpcGraph spc(int n);

// The complementary label subsets of a pair: S_plus collects the unit
// vectors where u and v differ (never J), S_minus the rest plus J.
struct PairPosition {
    int dim = 0;
    uint32_t plus_mask = 0;  // subset of {e_1..e_n}

    int plus_size() const;
    int minus_size() const;  // n + 1 - |S_plus|
    int algebraic_distance() const;
};

PairPosition spc_pair_position(int n, uint32_t u, uint32_t v);

// The complete distance graph of spc(2k-1), weights straight from pair
// positions; every pair lies on a common negative 2k-cycle, so cycle
// enumeration is bypassed.
DistanceGraph spc_distance_graph(int k);

// An automorphism of spc(n) together with the switching making it
// edge-sign preserving.
using SpcAutomorphism = VertexMap;

// Triple transitivity: when, for some switching of the roles, the
// |S_minus| profiles of (x,y,z) and (u,v,t) agree, returns a verified
// signed automorphism mapping x->u, y->v, z->t.
std::optional<SpcAutomorphism> spc_triple_automorphism(int n, std::array<uint32_t, 3> from,
                                                       std::array<uint32_t, 3> to);

// Realize a 2k-wide bipartite weighted K4 inside spc(2k-1): four vertices
// whose pairwise algebraic distances match the given weights (canonical).
std::array<uint32_t, 4> realize_k4_in_spc(int k, const WeightedClique& k4);

// Extended double cover: both copies x+, x- of each vertex, a negative
// edge x+x- per vertex, positive edges doubling positives straight and
// negatives crossed. Vertex x maps to ids x (plus copy) and x + n (minus).
SignedGraph edc(const SignedGraph& g);

}  // namespace sgb
