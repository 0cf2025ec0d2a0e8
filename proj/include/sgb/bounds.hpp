#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgb/signed_graph.hpp"
#include "sgb/ttree.hpp"
#include "sgb/weighted_graph.hpp"

namespace sgb {

// All 2k-wide bipartite (t+1)-clique weight matrices over the canonical
// domain {±1..±(k-1), +k}, deduplicated up to vertex permutation. Shapes
// are packed upper triangles in canonical (lexicographically least) form.
struct WideCliqueList {
    int t = 0;
    int k = 0;
    std::vector<std::vector<int>> shapes;
};

WideCliqueList enumerate_wide_cliques(int t, int k);

// canonical form of a packed (t+1)-clique weight matrix under vertex
// permutations (weights already canonicalized)
std::vector<int> canonical_shape(int r, const std::vector<int>& packed);

// Weighted graph on the vertices of a signed bipartite graph B of
// negative girth exactly 2k: an edge for every pair on a common negative
// 2k-cycle, weighted by the (canonical) algebraic distance.
struct DistanceGraph {
    SignedGraph base;
    int k = 0;
    std::vector<std::vector<int>> w;  // 0 encodes a non-edge

    int n() const { return base.n; }
    bool has_edge(int a, int b) const { return w[a][b] != 0; }
    int weight(int a, int b) const { return w[a][b]; }
    WeightedSignedGraph weighted_view() const;
};

DistanceGraph build_distance_graph(const SignedGraph& b, int k);

// Vertex-labeled (t+1)-cliques of a distance graph, sorted.
struct CliqueSet {
    int t = 0;
    std::vector<std::vector<int>> cliques;  // each sorted ascending
};

CliqueSet all_cliques(const DistanceGraph& d, int t);

struct DefectPattern {
    std::vector<int> t_subset;  // sorted vertex ids of the distance graph
    std::vector<int> weights;   // required star, aligned with t_subset
};

struct Defect {
    std::vector<int> clique;
    DefectPattern why;
};

// Closedness engine. A pattern over a t-subset T is required when the
// completed (t+1)-matrix lies in L; it is satisfied by a vertex u with
// T+u in the set whose star equals the pattern or its negation (the new
// vertex's switching bit), weights canonical. Returns one defect per
// clique that has an unsatisfied pattern on one of its t-subsets.
std::vector<Defect> closedness_defects(const DistanceGraph& d, const CliqueSet& w, const WideCliqueList& list,
                                       int threads = 1);

struct PruneTrace {
    struct Removal {
        int round = 0;
        std::vector<int> clique;
        DefectPattern why;
    };
    std::vector<Removal> removals;
    int rounds = 0;
};

// Iterate removal of all defective cliques until the fixed point: the
// unique maximal closed subset.
std::pair<CliqueSet, PruneTrace> prune_to_closed(const DistanceGraph& d, const CliqueSet& w0,
                                                 const WideCliqueList& list, int threads = 1,
                                                 bool one_per_round = false);

struct BoundVerdict {
    bool bounds = false;
    CliqueSet certificate;          // YES: nonempty closed set
    PruneTrace trace;               // NO: the pruning history
    SignedGraph counterexample;     // NO: bipartite partial t-tree, girth >= 2k, no hom to B
    bool counterexample_verified = false;
};

BoundVerdict check_bound(const SignedGraph& b, int t, int k, int threads = 1);

// Trace-driven counterexample. Also returns the weighted t-tree it
// expands. oracle_budget caps the size at which find_homomorphism is run.
struct Counterexample {
    WeightedSignedGraph tree;
    SignedGraph graph;
    bool verified = false;
};

Counterexample build_counterexample(const DistanceGraph& d, const PruneTrace& trace, const WideCliqueList& list,
                                    int t, int k, int oracle_budget = 40);

// Map a signed bipartite partial t-tree into the base of the certificate
// along its clique sequence. Aborts (logic_error) if the certificate
// fails to supply a seed copy or an extension, which contradicts
// closedness.
VertexMap map_partial_ttree(const SignedGraph& g, const CliqueSequence& seq, const DistanceGraph& d,
                            const CliqueSet& certificate);

// A member of the certificate isomorphic (in the signed sense) to the
// shape; direct search is the production path.
std::optional<std::vector<int>> find_isomorphic_copy(const std::vector<int>& shape, const DistanceGraph& d,
                                                     const CliqueSet& certificate);

// Reach an isomorphic copy by re-weighting one vertex star at a time
// through the all-even clique and back. The direct search above is the
// production path; the walk exists to be tested.
std::optional<std::vector<int>> isomorphic_copy_walk(const std::vector<int>& shape, const DistanceGraph& d,
                                            const CliqueSet& certificate, int step_limit = 10000);

std::string certificate_to_json(const DistanceGraph& d, const CliqueSet& cert, int k,
                                const std::string& base_ref);
CliqueSet certificate_from_json(const std::string& text, int* t = nullptr, int* k = nullptr,
                                std::string* base_ref = nullptr);
std::string trace_to_json(const PruneTrace& trace);
std::string vertex_map_to_json(const VertexMap& f);

}  // namespace sgb
