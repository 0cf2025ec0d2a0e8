#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgb/signed_graph.hpp"
#include "sgb/weighted_graph.hpp"

namespace sgb {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Construction order for a t-tree completion: order[0..s-1] is the seed
// clique (s = min(t+1, n)); for j >= s, order[j] attaches to the t-clique
// attach[j-s], which is complete in the partial completion built so far.
struct CliqueSequence {
    int t = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> attach;

    int seed_size(int n) const { return std::min(t + 1, n); }
    // the (t+1)-cliques: seed first, then one per attached vertex
    std::vector<std::vector<int>> cliques(int n) const;
};

// Exact treewidth <= t recognition by memoized elimination search
// (eliminate a vertex whose fill-degree is <= t, fill its neighborhood,
// backtrack over choices). Parallel edges are collapsed, loops rejected.
// Desk scale: n <= 64.
std::optional<CliqueSequence> recognize_partial_ttree(const SignedGraph& g, int t);

SimpleGraph complete_to_ttree(const SignedGraph& g, const CliqueSequence& seq);

// Distance weights on the completion edges of a connected signed
// bipartite graph of negative girth >= 2k: the algebraic distance when
// d <= k, else k or k-1 matching the parity of d.
WeightedSignedGraph completion_weights(const SignedGraph& g, const CliqueSequence& seq, int k);

std::string clique_sequence_to_json(const CliqueSequence& seq);
CliqueSequence clique_sequence_from_json(const std::string& text);

}  // namespace sgb
