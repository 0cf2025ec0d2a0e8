#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sgb {

// A signed multigraph. Loops and parallel edges are allowed; every edge
// carries a sign in {+1,-1}. Edge ids are dense 0..m-1 in insertion order.
struct Edge {
    int u = 0;
    int v = 0;
    int sign = +1;
};

struct SignedGraph {
    int n = 0;
    std::vector<Edge> edges;
    // vertex -> (other endpoint, edge id); a loop appears once, at its vertex
    std::vector<std::vector<std::pair<int, int>>> adj;

    SignedGraph() = default;
    explicit SignedGraph(int n_) : n(n_), adj(n_) {}

    int m() const { return static_cast<int>(edges.size()); }
    int add_edge(int u, int v, int sign);
    int degree(int v) const;  // loops count twice
    bool same_underlying(const SignedGraph& other) const;
};

// flip[v] != 0 means vertex v is switched.
struct Switching {
    std::vector<char> flip;

    static Switching none(int n) { return Switching{std::vector<char>(n, 0)}; }
    int pair_sign(int u, int v) const { return (flip[u] != flip[v]) ? -1 : +1; }
};

struct VertexMap {
    std::vector<int> image;
    Switching switching;  // applied to the source graph
};

struct CycleWitness {
    int length = 0;
    int sign = +1;
    std::vector<int> vertices;  // v0..v_{l-1}; edge i joins v_i and v_{(i+1)%l}
    std::vector<int> edge_ids;
};

enum class SignSel { positive, negative };
enum class ParitySel { even, odd, any };

SignedGraph switch_at(const SignedGraph& g, const Switching& s);

// Minimum length over simple cycles of the requested sign and parity.
// A negative loop has length 1, a negative digon length 2.
std::optional<CycleWitness> shortest_cycle(const SignedGraph& g, SignSel sign, ParitySel parity);
std::optional<int> negative_girth(const SignedGraph& g);

// Witness switching s with switch_at(g2, s) carrying the signature of g1,
// or nullopt when the signatures disagree on some cycle. Throws if the
// underlying multigraphs differ.
std::optional<Switching> switching_equivalence(const SignedGraph& g1, const SignedGraph& g2);

std::optional<std::vector<char>> bipartition(const SignedGraph& g);
std::optional<CycleWitness> odd_cycle(const SignedGraph& g);

// Signed walk distances via BFS on the double cover. At the unsigned
// distance itself every walk is a path, which is the only regime the
// rest of the library relies on.
std::optional<int> graph_distance(const SignedGraph& g, int x, int y);
std::optional<int> d_plus(const SignedGraph& g, int x, int y);
std::optional<int> d_minus(const SignedGraph& g, int x, int y);
// d(x,y) signed by a shortest path; positive on ties; 0 for x == y.
std::optional<int> algebraic_distance(const SignedGraph& g, int x, int y);

// Exhaustive backtracking oracle over (image, switching bit) pairs.
// Deterministic: vertices by descending degree then id, images by id,
// switching bit false first. Desk scale only.
std::optional<VertexMap> find_homomorphism(const SignedGraph& g, const SignedGraph& target);
bool verify_homomorphism(const SignedGraph& g, const SignedGraph& target, const VertexMap& f);

// A cycle of g that does not map to C_{-k}: a positive odd cycle, a
// negative cycle shorter than k, or a negative cycle whose length parity
// differs from k. nullopt when no such cycle exists.
std::optional<CycleWitness> contains_ok_element(const SignedGraph& g, int k);

// Every simple cycle, each listed once (desk scale; optional length cap).
std::vector<CycleWitness> all_cycles(const SignedGraph& g, int max_length = -1);

SignedGraph negative_cycle(int l);
SignedGraph positive_cycle(int l);
SignedGraph complete_graph(int n, int sign);
// vertices 0..p-1, all-negative edges between i,j with q <= |i-j| <= p-q circularly
SignedGraph circular_clique_all_negative(int p, int q);
// k5 | octahedron | wagner | c5prism, all-positive test fixtures
SignedGraph forbidden_minor_of_partial_3trees(const std::string& name);
SignedGraph named_graph(const std::string& name, const std::vector<int>& params);

// .sg text format: "sg <n> <m>" then m lines "u v s" with s in {+,-}.
// '#' starts a comment. Bit-exact round trip through write_sg.
SignedGraph read_sg(std::istream& in, const std::string& source = "<stream>");
SignedGraph read_sg_file(const std::string& path);
void write_sg(std::ostream& out, const SignedGraph& g);
std::string to_sg(const SignedGraph& g);

}  // namespace sgb
