#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgb/bounds.hpp"
#include "sgb/signed_graph.hpp"

namespace sgb {

struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int m() const { return static_cast<int>(edges.size()); }
    int add_edge(int u, int v);
    int degree(int v) const;  // loops count twice
};

// Planar multigraph with a rotation system: for each vertex, the cyclic
// order of its incident edge ends (a loop's id appears twice).
struct PlanarMap {
    Multigraph g;
    std::vector<std::vector<int>> rot;
};

// faces as cyclic dart sequences; dart 2e runs u->v, dart 2e+1 runs v->u
struct FaceSet {
    std::vector<std::vector<int>> face_darts;
    std::vector<int> face_of_dart;

    int count() const { return static_cast<int>(face_darts.size()); }
    std::vector<std::vector<int>> edge_cycles() const;
};

FaceSet faces_from_rotation(const PlanarMap& m);

// one dual vertex per face, dual edge i joins the faces of primal edge i
struct DualGraph {
    Multigraph g;
    std::vector<std::vector<int>> rot;  // induced rotation (edge ids, primal order around faces)
};

DualGraph dual_graph(const PlanarMap& m);

// Exact maximum matching (blossom contraction); multigraphs are matched
// on their simple support.
std::vector<int> maximum_matching_mates(const Multigraph& g);
std::optional<std::vector<int>> perfect_matching(const Multigraph& g);  // edge ids
// A set U with more odd components in G - U than |U|, when no perfect
// matching exists.
std::vector<int> tutte_violator(const Multigraph& g);

struct OddCutReport {
    bool ok = false;
    bool checked = false;
    std::vector<int> violator;  // odd vertex set with a small cut, when !ok
    int cut_size = -1;
};

// every edge cut (X, V\X) with |X| odd has at least r edges; exhaustive,
// guarded at 24 vertices
OddCutReport min_odd_cut_at_least(const Multigraph& g, int r);

struct EdgeColoring {
    int colors = 0;
    std::vector<int> color;  // per edge id
};

enum class ColorReject {
    not_connected,
    not_even_regular,
    odd_cut_too_small,
    no_perfect_matching,
    dual_not_partial_3tree,
};

struct EdgeColorError {
    ColorReject reason;
    std::string message;
};

// 2k-edge-color a 2k-regular planar map whose dual is a partial 3-tree:
// matching -> signed dual -> homomorphism to spc(2k-1) -> labels.
// Throws EdgeColorError on precondition failures, logic_error when an
// internal invariant breaks.
EdgeColoring edge_color(const PlanarMap& m, int k);

bool verify_edge_coloring(const Multigraph& g, const EdgeColoring& c, int r);

// .pm text format: "pm <n> <m>", m lines "u v", then n lines
// "rot <v>: <edge ids>".
PlanarMap read_pm(std::istream& in, const std::string& source = "<stream>");
PlanarMap read_pm_file(const std::string& path);
void write_pm(std::ostream& out, const PlanarMap& m);

}  // namespace sgb
