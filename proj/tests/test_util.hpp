#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "sgb/bounds.hpp"
#include "sgb/signed_graph.hpp"
#include "sgb/weighted_graph.hpp"

namespace sgbtest {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline sgb::SignedGraph random_multigraph(Rng& rng, int max_n, int max_m, bool allow_loops = true) {
    int n = rand_int(rng, 1, max_n);
    int m = rand_int(rng, 0, max_m);
    sgb::SignedGraph g(n);
    for (int i = 0; i < m; i++) {
        int u = rand_int(rng, 0, n - 1);
        int v = rand_int(rng, 0, n - 1);
        if (!allow_loops && u == v) continue;
        g.add_edge(u, v, rand_int(rng, 0, 1) ? 1 : -1);
    }
    return g;
}

inline sgb::Switching random_switching(Rng& rng, int n) {
    sgb::Switching s = sgb::Switching::none(n);
    for (int v = 0; v < n; v++) s.flip[v] = static_cast<char>(rand_int(rng, 0, 1));
    return s;
}

// signed isomorphism by permutation search: underlying match plus a
// switching-equivalent pulled-back signature (simple graphs)
inline bool signed_isomorphic(const sgb::SignedGraph& g, const sgb::SignedGraph& h) {
    if (g.n != h.n || g.m() != h.m()) return false;
    std::map<std::pair<int, int>, int> hsign;
    for (auto& e : h.edges) {
        auto key = std::minmax(e.u, e.v);
        if (hsign.count({key.first, key.second})) return false;
        hsign[{key.first, key.second}] = e.sign;
    }
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        sgb::SignedGraph pulled(g.n);
        bool ok = true;
        for (auto& e : g.edges) {
            auto key = std::minmax(perm[e.u], perm[e.v]);
            auto it = hsign.find({key.first, key.second});
            if (it == hsign.end()) {
                ok = false;
                break;
            }
            pulled.add_edge(e.u, e.v, it->second);
        }
        if (ok && sgb::switching_equivalence(g, pulled).has_value()) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// reference homomorphism decision: every (image, switching) pair
inline bool brute_force_hom(const sgb::SignedGraph& g, const sgb::SignedGraph& b) {
    if (g.n == 0) return true;
    if (b.n == 0) return false;
    std::vector<int> image(g.n, 0);
    for (;;) {
        for (int sw = 0; sw < (1 << g.n); sw++) {
            sgb::VertexMap f;
            f.image = image;
            f.switching = sgb::Switching::none(g.n);
            for (int v = 0; v < g.n; v++) f.switching.flip[v] = static_cast<char>(sw >> v & 1);
            if (sgb::verify_homomorphism(g, b, f)) return true;
        }
        int at = 0;
        while (at < g.n && ++image[at] == b.n) image[at++] = 0;
        if (at == g.n) return false;
    }
}

// random 2k-wide bipartite weighted t-tree built by attaching list
// patterns; expanding it yields a bipartite partial t-tree of negative
// girth exactly 2k
inline sgb::WeightedSignedGraph random_wide_ttree(Rng& rng, const sgb::WideCliqueList& list, int extra_vertices) {
    int t = list.t, k = list.k, r = t + 1;
    auto pick_shape = list.shapes[rand_int(rng, 0, static_cast<int>(list.shapes.size()) - 1)];
    auto pidx = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * (2 * r - i - 1) / 2 + (j - i - 1);
    };
    int n = r;
    std::vector<std::vector<int>> w(r + extra_vertices, std::vector<int>(r + extra_vertices, 0));
    for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++) w[i][j] = w[j][i] = pick_shape[pidx(i, j)];
    std::vector<std::vector<int>> cliques{{}};
    cliques[0].resize(r);
    for (int i = 0; i < r; i++) cliques[0][i] = i;

    for (int step = 0; step < extra_vertices; step++) {
        // a random t-subset of a random existing clique
        const auto& host = cliques[rand_int(rng, 0, static_cast<int>(cliques.size()) - 1)];
        std::vector<int> sub = host;
        sub.erase(sub.begin() + rand_int(rng, 0, r - 1));
        // random valid pattern over it
        std::vector<int> vals;
        for (int mgn = 1; mgn <= k; mgn++) {
            vals.push_back(mgn);
            if (mgn < k) vals.push_back(-mgn);
        }
        std::vector<int> star(t, 0);
        std::vector<std::vector<int>> options;
        auto rec = [&](auto&& self, int at) -> void {
            if (at == t) {
                options.push_back(star);
                return;
            }
            for (int v : vals) {
                star[at] = v;
                bool ok = true;
                for (int i = 0; i < at && ok; i++) {
                    int wij = w[sub[i]][sub[at]];
                    if ((star[i] + v + wij) % 2 != 0 || !sgb::triangle_is_2k_wide(star[i], v, wij, k)) ok = false;
                }
                if (ok) self(self, at + 1);
            }
        };
        rec(rec, 0);
        if (options.empty()) continue;
        const auto& chosen = options[rand_int(rng, 0, static_cast<int>(options.size()) - 1)];
        int z = n++;
        std::vector<int> cl;
        for (int i = 0; i < t; i++) {
            w[sub[i]][z] = w[z][sub[i]] = chosen[i];
            cl.push_back(sub[i]);
        }
        cl.push_back(z);
        std::sort(cl.begin(), cl.end());
        cliques.push_back(cl);
    }
    sgb::WeightedSignedGraph h(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (w[i][j] != 0) h.add_edge(i, j, w[i][j]);
    return h;
}

}  // namespace sgbtest
