#include "sgb/ttree.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace sgb {

std::vector<std::vector<int>> CliqueSequence::cliques(int n) const {
    std::vector<std::vector<int>> out;
    int s = seed_size(n);
    std::vector<int> seed(order.begin(), order.begin() + s);
    std::sort(seed.begin(), seed.end());
    out.push_back(seed);
    for (size_t j = s; j < order.size(); j++) {
        std::vector<int> c = attach[j - s];
        c.push_back(order[j]);
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

namespace {

struct EliminationSearch {
    int n, t;
    std::vector<uint64_t> adjbit;  // simple support
    std::unordered_set<uint64_t> failed;

    EliminationSearch(const SignedGraph& g, int t_) : n(g.n), t(t_), adjbit(g.n, 0) {
        for (const auto& e : g.edges) {
            if (e.u == e.v) throw std::invalid_argument("recognize_partial_ttree: loops not allowed");
            adjbit[e.u] |= uint64_t(1) << e.v;
            adjbit[e.v] |= uint64_t(1) << e.u;
        }
    }

    // fill-neighborhood of v after eliminating S: vertices outside S
    // reachable from v through S-internal paths (order independent)
    uint64_t fill_nbrs(int v, uint64_t S) const {
        uint64_t reach = 0, frontier = adjbit[v];
        uint64_t seen = uint64_t(1) << v;
        while (frontier) {
            uint64_t fresh = frontier & ~seen;
            seen |= fresh;
            reach |= fresh & ~S;
            uint64_t nxt = 0;
            uint64_t inside = fresh & S;
            while (inside) {
                int w = __builtin_ctzll(inside);
                inside &= inside - 1;
                nxt |= adjbit[w];
            }
            frontier = nxt & ~seen;
        }
        return reach;
    }

    bool search(uint64_t S, int left, std::vector<int>& elim) {
        if (left == 0) return true;
        if (failed.count(S)) return false;
        // candidates ordered by (fill degree, id)
        std::vector<std::pair<int, int>> cand;
        for (int v = 0; v < n; v++) {
            if (S >> v & 1) continue;
            int d = __builtin_popcountll(fill_nbrs(v, S));
            if (d <= t) cand.push_back({d, v});
        }
        std::sort(cand.begin(), cand.end());
        for (auto [d, v] : cand) {
            elim.push_back(v);
            if (search(S | (uint64_t(1) << v), left - 1, elim)) return true;
            elim.pop_back();
        }
        failed.insert(S);
        return false;
    }
};

}  // namespace

std::optional<CliqueSequence> recognize_partial_ttree(const SignedGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("recognize_partial_ttree: t must be >= 1");
    if (g.n > 64) throw std::invalid_argument("recognize_partial_ttree: more than 64 vertices");
    if (g.n == 0) return CliqueSequence{t, {}, {}};
    EliminationSearch es(g, t);
    std::vector<int> elim;
    if (!es.search(0, g.n, elim)) return std::nullopt;

    CliqueSequence seq;
    seq.t = t;
    seq.order.assign(elim.rbegin(), elim.rend());
    int s = seq.seed_size(g.n);

    // replay in construction order, padding attach sets to size t from a
    // recorded clique that already contains them
    std::vector<std::vector<int>> recorded;
    {
        std::vector<int> seed(seq.order.begin(), seq.order.begin() + s);
        std::sort(seed.begin(), seed.end());
        recorded.push_back(seed);
    }
    for (int j = s; j < g.n; j++) {
        int v = seq.order[j];
        uint64_t eliminated = 0;
        for (int l = j + 1; l < g.n; l++) eliminated |= uint64_t(1) << seq.order[l];
        uint64_t nb = es.fill_nbrs(v, eliminated);
        std::vector<int> attach;
        for (int w = 0; w < g.n; w++)
            if (nb >> w & 1) attach.push_back(w);
        if (static_cast<int>(attach.size()) > t) throw std::logic_error("elimination width exceeded t on replay");
        if (static_cast<int>(attach.size()) < t) {
            const std::vector<int>* host = nullptr;
            for (const auto& c : recorded) {
                if (std::includes(c.begin(), c.end(), attach.begin(), attach.end())) {
                    host = &c;
                    break;
                }
            }
            if (!host) throw std::logic_error("attach set not inside any recorded clique");
            for (int w : *host) {
                if (static_cast<int>(attach.size()) == t) break;
                if (!std::binary_search(attach.begin(), attach.end(), w) && w != v) {
                    attach.insert(std::lower_bound(attach.begin(), attach.end(), w), w);
                }
            }
        }
        seq.attach.push_back(attach);
        std::vector<int> clique = attach;
        clique.insert(std::lower_bound(clique.begin(), clique.end(), v), v);
        recorded.push_back(clique);
    }
    return seq;
}

SimpleGraph complete_to_ttree(const SignedGraph& g, const CliqueSequence& seq) {
    if (static_cast<int>(seq.order.size()) != g.n)
        throw std::invalid_argument("complete_to_ttree: sequence size mismatch");
    int s = seq.seed_size(g.n);
    if (static_cast<int>(seq.attach.size()) != std::max(0, g.n - s))
        throw std::invalid_argument("complete_to_ttree: attach list size mismatch");
    {
        std::vector<char> seen(g.n, 0);
        for (int v : seq.order) {
            if (v < 0 || v >= g.n || seen[v]) throw std::invalid_argument("complete_to_ttree: order is not a permutation");
            seen[v] = 1;
        }
    }
    std::vector<std::vector<char>> have(g.n, std::vector<char>(g.n, 0));
    SimpleGraph out;
    out.n = g.n;
    auto add = [&](int a, int b) {
        if (a == b || have[a][b]) return;
        have[a][b] = have[b][a] = 1;
        out.edges.push_back({std::min(a, b), std::max(a, b)});
    };
    for (const auto& e : g.edges)
        if (e.u != e.v) add(e.u, e.v);
    // replay: the seed is filled completely; each later vertex must attach
    // to t vertices forming a clique among those already placed
    std::vector<char> placed(g.n, 0);
    for (int j = 0; j < s; j++) {
        placed[seq.order[j]] = 1;
        for (int l = 0; l < j; l++) add(seq.order[j], seq.order[l]);
    }
    for (int j = s; j < g.n; j++) {
        const auto& at = seq.attach[j - s];
        if (static_cast<int>(at.size()) != seq.t)
            throw std::invalid_argument("complete_to_ttree: attach set is not a t-subset");
        for (size_t a = 0; a < at.size(); a++) {
            if (at[a] < 0 || at[a] >= g.n || !placed[at[a]])
                throw std::invalid_argument("complete_to_ttree: attach vertex not yet placed");
            for (size_t b = a + 1; b < at.size(); b++)
                if (!have[at[a]][at[b]])
                    throw std::invalid_argument("complete_to_ttree: attach set is not a clique");
        }
        int v = seq.order[j];
        for (int w : at) add(v, w);
        placed[v] = 1;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

WeightedSignedGraph completion_weights(const SignedGraph& g, const CliqueSequence& seq, int k) {
    if (k < 1) throw std::invalid_argument("completion_weights: k must be >= 1");
    if (!bipartition(g)) throw std::invalid_argument("completion_weights: graph is not bipartite");
    auto girth = negative_girth(g);
    if (girth && *girth < 2 * k) throw std::invalid_argument("completion_weights: negative girth below 2k");
    for (int v = 1; v < g.n; v++)
        if (!graph_distance(g, 0, v)) throw std::invalid_argument("completion_weights: graph is not connected");

    SimpleGraph comp = complete_to_ttree(g, seq);
    WeightedSignedGraph h(g.n);
    for (auto [u, v] : comp.edges) {
        int d = *graph_distance(g, u, v);
        int w;
        if (d <= k) {
            w = *algebraic_distance(g, u, v);
            if (d < k) {
                // below k a tie would close a short negative walk
                auto dp = d_plus(g, u, v), dm = d_minus(g, u, v);
                if (dp && dm && *dp == d && *dm == d)
                    throw std::logic_error("completion_weights: signed tie below distance k");
            }
            w = canonicalize_weight(w, k);
        } else if ((d - k) % 2 == 0) {
            w = k;
        } else {
            w = k - 1;
            if (w == 0) throw std::logic_error("completion_weights: k-1 weight with k == 1");
        }
        h.add_edge(u, v, w);
    }
    return h;
}

std::string clique_sequence_to_json(const CliqueSequence& seq) {
    nlohmann::ordered_json j;
    j["t"] = seq.t;
    j["order"] = seq.order;
    j["attach"] = seq.attach;
    return j.dump(2) + "\n";
}

CliqueSequence clique_sequence_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CliqueSequence seq;
    seq.t = j.at("t").get<int>();
    seq.order = j.at("order").get<std::vector<int>>();
    seq.attach = j.at("attach").get<std::vector<std::vector<int>>>();
    return seq;
}

}  // namespace sgb
