#include "sgb/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sgb {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int sign_bit(int sign) { return sign < 0 ? 1 : 0; }

}  // namespace

int SignedGraph::add_edge(int u, int v, int sign) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("add_edge: endpoint out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("add_edge: sign must be +1 or -1");
    int id = m();
    edges.push_back({u, v, sign});
    adj[u].push_back({v, id});
    if (u != v) adj[v].push_back({u, id});
    return id;
}

int SignedGraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.u == v) d++;
        if (e.v == v) d++;
    }
    return d;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
    if (n != other.n || m() != other.m()) return false;
    for (int i = 0; i < m(); i++) {
        int a = std::min(edges[i].u, edges[i].v), b = std::max(edges[i].u, edges[i].v);
        int c = std::min(other.edges[i].u, other.edges[i].v), d = std::max(other.edges[i].u, other.edges[i].v);
        if (a != c || b != d) return false;
    }
    return true;
}

SignedGraph switch_at(const SignedGraph& g, const Switching& s) {
    if (static_cast<int>(s.flip.size()) != g.n) throw std::invalid_argument("switch_at: switching size mismatch");
    SignedGraph out(g.n);
    for (const auto& e : g.edges) out.add_edge(e.u, e.v, e.sign * s.pair_sign(e.u, e.v));
    return out;
}

namespace {

// BFS on the signed double cover. State 2*v + sheet, sheet flips on
// negative edges. Returns distances and the (vertex, edge) parents.
struct CoverBfs {
    std::vector<int> dist;
    std::vector<int> par_state;
    std::vector<int> par_edge;

    CoverBfs(const SignedGraph& g, int source_state) {
        int sz = 2 * g.n;
        dist.assign(sz, kInf);
        par_state.assign(sz, -1);
        par_edge.assign(sz, -1);
        std::deque<int> q;
        dist[source_state] = 0;
        q.push_back(source_state);
        while (!q.empty()) {
            int st = q.front();
            q.pop_front();
            int v = st / 2, sheet = st % 2;
            for (auto [w, eid] : g.adj[v]) {
                const Edge& e = g.edges[eid];
                if (e.u == e.v && e.sign > 0) continue;  // positive loop: no move
                int ns = 2 * w + (sheet ^ sign_bit(e.sign));
                if (dist[ns] > dist[st] + 1) {
                    dist[ns] = dist[st] + 1;
                    par_state[ns] = st;
                    par_edge[ns] = eid;
                    q.push_back(ns);
                }
            }
        }
    }
};

CycleWitness make_witness(const SignedGraph& g, std::vector<int> verts, std::vector<int> eids) {
    CycleWitness w;
    w.vertices = std::move(verts);
    w.edge_ids = std::move(eids);
    w.length = static_cast<int>(w.edge_ids.size());
    w.sign = 1;
    for (int id : w.edge_ids) w.sign *= g.edges[id].sign;
    return w;
}

// Splits a closed walk (v0..vk == v0 via eids) into simple cycles.
std::vector<CycleWitness> decompose_closed_walk(const SignedGraph& g, const std::vector<int>& verts,
                                                const std::vector<int>& eids) {
    std::vector<CycleWitness> out;
    std::vector<int> sv, se;  // stacked walk prefix
    std::vector<int> pos(g.n, -1);
    sv.push_back(verts[0]);
    pos[verts[0]] = 0;
    for (size_t i = 0; i < eids.size(); i++) {
        int nxt = verts[i + 1];
        se.push_back(eids[i]);
        if (pos[nxt] >= 0) {
            int at = pos[nxt];
            std::vector<int> cv(sv.begin() + at, sv.end());
            std::vector<int> ce(se.begin() + at, se.end());
            for (size_t j = at + 1; j < sv.size(); j++) pos[sv[j]] = -1;
            sv.resize(at + 1);
            se.resize(at);
            if (ce.size() == 2 && ce[0] == ce[1]) continue;  // edge walked back and forth
            out.push_back(make_witness(g, std::move(cv), std::move(ce)));
        } else {
            sv.push_back(nxt);
            pos[nxt] = static_cast<int>(sv.size()) - 1;
        }
    }
    return out;
}

std::optional<CycleWitness> shortest_negative_cycle(const SignedGraph& g) {
    int best = kInf, best_v = -1;
    std::optional<CoverBfs> best_bfs;
    for (int v = 0; v < g.n; v++) {
        CoverBfs bfs(g, 2 * v);
        if (bfs.dist[2 * v + 1] < best) {
            best = bfs.dist[2 * v + 1];
            best_v = v;
            best_bfs.emplace(std::move(bfs));
        }
    }
    if (best >= kInf) return std::nullopt;
    std::vector<int> verts, eids;
    int st = 2 * best_v + 1;
    while (st != 2 * best_v) {
        verts.push_back(st / 2);
        eids.push_back(best_bfs->par_edge[st]);
        st = best_bfs->par_state[st];
        if (st < 0) throw std::logic_error("double cover parent chain broken");
    }
    verts.push_back(best_v);
    std::reverse(verts.begin(), verts.end());
    std::reverse(eids.begin(), eids.end());
    // A globally minimal negative closed walk is a simple cycle; decompose
    // and pick the negative piece rather than assuming it.
    auto pieces = decompose_closed_walk(g, verts, eids);
    for (auto& c : pieces)
        if (c.sign < 0) return c;
    throw std::logic_error("negative walk decomposed into positive cycles");
}

bool matches(const CycleWitness& c, SignSel sign, ParitySel parity) {
    if (sign == SignSel::positive && c.sign < 0) return false;
    if (sign == SignSel::negative && c.sign > 0) return false;
    if (parity == ParitySel::even && c.length % 2 != 0) return false;
    if (parity == ParitySel::odd && c.length % 2 != 1) return false;
    return true;
}

}  // namespace

std::optional<CycleWitness> shortest_cycle(const SignedGraph& g, SignSel sign, ParitySel parity) {
    if (sign == SignSel::negative && parity == ParitySel::any) return shortest_negative_cycle(g);

    std::optional<CycleWitness> best;
    auto consider = [&](CycleWitness c) {
        if (!matches(c, sign, parity)) return;
        if (!best || c.length < best->length) best = std::move(c);
    };
    for (int id = 0; id < g.m(); id++)
        if (g.edges[id].u == g.edges[id].v)
            consider(make_witness(g, {g.edges[id].u}, {id}));

    // exact DFS over simple cycles, min-id vertex used as the anchor
    std::vector<char> onpath(g.n, 0);
    std::vector<int> pv, pe;
    for (int s = 0; s < g.n; s++) {
        // unsigned distances to s over vertices >= s, for pruning
        std::vector<int> dist(g.n, kInf);
        std::deque<int> q;
        dist[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, eid] : g.adj[v])
                if (w >= s && dist[w] > dist[v] + 1) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
        }
        pv.assign(1, s);
        pe.clear();
        onpath[s] = 1;
        auto dfs = [&](auto&& self, int u) -> void {
            for (auto [w, eid] : g.adj[u]) {
                if (g.edges[eid].u == g.edges[eid].v) continue;
                if (w == s && !pe.empty() && eid != pe.front()) {
                    auto ce = pe;
                    ce.push_back(eid);
                    consider(make_witness(g, pv, ce));
                } else if (w > s && !onpath[w]) {
                    int len = static_cast<int>(pe.size()) + 1;
                    if (best && len + dist[w] >= best->length) continue;
                    onpath[w] = 1;
                    pv.push_back(w);
                    pe.push_back(eid);
                    self(self, w);
                    pe.pop_back();
                    pv.pop_back();
                    onpath[w] = 0;
                }
            }
        };
        dfs(dfs, s);
        onpath[s] = 0;
    }
    return best;
}

std::optional<int> negative_girth(const SignedGraph& g) {
    auto c = shortest_cycle(g, SignSel::negative, ParitySel::any);
    if (!c) return std::nullopt;
    return c->length;
}

std::optional<Switching> switching_equivalence(const SignedGraph& g1, const SignedGraph& g2) {
    if (!g1.same_underlying(g2)) throw std::invalid_argument("switching_equivalence: underlying graphs differ");
    std::vector<int> tau(g1.m());
    for (int i = 0; i < g1.m(); i++) {
        tau[i] = g1.edges[i].sign * g2.edges[i].sign;
        if (g1.edges[i].u == g1.edges[i].v && tau[i] < 0) return std::nullopt;
    }
    Switching s = Switching::none(g1.n);
    std::vector<char> seen(g1.n, 0);
    for (int root = 0; root < g1.n; root++) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, eid] : g1.adj[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                s.flip[w] = static_cast<char>(s.flip[v] ^ (tau[eid] < 0 ? 1 : 0));
                q.push_back(w);
            }
        }
    }
    for (int i = 0; i < g1.m(); i++)
        if (s.pair_sign(g1.edges[i].u, g1.edges[i].v) != tau[i]) return std::nullopt;
    return s;
}

std::optional<std::vector<char>> bipartition(const SignedGraph& g) {
    std::vector<char> color(g.n, -1);
    for (int root = 0; root < g.n; root++) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, eid] : g.adj[v]) {
                if (v == w) return std::nullopt;  // loop
                if (color[w] < 0) {
                    color[w] = static_cast<char>(1 - color[v]);
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::optional<CycleWitness> odd_cycle(const SignedGraph& g) {
    std::vector<int> depth(g.n, -1), par(g.n, -1), pedge(g.n, -1);
    for (int root = 0; root < g.n; root++) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, eid] : g.adj[v]) {
                if (v == w) return make_witness(g, {v}, {eid});
                if (depth[w] < 0) {
                    depth[w] = depth[v] + 1;
                    par[w] = v;
                    pedge[w] = eid;
                    q.push_back(w);
                } else if ((depth[w] + depth[v]) % 2 == 0 && eid != pedge[w] && eid != pedge[v]) {
                    // climb to the common ancestor; the fundamental cycle is odd
                    std::vector<int> lv{v}, rv{w};
                    std::vector<int> le, re;
                    int a = v, b = w;
                    while (depth[a] > depth[b]) {
                        le.push_back(pedge[a]);
                        a = par[a];
                        lv.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        re.push_back(pedge[b]);
                        b = par[b];
                        rv.push_back(b);
                    }
                    while (a != b) {
                        le.push_back(pedge[a]);
                        a = par[a];
                        lv.push_back(a);
                        re.push_back(pedge[b]);
                        b = par[b];
                        rv.push_back(b);
                    }
                    // path v..a plus reversed w..a plus closing edge
                    std::vector<int> cv(lv.rbegin(), lv.rend());
                    std::vector<int> ce(le.rbegin(), le.rend());
                    cv.insert(cv.end(), rv.begin(), rv.end() - 1);
                    ce.insert(ce.end(), re.begin(), re.end());
                    ce.push_back(eid);
                    return make_witness(g, cv, ce);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<int> graph_distance(const SignedGraph& g, int x, int y) {
    if (x < 0 || x >= g.n || y < 0 || y >= g.n) throw std::invalid_argument("graph_distance: vertex out of range");
    CoverBfs bfs(g, 2 * x);
    int d = std::min(bfs.dist[2 * y], bfs.dist[2 * y + 1]);
    if (d >= kInf) return std::nullopt;
    return d;
}

std::optional<int> d_plus(const SignedGraph& g, int x, int y) {
    CoverBfs bfs(g, 2 * x);
    if (bfs.dist[2 * y] >= kInf) return std::nullopt;
    return bfs.dist[2 * y];
}

std::optional<int> d_minus(const SignedGraph& g, int x, int y) {
    CoverBfs bfs(g, 2 * x);
    if (bfs.dist[2 * y + 1] >= kInf) return std::nullopt;
    return bfs.dist[2 * y + 1];
}

std::optional<int> algebraic_distance(const SignedGraph& g, int x, int y) {
    if (x == y) return 0;
    CoverBfs bfs(g, 2 * x);
    int dp = bfs.dist[2 * y], dm = bfs.dist[2 * y + 1];
    if (dp >= kInf && dm >= kInf) return std::nullopt;
    if (dp <= dm) return dp;  // ties are positive
    return -dm;
}

namespace {

// sign presence between target vertices: bit 0 = positive, bit 1 = negative
struct TargetTable {
    int n;
    std::vector<char> t;

    explicit TargetTable(const SignedGraph& b) : n(b.n), t(static_cast<size_t>(b.n) * b.n, 0) {
        for (const auto& e : b.edges) {
            t[static_cast<size_t>(e.u) * n + e.v] |= static_cast<char>(e.sign > 0 ? 1 : 2);
            t[static_cast<size_t>(e.v) * n + e.u] |= static_cast<char>(e.sign > 0 ? 1 : 2);
        }
    }
    bool has(int a, int b, int sign) const { return t[static_cast<size_t>(a) * n + b] & (sign > 0 ? 1 : 2); }
};

}  // namespace

std::optional<VertexMap> find_homomorphism(const SignedGraph& g, const SignedGraph& target) {
    if (g.n == 0) return VertexMap{{}, Switching::none(0)};
    if (target.n == 0) return std::nullopt;
    TargetTable tab(target);

    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; i++) order[i] = i;
    std::vector<int> deg(g.n);
    for (int i = 0; i < g.n; i++) deg[i] = g.degree(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<int> rank(g.n);
    for (int i = 0; i < g.n; i++) rank[order[i]] = i;

    std::vector<int> image(g.n, -1);
    std::vector<char> flip(g.n, 0);

    auto consistent = [&](int v) {
        for (auto [w, eid] : g.adj[v]) {
            if (image[w] < 0 && w != v) continue;
            const Edge& e = g.edges[eid];
            int req = e.sign * (flip[v] ? -1 : 1) * (flip[w] ? -1 : 1);
            if (!tab.has(image[v], image[w], req)) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int idx) -> bool {
        if (idx == g.n) return true;
        int v = order[idx];
        for (int b = 0; b < target.n; b++) {
            image[v] = b;
            for (int f = 0; f < 2; f++) {
                flip[v] = static_cast<char>(f);
                if (consistent(v) && self(self, idx + 1)) return true;
            }
        }
        image[v] = -1;
        flip[v] = 0;
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    VertexMap out;
    out.image = image;
    out.switching.flip = flip;
    return out;
}

bool verify_homomorphism(const SignedGraph& g, const SignedGraph& target, const VertexMap& f) {
    if (static_cast<int>(f.image.size()) != g.n || static_cast<int>(f.switching.flip.size()) != g.n)
        throw std::invalid_argument("verify_homomorphism: map size mismatch");
    for (int v = 0; v < g.n; v++)
        if (f.image[v] < 0 || f.image[v] >= target.n)
            throw std::invalid_argument("verify_homomorphism: image out of range");
    TargetTable tab(target);
    for (const auto& e : g.edges) {
        int req = e.sign * f.switching.pair_sign(e.u, e.v);
        if (!tab.has(f.image[e.u], f.image[e.v], req)) return false;
    }
    return true;
}

namespace {

// shortest closed walk with the given sign/parity class, via BFS on the
// fourfold cover (vertex, sign sheet, parity sheet)
std::optional<std::pair<std::vector<int>, std::vector<int>>> min_closed_walk(const SignedGraph& g, bool negative,
                                                                             bool odd) {
    int best = kInf, best_v = -1;
    std::vector<int> bpar, bparedge;
    for (int v = 0; v < g.n; v++) {
        int sz = 4 * g.n;
        std::vector<int> dist(sz, kInf), par(sz, -1), pare(sz, -1);
        int src = 4 * v;
        dist[src] = 0;
        std::deque<int> q{src};
        while (!q.empty()) {
            int st = q.front();
            q.pop_front();
            int u = st / 4, sheet = (st / 2) % 2, parity = st % 2;
            for (auto [w, eid] : g.adj[u]) {
                const Edge& e = g.edges[eid];
                int ns = 4 * w + 2 * (sheet ^ sign_bit(e.sign)) + (parity ^ 1);
                if (dist[ns] > dist[st] + 1) {
                    dist[ns] = dist[st] + 1;
                    par[ns] = st;
                    pare[ns] = eid;
                    q.push_back(ns);
                }
            }
        }
        int t = 4 * v + 2 * (negative ? 1 : 0) + (odd ? 1 : 0);
        if (t != src && dist[t] < best) {
            best = dist[t];
            best_v = v;
            bpar = par;
            bparedge = pare;
        }
    }
    if (best >= kInf) return std::nullopt;
    std::vector<int> verts, eids;
    int st = 4 * best_v + 2 * (negative ? 1 : 0) + (odd ? 1 : 0);
    while (st != 4 * best_v) {
        verts.push_back(st / 4);
        eids.push_back(bparedge[st]);
        st = bpar[st];
    }
    verts.push_back(best_v);
    std::reverse(verts.begin(), verts.end());
    std::reverse(eids.begin(), eids.end());
    return std::make_pair(verts, eids);
}

}  // namespace

std::optional<CycleWitness> contains_ok_element(const SignedGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("contains_ok_element: k must be >= 1");
    auto neg = shortest_cycle(g, SignSel::negative, ParitySel::any);
    if (neg && neg->length < k) return neg;
    if (k % 2 == 0) {
        // every odd cycle is a witness: positive odd, or negative of the wrong parity
        return odd_cycle(g);
    }
    // odd k: positive odd or negative even; a minimal closed walk in either
    // class decomposes into cycles among which one of these classes occurs
    for (auto [wneg, wodd] : {std::pair<bool, bool>{false, true}, {true, false}}) {
        auto walk = min_closed_walk(g, wneg, wodd);
        if (!walk) continue;
        auto cycles = decompose_closed_walk(g, walk->first, walk->second);
        for (auto& c : cycles) {
            bool cneg = c.sign < 0, codd = c.length % 2 == 1;
            if ((!cneg && codd) || (cneg && !codd)) return c;
        }
        throw std::logic_error("closed walk decomposition lost the witness class");
    }
    return std::nullopt;
}

std::vector<CycleWitness> all_cycles(const SignedGraph& g, int max_length) {
    std::vector<CycleWitness> out;
    for (int id = 0; id < g.m(); id++)
        if (g.edges[id].u == g.edges[id].v) out.push_back(make_witness(g, {g.edges[id].u}, {id}));
    std::vector<char> onpath(g.n, 0);
    std::vector<int> pv, pe;
    for (int s = 0; s < g.n; s++) {
        pv.assign(1, s);
        pe.clear();
        onpath[s] = 1;
        auto dfs = [&](auto&& self, int u) -> void {
            for (auto [w, eid] : g.adj[u]) {
                if (g.edges[eid].u == g.edges[eid].v) continue;
                if (w == s && !pe.empty() && eid != pe.front()) {
                    // each cycle is traversed in both directions; keep one
                    if (pe.front() < eid) {
                        auto ce = pe;
                        ce.push_back(eid);
                        out.push_back(make_witness(g, pv, ce));
                    }
                } else if (w > s && !onpath[w]) {
                    if (max_length > 0 && static_cast<int>(pe.size()) + 2 > max_length) continue;
                    onpath[w] = 1;
                    pv.push_back(w);
                    pe.push_back(eid);
                    self(self, w);
                    pe.pop_back();
                    pv.pop_back();
                    onpath[w] = 0;
                }
            }
        };
        dfs(dfs, s);
        onpath[s] = 0;
    }
    return out;
}

SignedGraph negative_cycle(int l) {
    if (l < 1) throw std::invalid_argument("negative_cycle: length must be >= 1");
    SignedGraph g(l);
    if (l == 1) {
        g.add_edge(0, 0, -1);
        return g;
    }
    for (int i = 0; i + 1 < l; i++) g.add_edge(i, i + 1, +1);
    g.add_edge(l - 1, 0, -1);
    return g;
}

SignedGraph positive_cycle(int l) {
    if (l < 1) throw std::invalid_argument("positive_cycle: length must be >= 1");
    SignedGraph g(l);
    if (l == 1) {
        g.add_edge(0, 0, +1);
        return g;
    }
    for (int i = 0; i + 1 < l; i++) g.add_edge(i, i + 1, +1);
    g.add_edge(l - 1, 0, +1);
    return g;
}

SignedGraph complete_graph(int n, int sign) {
    SignedGraph g(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.add_edge(i, j, sign);
    return g;
}

SignedGraph circular_clique_all_negative(int p, int q) {
    if (q < 1 || p < 2 * q) throw std::invalid_argument("circular clique requires p >= 2q, q >= 1");
    SignedGraph g(p);
    for (int i = 0; i < p; i++)
        for (int j = i + 1; j < p; j++) {
            int d = std::min(j - i, p - (j - i));
            if (d >= q && d <= p - q) g.add_edge(i, j, -1);
        }
    return g;
}

SignedGraph forbidden_minor_of_partial_3trees(const std::string& name) {
    if (name == "k5") return complete_graph(5, +1);
    if (name == "octahedron") {
        SignedGraph g(6);  // parts {0,3}, {1,4}, {2,5}
        for (int i = 0; i < 6; i++)
            for (int j = i + 1; j < 6; j++)
                if (j - i != 3) g.add_edge(i, j, +1);
        return g;
    }
    if (name == "wagner") {
        SignedGraph g(8);
        for (int i = 0; i < 8; i++) g.add_edge(i, (i + 1) % 8, +1);
        for (int i = 0; i < 4; i++) g.add_edge(i, i + 4, +1);
        return g;
    }
    if (name == "c5prism") {
        SignedGraph g(10);
        for (int i = 0; i < 5; i++) g.add_edge(i, (i + 1) % 5, +1);
        for (int i = 0; i < 5; i++) g.add_edge(5 + i, 5 + (i + 1) % 5, +1);
        for (int i = 0; i < 5; i++) g.add_edge(i, i + 5, +1);
        return g;
    }
    throw std::invalid_argument("unknown forbidden minor: " + name);
}

SignedGraph named_graph(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k) throw std::invalid_argument("named_graph " + name + ": wrong parameter count");
    };
    if (name == "cneg") {
        want(1);
        return negative_cycle(params[0]);
    }
    if (name == "cpos") {
        want(1);
        return positive_cycle(params[0]);
    }
    if (name == "complete") {
        want(2);
        return complete_graph(params[0], params[1] >= 0 ? +1 : -1);
    }
    if (name == "circular") {
        want(2);
        return circular_clique_all_negative(params[0], params[1]);
    }
    if (name == "k5" || name == "octahedron" || name == "wagner" || name == "c5prism") {
        want(0);
        return forbidden_minor_of_partial_3trees(name);
    }
    throw std::invalid_argument("unknown named graph: " + name);
}

SignedGraph read_sg(std::istream& in, const std::string& source) {
    auto fail = [&](int line, const std::string& msg) {
        throw std::runtime_error(source + ":" + std::to_string(line) + ": " + msg);
    };
    std::string line;
    int lineno = 0;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            lineno++;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            std::vector<std::string> toks;
            std::string t;
            while (ss >> t) toks.push_back(t);
            if (!toks.empty()) return toks;
        }
        return {};
    };
    auto head = next_tokens();
    if (head.size() != 3 || head[0] != "sg") fail(lineno, "expected header 'sg <n> <m>'");
    int n = 0, m = 0;
    try {
        n = std::stoi(head[1]);
        m = std::stoi(head[2]);
    } catch (...) {
        fail(lineno, "bad header numbers");
    }
    if (n < 0 || m < 0) fail(lineno, "negative counts");
    SignedGraph g(n);
    for (int i = 0; i < m; i++) {
        auto toks = next_tokens();
        if (toks.size() != 3) fail(lineno, "expected edge line 'u v s'");
        int u = 0, v = 0;
        try {
            u = std::stoi(toks[0]);
            v = std::stoi(toks[1]);
        } catch (...) {
            fail(lineno, "bad edge endpoints");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "edge endpoint out of range");
        if (toks[2] != "+" && toks[2] != "-") fail(lineno, "edge sign must be '+' or '-'");
        g.add_edge(u, v, toks[2] == "+" ? +1 : -1);
    }
    return g;
}

SignedGraph read_sg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_sg(in, path);
}

void write_sg(std::ostream& out, const SignedGraph& g) {
    out << "sg " << g.n << " " << g.m() << "\n";
    for (const auto& e : g.edges) out << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
}

std::string to_sg(const SignedGraph& g) {
    std::ostringstream ss;
    write_sg(ss, g);
    return ss.str();
}

}  // namespace sgb
