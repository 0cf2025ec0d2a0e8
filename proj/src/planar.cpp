#include "sgb/planar.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sgb/spc.hpp"
#include "sgb/ttree.hpp"

namespace sgb {

int Multigraph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("add_edge: endpoint out of range");
    edges.push_back({u, v});
    return m() - 1;
}

int Multigraph::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) {
        if (a == v) d++;
        if (b == v) d++;
    }
    return d;
}

namespace {

bool multigraph_connected(const Multigraph& g) {
    if (g.n == 0) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(g.n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                cnt++;
                q.push_back(w);
            }
    }
    return cnt == g.n;
}

}  // namespace

FaceSet faces_from_rotation(const PlanarMap& m) {
    const auto& g = m.g;
    if (static_cast<int>(m.rot.size()) != g.n) throw std::invalid_argument("faces: rotation list size mismatch");
    // darts at each vertex in rotation order
    std::vector<std::vector<int>> darts(g.n);
    std::vector<int> uses(g.m(), 0);
    for (int v = 0; v < g.n; v++) {
        for (int eid : m.rot[v]) {
            if (eid < 0 || eid >= g.m()) throw std::invalid_argument("faces: rotation names a bad edge id");
            auto [a, b] = g.edges[eid];
            int dart;
            if (a == b) {
                if (v != a) throw std::invalid_argument("faces: loop rotated at a foreign vertex");
                dart = 2 * eid + (uses[eid] > 0 ? 1 : 0);
            } else if (v == a) {
                dart = 2 * eid;
            } else if (v == b) {
                dart = 2 * eid + 1;
            } else {
                throw std::invalid_argument("faces: rotation names a non-incident edge");
            }
            uses[eid]++;
            darts[v].push_back(dart);
        }
    }
    for (int e = 0; e < g.m(); e++)
        if (uses[e] != 2) throw std::invalid_argument("faces: every edge end must appear exactly once");

    // position of each dart in its vertex rotation
    std::vector<int> pos(2 * g.m(), -1), at_vertex(2 * g.m(), -1);
    for (int v = 0; v < g.n; v++)
        for (size_t i = 0; i < darts[v].size(); i++) {
            pos[darts[v][i]] = static_cast<int>(i);
            at_vertex[darts[v][i]] = v;
        }
    // leave the head vertex along the rotation successor of the reverse dart
    auto next_in_face = [&](int dart) {
        int rev = dart ^ 1;
        const auto& dl = darts[at_vertex[rev]];
        return dl[(pos[rev] + 1) % dl.size()];
    };

    FaceSet fs;
    fs.face_of_dart.assign(2 * g.m(), -1);
    for (int d0 = 0; d0 < 2 * g.m(); d0++) {
        if (fs.face_of_dart[d0] >= 0) continue;
        std::vector<int> face;
        int d = d0;
        do {
            fs.face_of_dart[d] = fs.count();
            face.push_back(d);
            d = next_in_face(d);
        } while (d != d0);
        fs.face_darts.push_back(std::move(face));
    }
    if (multigraph_connected(g) && g.n > 0) {
        if (g.n - g.m() + fs.count() != 2)
            throw std::invalid_argument("faces: rotation system is not a sphere embedding (Euler check failed)");
    }
    return fs;
}

std::vector<std::vector<int>> FaceSet::edge_cycles() const {
    std::vector<std::vector<int>> out;
    for (const auto& f : face_darts) {
        std::vector<int> c;
        for (int d : f) c.push_back(d / 2);
        out.push_back(std::move(c));
    }
    return out;
}

DualGraph dual_graph(const PlanarMap& m) {
    if (!multigraph_connected(m.g)) throw std::invalid_argument("dual_graph: map must be connected");
    auto fs = faces_from_rotation(m);
    DualGraph d;
    d.g.n = fs.count();
    d.g.edges.resize(m.g.m());
    for (int e = 0; e < m.g.m(); e++)
        d.g.edges[e] = {fs.face_of_dart[2 * e], fs.face_of_dart[2 * e + 1]};
    d.rot.resize(fs.count());
    for (int f = 0; f < fs.count(); f++)
        for (int dart : fs.face_darts[f]) d.rot[f].push_back(dart / 2);
    return d;
}

namespace {

// Blossom algorithm over the simple support. mate[v] = partner or -1.
struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> mate, p, base;
    std::vector<char> used, blossom;

    explicit Blossom(const Multigraph& g) : n(g.n), adj(g.n), mate(g.n, -1) {
        std::vector<std::vector<char>> have(g.n, std::vector<char>(g.n, 0));
        for (auto& [a, b] : g.edges)
            if (a != b && !have[a][b]) {
                have[a][b] = have[b][a] = 1;
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
    }

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (mate[a] == -1) break;
            a = p[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = p[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[mate[v]]] = 1;
            p[v] = child;
            child = mate[v];
            v = p[mate[v]];
        }
    }

    int find_path(int root) {
        used.assign(n, 0);
        p.assign(n, -1);
        base.resize(n);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : adj[v]) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
                    int curbase = lca(v, to);
                    blossom.assign(n, 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; i++)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = 1;
                    q.push_back(mate[to]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int res = 0;
        for (int v = 0; v < n; v++) {
            if (mate[v] != -1) continue;
            int u = find_path(v);
            if (u == -1) continue;
            res++;
            while (u != -1) {
                int pv = p[u], ppv = mate[pv];
                mate[u] = pv;
                mate[pv] = u;
                u = ppv;
            }
        }
        return res;
    }
};

}  // namespace

std::vector<int> maximum_matching_mates(const Multigraph& g) {
    Blossom b(g);
    b.solve();
    return b.mate;
}

std::optional<std::vector<int>> perfect_matching(const Multigraph& g) {
    if (g.n % 2 != 0) return std::nullopt;
    auto mate = maximum_matching_mates(g);
    for (int v = 0; v < g.n; v++)
        if (mate[v] == -1) return std::nullopt;
    // lift to edge ids, lowest parallel edge per matched pair
    std::vector<int> eids;
    std::vector<char> taken(g.n, 0);
    for (int v = 0; v < g.n; v++) {
        if (taken[v]) continue;
        int u = mate[v];
        taken[v] = taken[u] = 1;
        int pick = -1;
        for (int e = 0; e < g.m(); e++) {
            auto [a, b] = g.edges[e];
            if ((a == v && b == u) || (a == u && b == v)) {
                pick = e;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("perfect_matching: mate without an edge");
        eids.push_back(pick);
    }
    std::sort(eids.begin(), eids.end());
    return eids;
}

namespace {

int odd_components(const Multigraph& g, const std::vector<char>& removed) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto& [a, b] : g.edges)
        if (a != b && !removed[a] && !removed[b]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<char> seen(g.n, 0);
    int odd = 0;
    for (int v = 0; v < g.n; v++) {
        if (removed[v] || seen[v]) continue;
        int sz = 0;
        std::deque<int> q{v};
        seen[v] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            sz++;
            for (int w : adj[x])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        if (sz % 2 == 1) odd++;
    }
    return odd;
}

int matching_size(const Multigraph& g, int skip_vertex) {
    Multigraph h;
    h.n = g.n;
    for (auto& [a, b] : g.edges)
        if (a != skip_vertex && b != skip_vertex) h.edges.push_back({a, b});
    Blossom bl(h);
    return bl.solve();
}

}  // namespace

std::vector<int> tutte_violator(const Multigraph& g) {
    {
        std::vector<char> removed(g.n, 0);
        if (odd_components(g, removed) > 0 && g.n % 2 == 1) return {};
    }
    Blossom bl(g);
    int nu = bl.solve();
    if (2 * nu == g.n) throw std::invalid_argument("tutte_violator: graph has a perfect matching");
    // Gallai-Edmonds: D = inessential vertices, A = N(D) \ D; then
    // o(G - A) = |A| + deficiency > |A|
    std::vector<char> in_d(g.n, 0);
    for (int v = 0; v < g.n; v++)
        if (matching_size(g, v) == nu) in_d[v] = 1;
    std::vector<char> in_a(g.n, 0);
    for (auto& [a, b] : g.edges) {
        if (a == b) continue;
        if (in_d[a] && !in_d[b]) in_a[b] = 1;
        if (in_d[b] && !in_d[a]) in_a[a] = 1;
    }
    std::vector<int> u;
    for (int v = 0; v < g.n; v++)
        if (in_a[v]) u.push_back(v);
    std::vector<char> removed(g.n, 0);
    for (int v : u) removed[v] = 1;
    if (odd_components(g, removed) <= static_cast<int>(u.size()))
        throw std::logic_error("tutte_violator: Gallai-Edmonds set fails to violate");
    return u;
}

OddCutReport min_odd_cut_at_least(const Multigraph& g, int r) {
    OddCutReport rep;
    if (g.n > 24) {
        rep.checked = false;
        return rep;
    }
    rep.checked = true;
    rep.ok = true;
    std::vector<uint32_t> emask_u(g.m()), emask_v(g.m());
    for (int e = 0; e < g.m(); e++) {
        emask_u[e] = uint32_t(1) << g.edges[e].first;
        emask_v[e] = uint32_t(1) << g.edges[e].second;
    }
    uint32_t lim = uint32_t(1) << g.n;
    for (uint32_t x = 1; x < lim; x++) {
        if (__builtin_popcount(x) % 2 == 0) continue;
        if (g.n % 2 == 0 && !(x & 1)) continue;  // complement also odd; anchor at vertex 0
        int cut = 0;
        for (int e = 0; e < g.m(); e++) {
            bool iu = x & emask_u[e], iv = x & emask_v[e];
            if (iu != iv) cut++;
        }
        if (cut < r) {
            rep.ok = false;
            rep.cut_size = cut;
            for (int v = 0; v < g.n; v++)
                if (x >> v & 1) rep.violator.push_back(v);
            return rep;
        }
    }
    return rep;
}

EdgeColoring edge_color(const PlanarMap& m, int k) {
    if (k < 1) throw std::invalid_argument("edge_color: k must be >= 1");
    const auto& g = m.g;
    if (!multigraph_connected(g)) throw EdgeColorError{ColorReject::not_connected, "map is not connected"};
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) != 2 * k) {
            std::ostringstream ss;
            if (g.degree(v) % 2 == 1)
                ss << "vertex " << v << " has odd degree; only even-regular maps are supported";
            else
                ss << "vertex " << v << " has degree " << g.degree(v) << ", expected " << 2 * k;
            throw EdgeColorError{ColorReject::not_even_regular, ss.str()};
        }
    auto cut = min_odd_cut_at_least(g, 2 * k);
    if (cut.checked && !cut.ok) {
        std::ostringstream ss;
        ss << "odd cut of size " << cut.cut_size << " below " << 2 * k << " at {";
        for (size_t i = 0; i < cut.violator.size(); i++) ss << (i ? "," : "") << cut.violator[i];
        ss << "}";
        throw EdgeColorError{ColorReject::odd_cut_too_small, ss.str()};
    }

    if (k == 1) {
        // a connected 2-regular multigraph is a single cycle; the odd cut
        // bound makes it even, so alternate the two labels along it
        EdgeColoring col;
        col.colors = 2;
        col.color.assign(g.m(), -1);
        int at = 0, prev_edge = -1, color = 0;
        for (int step = 0; step < g.m(); step++) {
            int chosen = -1;
            for (int e = 0; e < g.m(); e++) {
                if (col.color[e] >= 0 || e == prev_edge) continue;
                if (g.edges[e].first == at || g.edges[e].second == at) {
                    chosen = e;
                    break;
                }
            }
            if (chosen < 0) throw std::logic_error("edge_color: 2-regular map is not a single cycle");
            col.color[chosen] = color;
            color ^= 1;
            at = (g.edges[chosen].first == at) ? g.edges[chosen].second : g.edges[chosen].first;
            prev_edge = chosen;
        }
        if (!verify_edge_coloring(g, col, 2)) throw std::logic_error("edge_color: cycle alternation failed");
        return col;
    }

    auto pm = perfect_matching(g);
    if (!pm) {
        auto u = tutte_violator(g);
        std::ostringstream ss;
        ss << "no perfect matching (odd components exceed |U| for |U| = " << u.size() << ")";
        throw EdgeColorError{ColorReject::no_perfect_matching, ss.str()};
    }
    std::vector<char> in_matching(g.m(), 0);
    for (int e : *pm) in_matching[e] = 1;

    auto dual = dual_graph(m);
    // signed dual: matching edges negative
    SignedGraph h(dual.g.n);
    for (int e = 0; e < dual.g.m(); e++)
        h.add_edge(dual.g.edges[e].first, dual.g.edges[e].second, in_matching[e] ? -1 : +1);
    if (!bipartition(h)) throw std::logic_error("edge_color: dual of an even-regular map must be bipartite");

    // faces of the dual are the primal vertex stars; each must be a
    // negative 2k-cycle, and nothing negative may be shorter
    {
        std::vector<std::vector<int>> star(g.n);
        for (int e = 0; e < g.m(); e++) {
            star[g.edges[e].first].push_back(e);
            star[g.edges[e].second].push_back(e);
        }
        for (int v = 0; v < g.n; v++) {
            int sgn = 1;
            for (int e : star[v]) sgn *= in_matching[e] ? -1 : 1;
            if (static_cast<int>(star[v].size()) != 2 * k || sgn != -1)
                throw std::logic_error("edge_color: a dual face is not a negative 2k-cycle");
        }
        auto girth = negative_girth(h);
        if (!girth || *girth != 2 * k)
            throw std::logic_error("edge_color: signed dual girth differs from 2k despite the odd cut bound");
    }

    auto seq = recognize_partial_ttree(h, 3);
    if (!seq) throw EdgeColorError{ColorReject::dual_not_partial_3tree, "dual is not a partial 3-tree"};

    auto cube = spc(2 * k - 1);
    auto dist = spc_distance_graph(k);  // every pair shares a negative 2k-cycle
    auto list = enumerate_wide_cliques(3, k);
    auto w0 = all_cliques(dist, 3);
    auto [cert, trace] = prune_to_closed(dist, w0, list);
    if (cert.cliques.empty()) throw std::logic_error("edge_color: projective cube certificate vanished");

    auto phi = map_partial_ttree(h, *seq, dist, cert);
    if (!verify_homomorphism(h, cube.graph, phi)) throw std::logic_error("edge_color: dual map failed verification");

    // color each primal edge by the label of the image of its dual edge
    uint32_t nmask = (uint32_t(1) << (2 * k - 1)) - 1;
    EdgeColoring col;
    col.colors = 2 * k;
    col.color.resize(g.m());
    for (int e = 0; e < g.m(); e++) {
        uint32_t a = static_cast<uint32_t>(phi.image[dual.g.edges[e].first]);
        uint32_t b = static_cast<uint32_t>(phi.image[dual.g.edges[e].second]);
        uint32_t dxor = a ^ b;
        if (__builtin_popcount(dxor) == 1)
            col.color[e] = __builtin_ctz(dxor);
        else if (dxor == nmask)
            col.color[e] = 2 * k - 1;  // J
        else
            throw std::logic_error("edge_color: dual edge image is not a cube edge");
    }
    if (!verify_edge_coloring(g, col, 2 * k)) throw std::logic_error("edge_color: produced coloring is not proper");
    return col;
}

bool verify_edge_coloring(const Multigraph& g, const EdgeColoring& c, int r) {
    if (static_cast<int>(c.color.size()) != g.m()) throw std::invalid_argument("verify_edge_coloring: size mismatch");
    for (int e = 0; e < g.m(); e++)
        if (c.color[e] < 0 || c.color[e] >= r) return false;
    for (int e = 0; e < g.m(); e++) {
        auto [a, b] = g.edges[e];
        if (a == b) return false;  // a loop cannot be properly colored
        for (int f = e + 1; f < g.m(); f++) {
            auto [x, y] = g.edges[f];
            if (c.color[e] != c.color[f]) continue;
            if (a == x || a == y || b == x || b == y) return false;
        }
    }
    bool regular = true;
    for (int v = 0; v < g.n; v++)
        if (g.degree(v) != r) regular = false;
    if (regular) {
        for (int col = 0; col < r; col++) {
            std::vector<char> covered(g.n, 0);
            for (int e = 0; e < g.m(); e++)
                if (c.color[e] == col) {
                    covered[g.edges[e].first] = 1;
                    covered[g.edges[e].second] = 1;
                }
            for (int v = 0; v < g.n; v++)
                if (!covered[v]) return false;  // color class must be a perfect matching
        }
    }
    return true;
}

PlanarMap read_pm(std::istream& in, const std::string& source) {
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
    if (head.size() != 3 || head[0] != "pm") fail(lineno, "expected header 'pm <n> <m>'");
    PlanarMap m;
    int n = 0, me = 0;
    try {
        n = std::stoi(head[1]);
        me = std::stoi(head[2]);
    } catch (...) {
        fail(lineno, "bad header numbers");
    }
    m.g.n = n;
    for (int i = 0; i < me; i++) {
        auto toks = next_tokens();
        if (toks.size() != 2) fail(lineno, "expected edge line 'u v'");
        int u = 0, v = 0;
        try {
            u = std::stoi(toks[0]);
            v = std::stoi(toks[1]);
        } catch (...) {
            fail(lineno, "bad edge endpoints");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "edge endpoint out of range");
        m.g.add_edge(u, v);
    }
    m.rot.resize(n);
    for (int i = 0; i < n; i++) {
        auto toks = next_tokens();
        if (toks.size() < 2 || toks[0] != "rot") fail(lineno, "expected 'rot <v>: <edge ids>'");
        std::string vt = toks[1];
        if (!vt.empty() && vt.back() == ':') vt.pop_back();
        int v = 0;
        try {
            v = std::stoi(vt);
        } catch (...) {
            fail(lineno, "bad rotation vertex");
        }
        if (v < 0 || v >= n) fail(lineno, "rotation vertex out of range");
        for (size_t j = 2; j < toks.size(); j++) {
            int e = 0;
            try {
                e = std::stoi(toks[j]);
            } catch (...) {
                fail(lineno, "bad rotation edge id");
            }
            m.rot[v].push_back(e);
        }
    }
    return m;
}

PlanarMap read_pm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_pm(in, path);
}

void write_pm(std::ostream& out, const PlanarMap& m) {
    out << "pm " << m.g.n << " " << m.g.m() << "\n";
    for (auto& [u, v] : m.g.edges) out << u << " " << v << "\n";
    for (int v = 0; v < m.g.n; v++) {
        out << "rot " << v << ":";
        for (int e : m.rot[v]) out << " " << e;
        out << "\n";
    }
}

}  // namespace sgb
