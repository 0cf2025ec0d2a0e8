#include "sgb/weighted_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sgb {

int WeightedSignedGraph::add_edge(int u, int v, int w) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("add_edge: weighted graphs carry no loops");
    if (w == 0) throw std::invalid_argument("add_edge: zero weight");
    edges.push_back({u, v, w});
    return m() - 1;
}

int canonicalize_weight(int w, int k) {
    if (w == 0) throw std::invalid_argument("canonicalize_weight: zero weight");
    if (std::abs(w) > k) throw std::invalid_argument("canonicalize_weight: |w| exceeds k");
    if (w == -k) return k;
    return w;
}

std::optional<std::vector<char>> weighted_bipartition(const WeightedSignedGraph& h) {
    std::vector<std::vector<std::pair<int, int>>> adj(h.n);
    for (int i = 0; i < h.m(); i++) {
        adj[h.edges[i].u].push_back({h.edges[i].v, i});
        adj[h.edges[i].v].push_back({h.edges[i].u, i});
    }
    std::vector<char> cls(h.n, -1);
    for (int root = 0; root < h.n; root++) {
        if (cls[root] >= 0) continue;
        cls[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [w, eid] : adj[v]) {
                char want = static_cast<char>(cls[v] ^ (std::abs(h.edges[eid].w) % 2));
                if (cls[w] < 0) {
                    cls[w] = want;
                    q.push_back(w);
                } else if (cls[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return cls;
}

bool is_bipartite_weighted(const WeightedSignedGraph& h) { return weighted_bipartition(h).has_value(); }

SignedGraph barbar_expand(const WeightedSignedGraph& h, int k) {
    if (k < 1) throw std::invalid_argument("barbar_expand: k must be >= 1");
    SignedGraph g(h.n);
    auto add_path = [&](int x, int y, int len, int sign) {
        // internal vertices are fresh; a negative path is negative on its
        // first edge from x
        int prev = x;
        for (int i = 1; i < len; i++) {
            int mid = g.n++;
            g.adj.push_back({});
            g.add_edge(prev, mid, (i == 1) ? sign : +1);
            prev = mid;
        }
        g.add_edge(prev, y, (len == 1) ? sign : +1);
    };
    for (const auto& e : h.edges) {
        int w = canonicalize_weight(e.w, k);
        int a = std::abs(w);
        int s = w > 0 ? +1 : -1;
        add_path(e.u, e.v, a, s);
        add_path(e.u, e.v, 2 * k - a, -s);
    }
    return g;
}

bool triangle_is_2k_wide(int a, int b, int c, int k) {
    a = canonicalize_weight(a, k);
    b = canonicalize_weight(b, k);
    c = canonicalize_weight(c, k);
    if ((a + b + c) % 2 != 0) throw std::invalid_argument("triangle_is_2k_wide: odd weight sum");
    int m[3] = {std::abs(a), std::abs(b), std::abs(c)};
    std::sort(m, m + 3);
    long long prod = static_cast<long long>(a) * b * c;
    if (prod < 0) return m[0] + m[1] + m[2] >= 2 * k;
    return m[0] + m[1] >= m[2];
}

int WeightedClique::pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    int r = size();
    if (i < 0 || j >= r || i == j) throw std::invalid_argument("pair_index: bad pair");
    return i * (2 * r - i - 1) / 2 + (j - i - 1);
}

WeightedClique WeightedClique::from_weights(int k, std::vector<int> labels, std::vector<int> packed) {
    WeightedClique c;
    c.k = k;
    c.labels = std::move(labels);
    c.weights = std::move(packed);
    int r = c.size();
    if (static_cast<int>(c.weights.size()) != r * (r - 1) / 2)
        throw std::invalid_argument("WeightedClique: packed weight count mismatch");
    for (int& w : c.weights) w = canonicalize_weight(w, k);
    return c;
}

bool clique_is_bipartite(const WeightedClique& c) {
    int r = c.size();
    for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++)
            for (int l = j + 1; l < r; l++)
                if ((c.weight(i, j) + c.weight(j, l) + c.weight(i, l)) % 2 != 0) return false;
    return true;
}

bool clique_is_2k_wide(const WeightedClique& c) {
    int r = c.size();
    for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++)
            for (int l = j + 1; l < r; l++)
                if (!triangle_is_2k_wide(c.weight(i, j), c.weight(j, l), c.weight(i, l), c.k)) return false;
    return true;
}

bool is_2k_wide(const WeightedSignedGraph& h, int k) {
    auto g = barbar_expand(h, k);
    auto girth = negative_girth(g);
    return girth && *girth == 2 * k;
}

WeightedSignedGraph read_swg(std::istream& in, int k, bool* rewritten, const std::string& source) {
    auto fail = [&](int line, const std::string& msg) {
        throw std::runtime_error(source + ":" + std::to_string(line) + ": " + msg);
    };
    if (rewritten) *rewritten = false;
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
    if (head.size() != 3 || head[0] != "swg") fail(lineno, "expected header 'swg <n> <m>'");
    int n = 0, m = 0;
    try {
        n = std::stoi(head[1]);
        m = std::stoi(head[2]);
    } catch (...) {
        fail(lineno, "bad header numbers");
    }
    WeightedSignedGraph h(n);
    for (int i = 0; i < m; i++) {
        auto toks = next_tokens();
        if (toks.size() != 3) fail(lineno, "expected edge line 'u v w'");
        int u = 0, v = 0, w = 0;
        try {
            u = std::stoi(toks[0]);
            v = std::stoi(toks[1]);
            w = std::stoi(toks[2]);
        } catch (...) {
            fail(lineno, "bad edge line");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) fail(lineno, "edge endpoint out of range");
        if (w == 0) fail(lineno, "zero weight");
        if (std::abs(w) > k) fail(lineno, "weight magnitude exceeds k");
        int cw = canonicalize_weight(w, k);
        if (cw != w && rewritten) *rewritten = true;
        h.add_edge(u, v, cw);
    }
    return h;
}

WeightedSignedGraph read_swg_file(const std::string& path, int k, bool* rewritten) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_swg(in, k, rewritten, path);
}

void write_swg(std::ostream& out, const WeightedSignedGraph& h) {
    out << "swg " << h.n << " " << h.m() << "\n";
    for (const auto& e : h.edges) out << e.u << " " << e.v << " " << e.w << "\n";
}

}  // namespace sgb
