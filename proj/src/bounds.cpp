#include "sgb/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace sgb {

namespace {

int pidx(int r, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * (2 * r - i - 1) / 2 + (j - i - 1);
}

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<int> canonical_values(int k) {
    std::vector<int> vals;
    for (int m = 1; m <= k; m++) {
        vals.push_back(m);
        if (m < k) vals.push_back(-m);
    }
    return vals;
}

std::vector<int> negate_star(const std::vector<int>& star, int k) {
    std::vector<int> out(star.size());
    for (size_t i = 0; i < star.size(); i++) out[i] = canonicalize_weight(-star[i], k);
    return out;
}

}  // namespace

std::vector<int> canonical_shape(int r, const std::vector<int>& packed) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best, cur(packed.size());
    do {
        for (int i = 0; i < r; i++)
            for (int j = i + 1; j < r; j++) cur[pidx(r, i, j)] = packed[pidx(r, perm[i], perm[j])];
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

// canonical under vertex permutation and switching: the signed-iso class key
std::vector<int> switch_canonical_shape(int r, int k, const std::vector<int>& packed) {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best, cur(packed.size());
    do {
        for (int flips = 0; flips < (1 << (r - 1)); flips++) {
            // vertex 0 never flips; flipping all is the identity on pairs
            auto f = [&](int i) { return i == 0 ? 1 : ((flips >> (i - 1) & 1) ? -1 : 1); };
            for (int i = 0; i < r; i++)
                for (int j = i + 1; j < r; j++)
                    cur[pidx(r, i, j)] = canonicalize_weight(f(i) * f(j) * packed[pidx(r, perm[i], perm[j])], k);
            if (best.empty() || cur < best) best = cur;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

WideCliqueList enumerate_wide_cliques(int t, int k) {
    if (t < 1 || k < 1) throw std::invalid_argument("enumerate_wide_cliques: t and k must be >= 1");
    int r = t + 1;
    int npairs = r * (r - 1) / 2;
    if (r > 6) throw std::invalid_argument("enumerate_wide_cliques: t beyond desk scale");
    auto vals = canonical_values(k);
    std::sort(vals.begin(), vals.end());

    std::unordered_set<std::vector<int>, VecHash> seen;
    WideCliqueList out;
    out.t = t;
    out.k = k;
    std::vector<int> w(npairs, 0);
    // pairs in lex order; when (i,j) is set, triangles {l,i,j} with l < i
    // are fully assigned and checked
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < r; i++)
        for (int j = i + 1; j < r; j++) pairs.push_back({i, j});
    std::sort(pairs.begin(), pairs.end());
    auto rec = [&](auto&& self, size_t at) -> void {
        if (at == pairs.size()) {
            auto canon = canonical_shape(r, w);
            if (seen.insert(canon).second) out.shapes.push_back(canon);
            return;
        }
        auto [i, j] = pairs[at];
        for (int v : vals) {
            w[pidx(r, i, j)] = v;
            bool ok = true;
            for (int l = 0; l < i && ok; l++) {
                int a = w[pidx(r, l, i)], b = w[pidx(r, l, j)];
                if ((a + b + v) % 2 != 0)
                    ok = false;
                else if (!triangle_is_2k_wide(a, b, v, k))
                    ok = false;
            }
            if (ok) self(self, at + 1);
        }
        w[pidx(r, i, j)] = 0;
    };
    rec(rec, 0);
    std::sort(out.shapes.begin(), out.shapes.end());
    return out;
}

WeightedSignedGraph DistanceGraph::weighted_view() const {
    WeightedSignedGraph h(n());
    for (int a = 0; a < n(); a++)
        for (int b = a + 1; b < n(); b++)
            if (w[a][b] != 0) h.add_edge(a, b, w[a][b]);
    return h;
}

DistanceGraph build_distance_graph(const SignedGraph& b, int k) {
    if (!bipartition(b)) throw std::invalid_argument("build_distance_graph: base graph is not bipartite");
    auto girth = negative_girth(b);
    if (!girth || *girth != 2 * k)
        throw std::invalid_argument("build_distance_graph: unbalanced girth is not exactly 2k");

    DistanceGraph d;
    d.base = b;
    d.k = k;
    d.w.assign(b.n, std::vector<int>(b.n, 0));

    // vertices sharing a negative 2k-cycle, by bounded DFS over simple
    // cycles anchored at their minimum vertex
    std::vector<std::vector<char>> together(b.n, std::vector<char>(b.n, 0));
    std::vector<char> onpath(b.n, 0);
    std::vector<int> pv, pe;
    int target = 2 * k;
    for (int s = 0; s < b.n; s++) {
        pv.assign(1, s);
        pe.clear();
        onpath[s] = 1;
        auto dfs = [&](auto&& self, int u, int sign) -> void {
            for (auto [x, eid] : b.adj[u]) {
                if (b.edges[eid].u == b.edges[eid].v) continue;
                if (x == s && static_cast<int>(pe.size()) == target - 1 && eid != pe.front()) {
                    if (sign * b.edges[eid].sign < 0 && pe.front() < eid) {
                        for (size_t i = 0; i < pv.size(); i++)
                            for (size_t j = i + 1; j < pv.size(); j++) together[pv[i]][pv[j]] = together[pv[j]][pv[i]] = 1;
                    }
                } else if (x > s && !onpath[x] && static_cast<int>(pe.size()) + 1 < target) {
                    onpath[x] = 1;
                    pv.push_back(x);
                    pe.push_back(eid);
                    self(self, x, sign * b.edges[eid].sign);
                    pe.pop_back();
                    pv.pop_back();
                    onpath[x] = 0;
                }
            }
        };
        dfs(dfs, s, 1);
        onpath[s] = 0;
    }
    for (int x = 0; x < b.n; x++)
        for (int y = x + 1; y < b.n; y++) {
            if (!together[x][y]) continue;
            auto ad = algebraic_distance(b, x, y);
            if (!ad || std::abs(*ad) > k) throw std::logic_error("distance graph: pair on a 2k-cycle beyond distance k");
            d.w[x][y] = d.w[y][x] = canonicalize_weight(*ad, k);
        }
    return d;
}

CliqueSet all_cliques(const DistanceGraph& d, int t) {
    CliqueSet out;
    out.t = t;
    int r = t + 1;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            // cliques of a girth-2k distance graph are wide; filter anyway
            std::vector<int> packed(r * (r - 1) / 2);
            for (int i = 0; i < r; i++)
                for (int j = i + 1; j < r; j++) packed[pidx(r, i, j)] = d.weight(cur[i], cur[j]);
            auto wc = WeightedClique::from_weights(d.k, cur, packed);
            if (clique_is_bipartite(wc) && clique_is_2k_wide(wc)) out.cliques.push_back(cur);
            return;
        }
        for (int v = next; v < d.n(); v++) {
            bool ok = true;
            for (int u : cur)
                if (!d.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

namespace {

// Shared machinery for the closedness checks: required patterns per
// t-subset and the realized stars of the current clique set.
struct ClosednessIndex {
    const DistanceGraph& d;
    const WideCliqueList& list;
    int t, k;
    std::unordered_set<std::vector<int>, VecHash> lset;
    // realized stars per t-subset, closed under star negation
    std::unordered_map<std::vector<int>, std::unordered_set<std::vector<int>, VecHash>, VecHash> realized;

    ClosednessIndex(const DistanceGraph& d_, const WideCliqueList& list_, const CliqueSet& w)
        : d(d_), list(list_), t(list_.t), k(list_.k) {
        for (const auto& s : list.shapes) lset.insert(s);
        for (const auto& c : w.cliques) {
            for (int drop = 0; drop <= t; drop++) {
                std::vector<int> sub;
                for (int i = 0; i <= t; i++)
                    if (i != drop) sub.push_back(c[i]);
                std::vector<int> star(t);
                for (int i = 0; i < t; i++) star[i] = d.weight(sub[i], c[drop]);
                realized[sub].insert(star);
                realized[sub].insert(negate_star(star, k));
            }
        }
    }

    bool in_list(const std::vector<int>& sub, const std::vector<int>& star) const {
        int r = t + 1;
        std::vector<int> packed(r * (r - 1) / 2);
        for (int i = 0; i < t; i++)
            for (int j = i + 1; j < t; j++) packed[pidx(r, i, j)] = d.weight(sub[i], sub[j]);
        for (int i = 0; i < t; i++) packed[pidx(r, i, t)] = star[i];
        return lset.count(canonical_shape(r, packed)) > 0;
    }

    // all stars over the subset whose completion lies in the list
    std::vector<std::vector<int>> patterns(const std::vector<int>& sub) const {
        std::vector<std::vector<int>> pats;
        auto vals = canonical_values(k);
        std::sort(vals.begin(), vals.end());
        std::vector<int> star(t, 0);
        auto rec = [&](auto&& self, int at) -> void {
            if (at == t) {
                if (in_list(sub, star)) pats.push_back(star);
                return;
            }
            for (int v : vals) {
                star[at] = v;
                bool ok = true;
                for (int i = 0; i < at && ok; i++) {
                    int wij = d.weight(sub[i], sub[at]);
                    if ((star[i] + v + wij) % 2 != 0)
                        ok = false;
                    else if (!triangle_is_2k_wide(star[i], v, wij, k))
                        ok = false;
                }
                if (ok) self(self, at + 1);
            }
        };
        rec(rec, 0);
        return pats;
    }

    // first unsatisfied pattern on the subset, if any
    std::optional<std::vector<int>> missing_pattern(const std::vector<int>& sub) const {
        auto rit = realized.find(sub);
        for (const auto& p : patterns(sub)) {
            if (rit == realized.end() || !rit->second.count(p)) return p;
        }
        return std::nullopt;
    }
};

}  // namespace

std::vector<Defect> closedness_defects(const DistanceGraph& d, const CliqueSet& w, const WideCliqueList& list,
                                       int threads) {
    if (w.t != list.t) throw std::invalid_argument("closedness_defects: t mismatch");
    if (d.k != list.k) throw std::invalid_argument("closedness_defects: k mismatch");
    int t = w.t;
    ClosednessIndex index(d, list, w);

    // defect per t-subset, computed once
    std::vector<std::vector<int>> subs;
    {
        std::unordered_set<std::vector<int>, VecHash> seen;
        for (const auto& c : w.cliques)
            for (int drop = 0; drop <= t; drop++) {
                std::vector<int> sub;
                for (int i = 0; i <= t; i++)
                    if (i != drop) sub.push_back(c[i]);
                if (seen.insert(sub).second) subs.push_back(sub);
            }
    }
    std::sort(subs.begin(), subs.end());
    std::vector<std::optional<std::vector<int>>> sub_missing(subs.size());
    {
        int nthreads = std::max(1, threads);
        if (nthreads == 1) {
            for (size_t i = 0; i < subs.size(); i++) sub_missing[i] = index.missing_pattern(subs[i]);
        } else {
            std::vector<std::thread> pool;
            std::atomic_size_t cursor{0};
            for (int th = 0; th < nthreads; th++)
                pool.emplace_back([&]() {
                    size_t i;
                    while ((i = cursor.fetch_add(1)) < subs.size()) sub_missing[i] = index.missing_pattern(subs[i]);
                });
            for (auto& th : pool) th.join();
        }
    }
    std::unordered_map<std::vector<int>, size_t, VecHash> sub_at;
    for (size_t i = 0; i < subs.size(); i++) sub_at[subs[i]] = i;

    std::vector<Defect> out;
    for (const auto& c : w.cliques) {
        for (int drop = 0; drop <= t; drop++) {
            std::vector<int> sub;
            for (int i = 0; i <= t; i++)
                if (i != drop) sub.push_back(c[i]);
            const auto& miss = sub_missing[sub_at[sub]];
            if (miss) {
                out.push_back(Defect{c, DefectPattern{sub, *miss}});
                break;
            }
        }
    }
    return out;
}

std::pair<CliqueSet, PruneTrace> prune_to_closed(const DistanceGraph& d, const CliqueSet& w0,
                                                 const WideCliqueList& list, int threads, bool one_per_round) {
    CliqueSet w = w0;
    PruneTrace trace;
    int round = 0;
    while (true) {
        auto defects = closedness_defects(d, w, list, threads);
        if (defects.empty()) break;
        if (one_per_round) defects.resize(1);
        std::unordered_set<std::vector<int>, VecHash> gone;
        for (auto& df : defects) {
            trace.removals.push_back({round, df.clique, df.why});
            gone.insert(df.clique);
        }
        std::vector<std::vector<int>> kept;
        for (auto& c : w.cliques)
            if (!gone.count(c)) kept.push_back(c);
        w.cliques = std::move(kept);
        round++;
    }
    trace.rounds = round;
    return {w, trace};
}

BoundVerdict check_bound(const SignedGraph& b, int t, int k, int threads) {
    if (auto bad = contains_ok_element(b, 2 * k)) {
        std::ostringstream ss;
        ss << "check_bound: target contains a cycle that does not map to C_-" << 2 * k << " (sign "
           << (bad->sign > 0 ? "+" : "-") << ", length " << bad->length << ")";
        throw std::invalid_argument(ss.str());
    }
    auto girth = negative_girth(b);
    if (!girth || *girth != 2 * k)
        throw std::invalid_argument("check_bound: target unbalanced girth is not exactly 2k");

    auto list = enumerate_wide_cliques(t, k);
    auto d = build_distance_graph(b, k);
    auto w0 = all_cliques(d, t);
    auto [closed, trace] = prune_to_closed(d, w0, list, threads);

    BoundVerdict verdict;
    verdict.trace = trace;
    if (!closed.cliques.empty()) {
        verdict.bounds = true;
        verdict.certificate = closed;
        return verdict;
    }
    verdict.bounds = false;
    auto cex = build_counterexample(d, trace, list, t, k);
    verdict.counterexample = cex.graph;
    verdict.counterexample_verified = cex.verified;
    return verdict;
}

namespace {

// weighted t-tree under construction for the counterexample
struct TreeBuilder {
    int t, k;
    int nv = 0;
    std::map<std::pair<int, int>, int> wmap;

    int add_vertex() { return nv++; }
    void set_weight(int a, int b, int w) {
        if (a > b) std::swap(a, b);
        wmap[{a, b}] = w;
    }
    int weight(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = wmap.find({a, b});
        return it == wmap.end() ? 0 : it->second;
    }
    WeightedSignedGraph graph() const {
        WeightedSignedGraph h(nv);
        for (auto& [pr, w] : wmap) h.add_edge(pr.first, pr.second, w);
        return h;
    }
};

}  // namespace

Counterexample build_counterexample(const DistanceGraph& d, const PruneTrace& trace, const WideCliqueList& list,
                                    int t, int k, int oracle_budget) {
    if (trace.removals.empty()) throw std::invalid_argument("build_counterexample: trace is empty");
    if (list.t != t || list.k != k) throw std::invalid_argument("build_counterexample: list parameters disagree");
    if (list.shapes.empty()) throw std::invalid_argument("build_counterexample: empty wide clique list");
    int r = t + 1;

    // removed cliques with their round, pattern, and packed weights
    struct Removed {
        std::vector<int> verts;
        int round;
        DefectPattern why;
        std::vector<int> packed;
    };
    std::vector<Removed> removed;
    for (const auto& rem : trace.removals) {
        Removed rm{rem.clique, rem.round, rem.why, {}};
        rm.packed.resize(r * (r - 1) / 2);
        for (int i = 0; i < r; i++)
            for (int j = i + 1; j < r; j++) rm.packed[pidx(r, i, j)] = d.weight(rem.clique[i], rem.clique[j]);
        removed.push_back(std::move(rm));
    }
    int rounds = trace.rounds;

    // shapes realized in the initial set = shapes of all removed cliques
    // (the trace ends empty, so every clique was removed)
    std::vector<std::vector<int>> shapes;
    {
        std::unordered_set<std::vector<int>, VecHash> seen;
        for (const auto& rm : removed) {
            auto c = canonical_shape(r, rm.packed);
            if (seen.insert(c).second) shapes.push_back(c);
        }
        std::sort(shapes.begin(), shapes.end());
    }

    const int vertex_budget = 4000;
    struct Component {
        TreeBuilder tree;
        bool complete = true;
    };
    std::vector<Component> comps;

    for (const auto& shape : shapes) {
        Component comp;
        comp.tree.t = t;
        comp.tree.k = k;
        std::vector<int> root;
        for (int i = 0; i < r; i++) root.push_back(comp.tree.add_vertex());
        for (int i = 0; i < r; i++)
            for (int j = i + 1; j < r; j++) comp.tree.set_weight(root[i], root[j], shape[pidx(r, i, j)]);

        // pending cliques with the round bound they must be protected to
        std::deque<std::pair<std::vector<int>, int>> queue;
        queue.push_back({root, rounds});
        // attachment dedup: (attach vertices, star) -> protected bound
        std::map<std::pair<std::vector<int>, std::vector<int>>, std::pair<int, int>> attached;

        while (!queue.empty() && comp.tree.nv <= vertex_budget) {
            auto [q, bound] = queue.front();
            queue.pop_front();
            // switched-exact isomorphisms from q onto cliques removed
            // before `bound`
            for (const auto& rm : removed) {
                if (rm.round >= bound) continue;
                for (int flips = 0; flips < (1 << (r - 1)); flips++) {
                    auto f = [&](int i) { return i == 0 ? 1 : ((flips >> (i - 1) & 1) ? -1 : 1); };
                    std::vector<int> perm(r);
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        bool iso = true;
                        for (int i = 0; i < r && iso; i++)
                            for (int j = i + 1; j < r && iso; j++) {
                                int sw = canonicalize_weight(f(i) * f(j) * comp.tree.weight(q[i], q[j]), k);
                                if (sw != rm.packed[pidx(r, perm[i], perm[j])]) iso = false;
                            }
                        if (!iso) continue;
                        // pull the violating pattern back through the iso
                        std::vector<int> attach;
                        std::vector<int> star;
                        for (size_t a = 0; a < rm.why.t_subset.size(); a++) {
                            int dv = rm.why.t_subset[a];
                            // position of dv inside rm.verts, then through perm
                            int pos = static_cast<int>(std::lower_bound(rm.verts.begin(), rm.verts.end(), dv) -
                                                       rm.verts.begin());
                            int local = -1;
                            for (int i = 0; i < r; i++)
                                if (perm[i] == pos) local = i;
                            attach.push_back(q[local]);
                            star.push_back(canonicalize_weight(f(local) * rm.why.weights[a], k));
                        }
                        // sort attach with star aligned; stars that differ
                        // by global negation impose the same constraint
                        std::vector<int> ord(attach.size());
                        std::iota(ord.begin(), ord.end(), 0);
                        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return attach[a] < attach[b]; });
                        std::vector<int> sa, ss;
                        for (int i : ord) {
                            sa.push_back(attach[i]);
                            ss.push_back(star[i]);
                        }
                        ss = std::min(ss, negate_star(ss, k));
                        auto key = std::make_pair(sa, ss);
                        auto it = attached.find(key);
                        if (it != attached.end()) {
                            if (it->second.second < rm.round) {
                                it->second.second = rm.round;
                                std::vector<int> cl = sa;
                                cl.push_back(it->second.first);
                                std::sort(cl.begin(), cl.end());
                                queue.push_back({cl, rm.round});
                            }
                            continue;
                        }
                        if (comp.tree.nv > vertex_budget) break;
                        int z = comp.tree.add_vertex();
                        for (size_t i = 0; i < sa.size(); i++) comp.tree.set_weight(z, sa[i], ss[i]);
                        attached[key] = {z, rm.round};
                        std::vector<int> cl = sa;
                        cl.push_back(z);
                        std::sort(cl.begin(), cl.end());
                        queue.push_back({cl, rm.round});
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
            }
        }
        comp.complete = queue.empty() && comp.tree.nv <= vertex_budget;
        comps.push_back(std::move(comp));
    }

    // smallest verified component wins; fall back to the smallest overall
    std::vector<size_t> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return comps[a].tree.nv < comps[b].tree.nv; });

    Counterexample best;
    bool have = false;
    for (size_t idx : order) {
        auto& comp = comps[idx];
        auto wtree = comp.tree.graph();
        auto expanded = barbar_expand(wtree, k);
        if (!have) {
            best.tree = wtree;
            best.graph = expanded;
            best.verified = false;
            have = true;
        }
        if (!comp.complete) continue;
        if (expanded.n > oracle_budget) continue;
        if (find_homomorphism(expanded, d.base))
            throw std::logic_error("build_counterexample: constructed graph admits a homomorphism");
        best.tree = wtree;
        best.graph = expanded;
        best.verified = true;
        return best;
    }
    return best;
}

VertexMap map_partial_ttree(const SignedGraph& g, const CliqueSequence& seq, const DistanceGraph& d,
                            const CliqueSet& certificate) {
    int t = certificate.t, k = d.k;
    if (seq.t != t) throw std::invalid_argument("map_partial_ttree: sequence t differs from certificate t");
    if (certificate.cliques.empty()) throw std::invalid_argument("map_partial_ttree: empty certificate");
    auto h = completion_weights(g, seq, k);
    auto wt = [&](int a, int b) -> int {
        for (const auto& e : h.edges)
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.w;
        throw std::logic_error("map_partial_ttree: completion edge missing");
    };

    // certificate index: t-subset -> (star, u), exact stars
    std::unordered_map<std::vector<int>, std::vector<std::pair<std::vector<int>, int>>, VecHash> index;
    for (const auto& c : certificate.cliques)
        for (int drop = 0; drop <= t; drop++) {
            std::vector<int> sub;
            for (int i = 0; i <= t; i++)
                if (i != drop) sub.push_back(c[i]);
            std::vector<int> star(t);
            for (int i = 0; i < t; i++) star[i] = d.weight(sub[i], c[drop]);
            index[sub].push_back({star, c[drop]});
        }
    for (auto& [sub, lst] : index) std::sort(lst.begin(), lst.end());

    std::vector<int> image(g.n, -1);
    std::vector<char> flip(g.n, 0);
    int s = seq.seed_size(g.n);
    std::vector<int> seed(seq.order.begin(), seq.order.begin() + s);

    // seed: a switch-isomorphic copy in the certificate
    bool placed = false;
    for (const auto& c : certificate.cliques) {
        std::vector<int> perm(t + 1);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (int flips = 0; flips < (1 << s) && !placed; flips++) {
                auto f = [&](int i) { return (flips >> i & 1) ? -1 : 1; };
                bool ok = true;
                for (int i = 0; i < s && ok; i++)
                    for (int j = i + 1; j < s && ok; j++) {
                        int want = canonicalize_weight(f(i) * f(j) * wt(seed[i], seed[j]), k);
                        if (want != d.weight(c[perm[i]], c[perm[j]])) ok = false;
                    }
                if (!ok) continue;
                for (int i = 0; i < s; i++) {
                    image[seed[i]] = c[perm[i]];
                    flip[seed[i]] = static_cast<char>(f(i) < 0);
                }
                placed = true;
            }
            if (placed) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (placed) break;
    }
    if (!placed) throw std::logic_error("map_partial_ttree: seed clique has no copy in the certificate");

    for (size_t j = s; j < seq.order.size(); j++) {
        int v = seq.order[j];
        const auto& at = seq.attach[j - s];
        std::vector<std::pair<int, int>> img_and_w;  // (image vertex, required star entry)
        for (int u : at) {
            int req = canonicalize_weight((flip[u] ? -1 : 1) * wt(u, v), k);
            img_and_w.push_back({image[u], req});
        }
        std::sort(img_and_w.begin(), img_and_w.end());
        std::vector<int> sub, star;
        for (auto& [iu, wv] : img_and_w) {
            sub.push_back(iu);
            star.push_back(wv);
        }
        for (size_t i = 1; i < sub.size(); i++)
            if (sub[i] == sub[i - 1]) throw std::logic_error("map_partial_ttree: attach images collide");
        auto neg = negate_star(star, k);
        auto it = index.find(sub);
        bool done = false;
        if (it != index.end()) {
            for (const auto& [st, u] : it->second) {
                if (st == star) {
                    image[v] = u;
                    flip[v] = 0;
                    done = true;
                    break;
                }
                if (st == neg) {
                    image[v] = u;
                    flip[v] = 1;
                    done = true;
                    break;
                }
            }
        }
        if (!done) throw std::logic_error("map_partial_ttree: closedness failed to supply an extension");
    }

    VertexMap out;
    out.image = image;
    out.switching.flip = flip;
    return out;
}

std::optional<std::vector<int>> find_isomorphic_copy(const std::vector<int>& shape, const DistanceGraph& d,
                                                     const CliqueSet& certificate) {
    int t = certificate.t, r = t + 1;
    auto key = switch_canonical_shape(r, d.k, shape);
    for (const auto& c : certificate.cliques) {
        std::vector<int> packed(r * (r - 1) / 2);
        for (int i = 0; i < r; i++)
            for (int j = i + 1; j < r; j++) packed[pidx(r, i, j)] = d.weight(c[i], c[j]);
        if (switch_canonical_shape(r, d.k, packed) == key) return c;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> isomorphic_copy_walk(const std::vector<int>& shape, const DistanceGraph& d,
                                            const CliqueSet& certificate, int step_limit) {
    int t = certificate.t, k = d.k, r = t + 1;
    if (certificate.cliques.empty()) return std::nullopt;
    if (k == 1) return find_isomorphic_copy(shape, d, certificate);
    int a_even = (k % 2 == 0) ? k : k - 1;

    // star index over the certificate
    std::unordered_map<std::vector<int>, std::vector<std::pair<std::vector<int>, int>>, VecHash> index;
    for (const auto& c : certificate.cliques)
        for (int drop = 0; drop <= t; drop++) {
            std::vector<int> sub;
            for (int i = 0; i <= t; i++)
                if (i != drop) sub.push_back(c[i]);
            std::vector<int> star(t);
            for (int i = 0; i < t; i++) star[i] = d.weight(sub[i], c[drop]);
            index[sub].push_back({star, c[drop]});
        }
    for (auto& [sub, lst] : index) std::sort(lst.begin(), lst.end());

    // one abstract move: rewrite the star of vertex v to {k, k-1} values,
    // either keeping each entry's parity (c=0) or flipping all (c=1)
    auto moved_star = [&](const std::vector<int>& packed, int v, int c) {
        std::vector<int> star;
        for (int u = 0; u < r; u++) {
            if (u == v) continue;
            int w = std::abs(packed[pidx(r, u, v)]) % 2;
            int parity = c ? 1 - w : w;
            star.push_back(parity == k % 2 ? k : k - 1);
        }
        return star;
    };
    auto apply_star = [&](std::vector<int> packed, int v, const std::vector<int>& star) {
        int at = 0;
        for (int u = 0; u < r; u++) {
            if (u == v) continue;
            packed[pidx(r, u, v)] = star[at++];
        }
        return packed;
    };
    auto count_a = [&](const std::vector<int>& packed) {
        int c = 0;
        for (int w : packed)
            if (w == a_even) c++;
        return c;
    };
    auto is_xk = [&](const std::vector<int>& packed) {
        for (int w : packed)
            if (w != a_even) return false;
        return true;
    };

    // abstract walk from the given shape to the all-even clique
    std::vector<std::pair<int, std::vector<int>>> moves;  // (vertex, star before the move)
    {
        std::vector<int> cur = shape;
        for (int step = 0; step < step_limit && !is_xk(cur); step++) {
            // prefer a vertex with an out-of-range weight, else one in the
            // smaller parity class among the {k,k-1} weights
            int pick = -1;
            for (int v = 0; v < r && pick < 0; v++)
                for (int u = 0; u < r; u++)
                    if (u != v && cur[pidx(r, u, v)] != k && cur[pidx(r, u, v)] != k - 1) {
                        pick = v;
                        break;
                    }
            if (pick < 0) {
                // classes: component split by odd edges; flip a vertex of
                // the smaller class (odd count strictly drops)
                std::vector<char> cls(r, 0);
                for (int u = 1; u < r; u++) cls[u] = static_cast<char>((std::abs(cur[pidx(r, 0, u)]) % 2) != (a_even % 2) ? 1 : 0);
                int ones = 0;
                for (int u = 0; u < r; u++) ones += cls[u];
                char small = static_cast<char>(ones * 2 <= r ? 1 : 0);
                for (int u = 0; u < r; u++)
                    if (cls[u] == small) {
                        pick = u;
                        break;
                    }
            }
            std::vector<int> old_star;
            for (int u = 0; u < r; u++)
                if (u != pick) old_star.push_back(cur[pidx(r, u, pick)]);
            auto s0 = moved_star(cur, pick, 0);
            auto s1 = moved_star(cur, pick, 1);
            auto p0 = apply_star(cur, pick, s0);
            auto p1 = apply_star(cur, pick, s1);
            std::vector<int> nxt;
            if (count_a(p0) == count_a(cur) && p0 == cur)
                nxt = p1;  // identity move stalls; take the flip
            else
                nxt = count_a(p0) >= count_a(p1) ? p0 : p1;
            moves.push_back({pick, old_star});
            cur = nxt;
        }
        if (!is_xk(cur)) return std::nullopt;
    }

    // forward walk from a certificate element to an X_k copy, using the
    // same schedule on its actual weights
    std::vector<int> verts = certificate.cliques.front();
    std::vector<char> flip(r, 0);
    auto cur_packed = [&]() {
        std::vector<int> p(r * (r - 1) / 2);
        for (int i = 0; i < r; i++)
            for (int j = i + 1; j < r; j++)
                p[pidx(r, i, j)] = canonicalize_weight((flip[i] ? -1 : 1) * (flip[j] ? -1 : 1) * d.weight(verts[i], verts[j]), k);
        return p;
    };
    auto realize_star = [&](int v, const std::vector<int>& star) -> bool {
        // required exact star on the actual vertices, undoing the flips
        std::vector<std::pair<int, int>> pairs;
        int at = 0;
        for (int u = 0; u < r; u++) {
            if (u == v) continue;
            pairs.push_back({verts[u], canonicalize_weight((flip[u] ? -1 : 1) * star[at++], k)});
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> sub, want;
        for (auto& [a, b] : pairs) {
            sub.push_back(a);
            want.push_back(b);
        }
        auto neg = negate_star(want, k);
        auto it = index.find(sub);
        if (it == index.end()) return false;
        for (const auto& [st, u] : it->second) {
            if (st == want) {
                verts[v] = u;
                flip[v] = 0;
                return true;
            }
            if (st == neg) {
                verts[v] = u;
                flip[v] = 1;
                return true;
            }
        }
        return false;
    };
    {
        std::vector<int> cur = cur_packed();
        for (int step = 0; step < step_limit && !is_xk(cur); step++) {
            int pick = -1;
            for (int v = 0; v < r && pick < 0; v++)
                for (int u = 0; u < r; u++)
                    if (u != v && cur[pidx(r, u, v)] != k && cur[pidx(r, u, v)] != k - 1) {
                        pick = v;
                        break;
                    }
            if (pick < 0) {
                std::vector<char> cls(r, 0);
                for (int u = 1; u < r; u++) cls[u] = static_cast<char>((std::abs(cur[pidx(r, 0, u)]) % 2) != (a_even % 2) ? 1 : 0);
                int ones = 0;
                for (int u = 0; u < r; u++) ones += cls[u];
                char small = static_cast<char>(ones * 2 <= r ? 1 : 0);
                for (int u = 0; u < r; u++)
                    if (cls[u] == small) {
                        pick = u;
                        break;
                    }
            }
            auto s0 = moved_star(cur, pick, 0);
            auto s1 = moved_star(cur, pick, 1);
            auto p0 = apply_star(cur, pick, s0);
            auto p1 = apply_star(cur, pick, s1);
            std::vector<int> chosen;
            if (p0 == cur)
                chosen = s1;
            else
                chosen = count_a(p0) >= count_a(p1) ? s0 : s1;
            if (!realize_star(pick, chosen)) return std::nullopt;
            cur = cur_packed();
        }
        if (!is_xk(cur)) return std::nullopt;
    }

    // replay the abstract moves backward from the X_k copy
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        if (!realize_star(it->first, it->second)) return std::nullopt;
    }
    std::vector<int> out = verts;
    std::sort(out.begin(), out.end());
    return out;
}

std::string certificate_to_json(const DistanceGraph& d, const CliqueSet& cert, int k, const std::string& base_ref) {
    nlohmann::ordered_json j;
    j["t"] = cert.t;
    j["k"] = k;
    j["B"] = base_ref;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cert.cliques) {
        nlohmann::ordered_json jc;
        jc["vertices"] = c;
        auto ws = nlohmann::ordered_json::array();
        for (size_t i = 0; i < c.size(); i++)
            for (size_t l = i + 1; l < c.size(); l++)
                ws.push_back(nlohmann::ordered_json::array({c[i], c[l], d.weight(c[i], c[l])}));
        jc["weights"] = ws;
        arr.push_back(jc);
    }
    j["cliques"] = arr;
    return j.dump(2) + "\n";
}

CliqueSet certificate_from_json(const std::string& text, int* t, int* k, std::string* base_ref) {
    auto j = nlohmann::json::parse(text);
    CliqueSet cert;
    cert.t = j.at("t").get<int>();
    if (t) *t = cert.t;
    if (k) *k = j.at("k").get<int>();
    if (base_ref) *base_ref = j.at("B").get<std::string>();
    for (const auto& jc : j.at("cliques")) cert.cliques.push_back(jc.at("vertices").get<std::vector<int>>());
    std::sort(cert.cliques.begin(), cert.cliques.end());
    return cert;
}

std::string trace_to_json(const PruneTrace& trace) {
    nlohmann::ordered_json j;
    j["rounds"] = trace.rounds;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rem : trace.removals) {
        nlohmann::ordered_json jr;
        jr["round"] = rem.round;
        jr["clique"] = rem.clique;
        jr["violation"] = {{"t_subset", rem.why.t_subset}, {"pattern", rem.why.weights}};
        arr.push_back(jr);
    }
    j["removals"] = arr;
    return j.dump(2) + "\n";
}

std::string vertex_map_to_json(const VertexMap& f) {
    nlohmann::ordered_json j;
    j["image"] = f.image;
    auto sw = nlohmann::ordered_json::array();
    for (char c : f.switching.flip) sw.push_back(c ? 1 : 0);
    j["switch"] = sw;
    return j.dump(2) + "\n";
}

}  // namespace sgb
