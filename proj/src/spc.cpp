#include "sgb/spc.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgb {

SpcGraph spc(int n) {
    if (n < 1) throw std::invalid_argument("spc: dimension must be >= 1");
    if (n > 20) throw std::invalid_argument("spc: dimension beyond desk scale");
    int size = 1 << n;
    SpcGraph out;
    out.dim = n;
    out.graph = SignedGraph(size);
    for (uint32_t u = 0; u < static_cast<uint32_t>(size); u++)
        for (int i = 0; i < n; i++) {
            uint32_t v = u ^ (uint32_t(1) << i);
            if (u < v) {
                out.graph.add_edge(static_cast<int>(u), static_cast<int>(v), +1);
                out.label.push_back(i);
            }
        }
    uint32_t full = static_cast<uint32_t>(size - 1);
    for (uint32_t u = 0; u < static_cast<uint32_t>(size); u++) {
        uint32_t v = u ^ full;
        if (u < v) {
            out.graph.add_edge(static_cast<int>(u), static_cast<int>(v), -1);
            out.label.push_back(n);
        }
    }
    return out;
}

int PairPosition::plus_size() const { return __builtin_popcount(plus_mask); }
int PairPosition::minus_size() const { return dim + 1 - plus_size(); }

int PairPosition::algebraic_distance() const {
    int p = plus_size(), m = minus_size();
    if (p < m) return p;
    if (m < p) return -m;
    return p;  // tie: positive
}

PairPosition spc_pair_position(int n, uint32_t u, uint32_t v) {
    if (u == v) throw std::invalid_argument("spc_pair_position: identical vertices");
    uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    if ((u | full) != full || (v | full) != full) throw std::invalid_argument("spc_pair_position: vertex out of range");
    return PairPosition{n, (u ^ v) & full};
}

DistanceGraph spc_distance_graph(int k) {
    if (k < 1) throw std::invalid_argument("spc_distance_graph: k must be >= 1");
    int n = 2 * k - 1;
    if (n > 12) throw std::invalid_argument("spc_distance_graph: dimension beyond desk scale");
    auto cube = spc(n);
    DistanceGraph d;
    d.base = cube.graph;
    d.k = k;
    int size = 1 << n;
    d.w.assign(size, std::vector<int>(size, 0));
    for (int u = 0; u < size; u++)
        for (int v = u + 1; v < size; v++) {
            int ad = spc_pair_position(n, static_cast<uint32_t>(u), static_cast<uint32_t>(v)).algebraic_distance();
            d.w[u][v] = d.w[v][u] = ad;
        }
    return d;
}

namespace {

// label vectors: index 0..n-1 are unit vectors, index n is J
uint32_t label_vector(int n, int label) {
    if (label == n) return (uint32_t(1) << n) - 1;
    return uint32_t(1) << label;
}

// the side of the label partition of a pair that contains J, as a mask
// over label indices 0..n
uint32_t j_side_labels(int n, uint32_t u, uint32_t v) {
    uint32_t diff = u ^ v;
    uint32_t mask = uint32_t(1) << n;  // J
    for (int i = 0; i < n; i++)
        if (!(diff >> i & 1)) mask |= uint32_t(1) << i;
    return mask;
}

}  // namespace

std::optional<SpcAutomorphism> spc_triple_automorphism(int n, std::array<uint32_t, 3> from,
                                                       std::array<uint32_t, 3> to) {
    if (from[0] == from[1] || from[1] == from[2] || from[0] == from[2])
        throw std::invalid_argument("spc_triple_automorphism: source triple not distinct");
    if (to[0] == to[1] || to[1] == to[2] || to[0] == to[2])
        throw std::invalid_argument("spc_triple_automorphism: target triple not distinct");

    int nlabels = n + 1;
    uint32_t all_labels = (uint32_t(1) << nlabels) - 1;
    auto pair_sets = [&](const std::array<uint32_t, 3>& tr, int swapmask) {
        // swapmask bit i : the role of the sets at pair i is swapped,
        // pairs ordered (0,1), (1,2), (2,0)
        std::array<uint32_t, 3> s;
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (int i = 0; i < 3; i++) {
            uint32_t side = j_side_labels(n, tr[pairs[i].first], tr[pairs[i].second]);
            s[i] = (swapmask >> i & 1) ? (all_labels & ~side) : side;
        }
        return s;
    };
    auto profile = [&](const std::array<uint32_t, 3>& s) {
        return std::array<int, 3>{__builtin_popcount(s[0]), __builtin_popcount(s[1]), __builtin_popcount(s[2])};
    };

    auto target_sets = pair_sets(to, 0);
    auto target_prof = profile(target_sets);

    // switching at a source vertex swaps the roles at its two incident
    // pairs; subsets of {x,y,z} modulo complement give four swap patterns
    for (int flips : {0, 1, 2, 4}) {
        int swapmask = 0;
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (int i = 0; i < 3; i++) {
            int fa = flips >> pairs[i].first & 1, fb = flips >> pairs[i].second & 1;
            if (fa ^ fb) swapmask |= 1 << i;
        }
        auto src_sets = pair_sets(from, swapmask);
        if (profile(src_sets) != target_prof) continue;

        // four-part partitions: common part and the three exclusive parts
        uint32_t s_common = src_sets[0] & src_sets[1] & src_sets[2];
        uint32_t t_common = target_sets[0] & target_sets[1] & target_sets[2];
        std::array<uint32_t, 4> sparts{s_common, src_sets[0] & ~s_common, src_sets[1] & ~s_common,
                                       src_sets[2] & ~s_common};
        std::array<uint32_t, 4> tparts{t_common, target_sets[0] & ~t_common, target_sets[1] & ~t_common,
                                       target_sets[2] & ~t_common};
        bool ok = true;
        for (int i = 0; i < 4 && ok; i++)
            if (__builtin_popcount(sparts[i]) != __builtin_popcount(tparts[i])) ok = false;
        if (!ok) continue;

        // label permutation mapping part to part in ascending label order;
        // every label lies in exactly one or all three of the side sets,
        // so the four parts cover S_n
        std::vector<int> mu(nlabels, -1);
        for (int p = 0; p < 4; p++) {
            uint32_t a = sparts[p], b = tparts[p];
            while (a) {
                int la = __builtin_ctz(a), lb = __builtin_ctz(b);
                a &= a - 1;
                b &= b - 1;
                mu[la] = lb;
            }
        }
        for (int l = 0; l < nlabels; l++)
            if (mu[l] < 0) throw std::logic_error("triple automorphism: side sets fail to cover the labels");

        // linear map over Z_2^n from mu, then translate x to u
        uint32_t nmask = (uint32_t(1) << n) - 1;
        std::vector<uint32_t> mu_vec(nlabels);
        for (int l = 0; l < nlabels; l++) mu_vec[l] = label_vector(n, mu[l]) & nmask;
        auto apply_linear = [&](uint32_t a) {
            uint32_t r = 0;
            for (int i = 0; i < n; i++)
                if (a >> i & 1) r ^= mu_vec[i];
            return r;
        };
        auto f = [&](uint32_t a) { return apply_linear(a ^ from[0]) ^ to[0]; };
        if (f(from[0]) != to[0] || f(from[1]) != to[1] || f(from[2]) != to[2]) continue;

        // pull the signature back through f and find the switching that
        // restores it (exists because cycle signs are preserved)
        SpcGraph base = spc(n);
        SignedGraph pulled(base.graph.n);
        bool bad = false;
        for (const auto& e : base.graph.edges) {
            uint32_t a = f(static_cast<uint32_t>(e.u)), b = f(static_cast<uint32_t>(e.v));
            uint32_t d = a ^ b;
            int sign;
            if (__builtin_popcount(d) == 1)
                sign = +1;
            else if (d == nmask)
                sign = -1;
            else {
                bad = true;
                break;
            }
            pulled.add_edge(e.u, e.v, sign);
        }
        if (bad) continue;
        auto sw = switching_equivalence(pulled, base.graph);
        if (!sw) continue;

        SpcAutomorphism out;
        out.image.resize(base.graph.n);
        for (int a = 0; a < base.graph.n; a++) out.image[a] = static_cast<int>(f(static_cast<uint32_t>(a)));
        out.switching = *sw;
        if (!verify_homomorphism(base.graph, base.graph, out)) continue;
        return out;
    }
    return std::nullopt;
}

std::array<uint32_t, 4> realize_k4_in_spc(int k, const WeightedClique& k4) {
    if (k4.size() != 4) throw std::invalid_argument("realize_k4_in_spc: clique must have 4 vertices");
    if (k4.k != k) throw std::invalid_argument("realize_k4_in_spc: parameter mismatch");
    if (!clique_is_bipartite(k4)) throw std::invalid_argument("realize_k4_in_spc: clique is not bipartite");
    if (!clique_is_2k_wide(k4)) throw std::invalid_argument("realize_k4_in_spc: clique is not 2k-wide");
    int n = 2 * k - 1;

    // magnitude of the negative representative of a weight
    auto negrep = [&](int w) { return w < 0 ? -w : 2 * k - w; };

    // t value of the triangle avoiding vertex i
    auto tval = [&](int skip) {
        int s = 0;
        for (int a = 0; a < 4; a++)
            for (int b = a + 1; b < 4; b++)
                if (a != skip && b != skip) s += negrep(k4.weight(a, b));
        return (s - 2 * k) / 2;
    };
    int tv[4];
    for (int i = 0; i < 4; i++) tv[i] = tval(i);
    // vertex v of the construction is the one whose opposite triangle has
    // the minimal t; keep input order among the rest
    int vpos = 0;
    for (int i = 1; i < 4; i++)
        if (tv[i] < tv[vpos]) vpos = i;
    std::array<int, 4> loc{};  // x, y, z, v as local indices
    {
        int at = 0;
        for (int i = 0; i < 4; i++)
            if (i != vpos) loc[at++] = i;
        loc[3] = vpos;
    }
    int X = loc[0], Y = loc[1], Z = loc[2], V = loc[3];
    int a = negrep(k4.weight(Y, Z)), b = negrep(k4.weight(X, Z)), c = negrep(k4.weight(X, Y));
    int alpha = negrep(k4.weight(X, V)), beta = negrep(k4.weight(Y, V)), gamma = negrep(k4.weight(Z, V));
    int t0 = (a + b + c - 2 * k) / 2;
    int t1 = (a + beta + gamma - 2 * k) / 2;
    int t2 = (alpha + b + gamma - 2 * k) / 2;
    int t3 = (alpha + beta + c - 2 * k) / 2;
    // A realized triangle has J in all three negative-side sets, so each
    // t value is at least 1. A clique with some t = 0 has no exact
    // realization; switch it to an equivalent one first.
    if (t0 < 1)
        throw std::invalid_argument("realize_k4_in_spc: a triangle has negative-side sum 2k; no exact realization");
    if (t1 < t0 || t2 < t0 || t3 < t0 || a < t1 || b < t2 || c < t3)
        throw std::logic_error("realize_k4_in_spc: infeasible t values for a wide clique");

    // partition the n+1 labels into the seven index sets; J goes first
    // into the common set, units are taken in ascending order
    int sizes[7] = {t0, t1 - t0, t2 - t0, t3 - t0, a - t1, b - t2, c - t3};
    int total = 0;
    for (int s : sizes) total += s;
    if (total != 2 * k) throw std::logic_error("realize_k4_in_spc: label partition size mismatch");
    uint32_t part[7] = {0, 0, 0, 0, 0, 0, 0};
    {
        int next_unit = 0;
        part[0] |= uint32_t(1) << n;  // J
        for (int i = 1; i < sizes[0]; i++) part[0] |= uint32_t(1) << next_unit++;
        for (int p = 1; p < 7; p++)
            for (int i = 0; i < sizes[p]; i++) part[p] |= uint32_t(1) << next_unit++;
    }
    // only the three sets at x are needed to place the other vertices;
    // the final distance verification covers the remaining edges
    uint32_t s_b = part[0] | part[2] | part[5];
    uint32_t s_c = part[0] | part[3] | part[6];
    uint32_t s_alpha = part[0] | part[2] | part[3] | part[4];

    uint32_t nmask = (uint32_t(1) << n) - 1;
    auto sum_labels = [&](uint32_t labels) {
        uint32_t r = 0;
        for (int l = 0; l <= n; l++)
            if (labels >> l & 1) r ^= label_vector(n, l) & nmask;
        return r;
    };
    std::array<uint32_t, 4> img{};  // images of local vertices X,Y,Z,V in loc order
    uint32_t x = 0;
    img[0] = x;
    img[1] = x ^ sum_labels(s_c);      // y across edge xy
    img[2] = x ^ sum_labels(s_b);      // z across edge xz
    img[3] = x ^ sum_labels(s_alpha);  // v across edge xv

    std::array<uint32_t, 4> out{};
    for (int i = 0; i < 4; i++) out[loc[i]] = img[i];

    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++) {
            int want = canonicalize_weight(k4.weight(i, j), k);
            int got = spc_pair_position(n, out[i], out[j]).algebraic_distance();
            if (got != want) throw std::logic_error("realize_k4_in_spc: distance verification failed");
        }
    return out;
}

SignedGraph edc(const SignedGraph& g) {
    SignedGraph out(2 * g.n);
    for (const auto& e : g.edges) {
        if (e.sign > 0) {
            out.add_edge(e.u, e.v, +1);
            out.add_edge(e.u + g.n, e.v + g.n, +1);
        } else {
            out.add_edge(e.u, e.v + g.n, +1);
            out.add_edge(e.u + g.n, e.v, +1);
        }
    }
    for (int x = 0; x < g.n; x++) out.add_edge(x, x + g.n, -1);
    return out;
}

}  // namespace sgb
