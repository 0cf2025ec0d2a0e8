#include "sgb/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgb/bounds.hpp"
#include "sgb/planar.hpp"
#include "sgb/signed_graph.hpp"
#include "sgb/spc.hpp"
#include "sgb/ttree.hpp"
#include "sgb/weighted_graph.hpp"

namespace sgb {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string describe_cycle(const CycleWitness& c) {
    std::ostringstream ss;
    ss << (c.sign > 0 ? "positive" : "negative") << " cycle of length " << c.length << ":";
    for (int v : c.vertices) ss << " " << v;
    return ss.str();
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"homomorphism bounds for signed bipartite graphs of bounded treewidth"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for the pruning rounds")->capture_default_str();

    std::string in_a, in_b, out_path, cert_path, trace_path;
    int t = 3, k = 2, spc_n = 3;

    auto* c_girth = app.add_subcommand("neg-girth", "negative girth of a signed graph");
    c_girth->add_option("file", in_a, ".sg input")->required();

    auto* c_sweq = app.add_subcommand("switch-equiv", "are two signatures switching equivalent");
    c_sweq->add_option("a", in_a, "first .sg")->required();
    c_sweq->add_option("b", in_b, "second .sg")->required();

    auto* c_wide = app.add_subcommand("wide", "is a weighted graph 2k-wide");
    c_wide->add_option("--k", k, "width parameter")->required();
    c_wide->add_option("file", in_a, ".swg input")->required();

    auto* c_expand = app.add_subcommand("expand", "two-path expansion of a weighted graph");
    c_expand->add_option("--k", k, "width parameter")->required();
    c_expand->add_option("file", in_a, ".swg input")->required();
    c_expand->add_option("-o", out_path, "output .sg")->required();

    auto* c_spc = app.add_subcommand("spc", "signed projective cube");
    c_spc->add_option("n", spc_n, "dimension")->required();
    c_spc->add_option("-o", out_path, "output .sg (labels beside it)")->required();

    auto* c_edc = app.add_subcommand("edc", "extended double cover");
    c_edc->add_option("file", in_a, ".sg input")->required();
    c_edc->add_option("-o", out_path, "output .sg")->required();

    auto* c_list = app.add_subcommand("list-cliques", "the list of wide cliques");
    c_list->add_option("--t", t, "clique size minus one")->required();
    c_list->add_option("--k", k, "width parameter")->required();

    auto* c_check = app.add_subcommand("check-bound", "does a target bound the bipartite partial t-trees of its girth");
    c_check->add_option("--t", t, "treewidth bound")->required();
    c_check->add_option("--k", k, "half the unbalanced girth")->required();
    c_check->add_option("target", in_a, "target .sg")->required();
    c_check->add_option("-o", out_path, "certificate .json (yes) or counterexample .sg (no)");
    c_check->add_option("--trace", trace_path, "pruning trace .json");

    auto* c_map = app.add_subcommand("map", "map a partial t-tree into a certified target");
    c_map->add_option("--t", t, "treewidth bound")->required();
    c_map->add_option("--k", k, "half the unbalanced girth")->required();
    c_map->add_option("graph", in_a, "source .sg")->required();
    c_map->add_option("target", in_b, "target .sg")->required();
    c_map->add_option("--certificate", cert_path, "certificate .json")->required();
    c_map->add_option("-o", out_path, "map .json")->required();

    auto* c_hom = app.add_subcommand("hom", "exhaustive homomorphism oracle");
    c_hom->add_option("graph", in_a, "source .sg")->required();
    c_hom->add_option("target", in_b, "target .sg")->required();

    auto* c_color = app.add_subcommand("edge-color", "2k-edge-color a planar map with a partial 3-tree dual");
    c_color->add_option("--k", k, "half the degree")->required();
    c_color->add_option("map", in_a, ".pm input")->required();
    c_color->add_option("-o", out_path, "colors output");

    auto* c_ok = app.add_subcommand("contains-ok", "find a cycle that does not map to C_-k");
    c_ok->add_option("--k", k, "cycle parameter")->required();
    c_ok->add_option("file", in_a, ".sg input")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream ss;
        int code = app.exit(e, ss, ss);
        if (code == 0) {
            std::cout << ss.str();  // help and version requests
            return 0;
        }
        std::cerr << ss.str();
        return 2;
    }

    try {
        if (*c_girth) {
            auto g = read_sg_file(in_a);
            auto girth = negative_girth(g);
            if (girth)
                std::cout << *girth << "\n";
            else
                std::cout << "none\n";
            return 0;
        }
        if (*c_sweq) {
            auto a = read_sg_file(in_a), b = read_sg_file(in_b);
            auto sw = switching_equivalence(a, b);
            if (!sw) {
                std::cout << "not switching equivalent\n";
                return 1;
            }
            std::cout << "switching equivalent; flip set:";
            for (int v = 0; v < a.n; v++)
                if (sw->flip[v]) std::cout << " " << v;
            std::cout << "\n";
            return 0;
        }
        if (*c_wide) {
            bool rewritten = false;
            auto h = read_swg_file(in_a, k, &rewritten);
            if (rewritten) std::cerr << "note: magnitude-k weights canonicalized to +" << k << "\n";
            bool wide = is_2k_wide(h, k);
            std::cout << (wide ? "wide\n" : "not wide\n");
            return wide ? 0 : 1;
        }
        if (*c_expand) {
            bool rewritten = false;
            auto h = read_swg_file(in_a, k, &rewritten);
            if (rewritten) std::cerr << "note: magnitude-k weights canonicalized to +" << k << "\n";
            write_file(out_path, to_sg(barbar_expand(h, k)));
            return 0;
        }
        if (*c_spc) {
            auto cube = spc(spc_n);
            write_file(out_path, to_sg(cube.graph));
            std::ostringstream lab;
            for (int e = 0; e < cube.graph.m(); e++) lab << e << " " << cube.label[e] << "\n";
            write_file(out_path + ".labels", lab.str());
            return 0;
        }
        if (*c_edc) {
            auto g = read_sg_file(in_a);
            write_file(out_path, to_sg(edc(g)));
            return 0;
        }
        if (*c_list) {
            auto list = enumerate_wide_cliques(t, k);
            std::cout << list.shapes.size() << " wide bipartite " << (t + 1) << "-cliques for 2k = " << 2 * k
                      << "\n";
            int r = t + 1;
            for (const auto& shape : list.shapes) {
                int at = 0;
                for (int i = 0; i < r; i++)
                    for (int j = i + 1; j < r; j++) std::cout << (at++ ? " " : "") << "w(" << i << "," << j << ")=" << shape[i * (2 * r - i - 1) / 2 + (j - i - 1)];
                std::cout << "\n";
            }
            return 0;
        }
        if (*c_check) {
            auto b = read_sg_file(in_a);
            auto verdict = check_bound(b, t, k, threads);
            if (!trace_path.empty()) write_file(trace_path, trace_to_json(verdict.trace));
            if (verdict.bounds) {
                std::cout << "bounds: certificate with " << verdict.certificate.cliques.size() << " cliques\n";
                if (!out_path.empty()) {
                    auto d = build_distance_graph(b, k);
                    write_file(out_path, certificate_to_json(d, verdict.certificate, k, in_a));
                }
                return 0;
            }
            std::cout << "does not bound: counterexample with " << verdict.counterexample.n << " vertices"
                      << (verdict.counterexample_verified ? " (oracle verified)" : " (not oracle-verified)") << "\n";
            if (!out_path.empty()) write_file(out_path, to_sg(verdict.counterexample));
            return 1;
        }
        if (*c_map) {
            auto g = read_sg_file(in_a);
            auto b = read_sg_file(in_b);
            std::ifstream cf(cert_path);
            if (!cf) throw std::runtime_error("cannot open " + cert_path);
            std::stringstream buf;
            buf << cf.rdbuf();
            int ct = 0, ck = 0;
            auto cert = certificate_from_json(buf.str(), &ct, &ck);
            if (ct != t || ck != k) throw std::runtime_error("certificate parameters disagree with --t/--k");
            if (auto bad = contains_ok_element(g, 2 * k)) {
                std::cout << "not mappable: " << describe_cycle(*bad) << "\n";
                return 1;
            }
            auto d = build_distance_graph(b, k);
            // components are mapped independently; the completion needs
            // finite distances
            std::vector<int> comp(g.n, -1);
            int ncomp = 0;
            for (int root = 0; root < g.n; root++) {
                if (comp[root] >= 0) continue;
                comp[root] = ncomp;
                std::vector<int> stack{root};
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (auto [w, eid] : g.adj[v])
                        if (comp[w] < 0) {
                            comp[w] = ncomp;
                            stack.push_back(w);
                        }
                }
                ncomp++;
            }
            VertexMap full;
            full.image.assign(g.n, -1);
            full.switching = Switching::none(g.n);
            for (int c = 0; c < ncomp; c++) {
                std::vector<int> verts;
                std::vector<int> local(g.n, -1);
                for (int v = 0; v < g.n; v++)
                    if (comp[v] == c) {
                        local[v] = static_cast<int>(verts.size());
                        verts.push_back(v);
                    }
                SignedGraph sub(static_cast<int>(verts.size()));
                for (auto& e : g.edges)
                    if (comp[e.u] == c) sub.add_edge(local[e.u], local[e.v], e.sign);
                auto seq = recognize_partial_ttree(sub, t);
                if (!seq) {
                    std::cout << "not mappable: graph is not a partial " << t << "-tree\n";
                    return 1;
                }
                auto f = map_partial_ttree(sub, *seq, d, cert);
                for (size_t i = 0; i < verts.size(); i++) {
                    full.image[verts[i]] = f.image[i];
                    full.switching.flip[verts[i]] = f.switching.flip[i];
                }
            }
            if (!verify_homomorphism(g, b, full)) throw std::logic_error("map failed verification");
            write_file(out_path, vertex_map_to_json(full));
            std::cout << "mapped " << g.n << " vertices\n";
            return 0;
        }
        if (*c_hom) {
            auto g = read_sg_file(in_a);
            auto b = read_sg_file(in_b);
            auto f = find_homomorphism(g, b);
            if (!f) {
                std::cout << "no homomorphism\n";
                return 1;
            }
            std::cout << vertex_map_to_json(*f);
            return 0;
        }
        if (*c_color) {
            auto m = read_pm_file(in_a);
            EdgeColoring col;
            try {
                col = edge_color(m, k);
            } catch (const EdgeColorError& e) {
                std::cout << "rejected: " << e.message << "\n";
                return 1;
            }
            std::ostringstream ss;
            for (int e = 0; e < m.g.m(); e++) ss << "color " << e << " " << col.color[e] << "\n";
            if (!out_path.empty())
                write_file(out_path, ss.str());
            else
                std::cout << ss.str();
            return 0;
        }
        if (*c_ok) {
            auto g = read_sg_file(in_a);
            auto w = contains_ok_element(g, k);
            if (w) {
                std::cout << describe_cycle(*w) << "\n";
                return 0;
            }
            std::cout << "none\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int cli_run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_run(args);
}

}  // namespace sgb
