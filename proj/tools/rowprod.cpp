// Command line front end: embedding search, caterpillar recognition, gadget
// generation, certificate checking, and SVG rendering.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rowprod/caterpillar.hpp"
#include "rowprod/io.hpp"
#include "rowprod/oracles.hpp"
#include "rowprod/solver.hpp"
#include "rowprod/svg.hpp"
#include "rowprod/transforms.hpp"

using namespace rowprod;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

/// Host mini-grammar: path:K | cat:S,L | star:L | tree:@file | graph:@file.
HostSpec parse_host(const std::string& text, ProductKind product, int rows) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("host: expected kind:params, got '" + text + "'");
    std::string kind = text.substr(0, colon), params = text.substr(colon + 1);
    auto file_graph = [&]() {
        if (params.empty() || params[0] != '@')
            throw std::invalid_argument("host: " + kind + " needs @file");
        return io::parse_graph(io::read_file(params.substr(1)));
    };
    if (kind == "path") return HostSpec::path(std::stoi(params), product, rows);
    if (kind == "star") return HostSpec::star(std::stoi(params), product, rows);
    if (kind == "cat") {
        auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("host: cat needs spine,legs");
        return HostSpec::caterpillar(std::stoi(params.substr(0, comma)),
                                     std::stoi(params.substr(comma + 1)), product, rows);
    }
    if (kind == "tree") return HostSpec::explicit_tree(file_graph(), product, rows);
    if (kind == "graph") return HostSpec::explicit_graph(file_graph(), product, rows);
    throw std::invalid_argument("host: unknown kind '" + kind + "'");
}

Graph load_graph(const std::string& path) { return io::parse_graph(io::read_file(path)); }

void emit(const std::string& out_path, const std::string& data) {
    if (out_path.empty() || out_path == "-")
        std::cout << data;
    else
        io::write_file(out_path, data);
}

struct HostOpts {
    std::string host;
    std::string product = "strong";
    int rows = 0;  // 0: default to guest size

    void attach(CLI::App* cmd) {
        cmd->add_option("--host", host, "host spec: path:K | cat:S,L | star:L | tree:@f | graph:@f")
            ->required();
        cmd->add_option("--product", product, "strong | cartesian")
            ->check(CLI::IsMember({"strong", "cartesian"}));
        cmd->add_option("--rows", rows, "row count (default: guest vertex count)");
    }
    HostSpec resolve(int guest_n) const {
        return parse_host(host, product == "strong" ? ProductKind::Strong : ProductKind::Cartesian,
                          rows > 0 ? rows : guest_n);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"row products of graphs: embeddings, gadgets, certificates"};
    app.require_subcommand(1);

    // embed: full search
    std::string em_guest, em_out;
    HostOpts em_host;
    std::int64_t em_budget = 50'000'000;
    auto* embed = app.add_subcommand("embed", "search for an embedding of a guest graph");
    embed->add_option("--guest", em_guest, "guest graph file")->required();
    em_host.attach(embed);
    embed->add_option("--budget", em_budget, "search node budget");
    embed->add_option("--out", em_out, "write witness embedding json here ('-' for stdout)");

    // caterpillar: linear-time recognition + constructive embedding
    std::string cat_guest, cat_out;
    auto* cat = app.add_subcommand("caterpillar", "king-lattice embeddability of a caterpillar");
    cat->add_option("--guest", cat_guest, "guest graph file")->required();
    cat->add_option("--out", cat_out, "write the diagonal-spine embedding json here");

    // transform: degree-reduction and padding gadgets
    std::string tr_kind, tr_in, tr_out;
    auto* tr = app.add_subcommand("transform", "apply a gadget transform to a graph");
    tr->add_option("kind", tr_kind, "tv | pad4 | pad6 | universal")
        ->required()
        ->check(CLI::IsMember({"tv", "pad4", "pad6", "universal"}));
    tr->add_option("--in", tr_in, "input graph file")->required();
    tr->add_option("--out", tr_out, "output graph file ('-' for stdout)");

    // gen: reduction gadget generators
    std::string gen_kind, gen_in, gen_out, gen_product = "strong", gen_wout;
    auto* gen = app.add_subcommand("gen", "generate a reduction gadget graph");
    gen->add_option("kind", gen_kind, "logic-engine | pipeline | paddle-tree")
        ->required()
        ->check(CLI::IsMember({"logic-engine", "pipeline", "paddle-tree"}));
    gen->add_option("--in", gen_in, "instance file (nae or partition)")->required();
    gen->add_option("--product", gen_product, "strong | cartesian (pipeline only)")
        ->check(CLI::IsMember({"strong", "cartesian"}));
    gen->add_option("--out", gen_out, "output graph file ('-' for stdout)");
    gen->add_option("--witness-out", gen_wout,
                    "also solve the instance by brute force and write a witness embedding json");

    // certify: check certificates against regenerated gadgets
    std::string ce_kind, ce_in, ce_emb, ce_host_arg, ce_product = "strong";
    int ce_rows = 8;
    auto* ce = app.add_subcommand("certify", "verify an embedding certificate");
    ce->add_option("kind", ce_kind, "logic-engine | paddle-tree | caterpillar | products")
        ->required()
        ->check(CLI::IsMember({"logic-engine", "paddle-tree", "caterpillar", "products"}));
    ce->add_option("--in", ce_in, "instance file (logic-engine / paddle-tree)");
    ce->add_option("--embedding", ce_emb, "embedding json file");
    ce->add_option("--host", ce_host_arg, "host spec (products: edge-count cross-check)");
    ce->add_option("--product", ce_product, "strong | cartesian (products)")
        ->check(CLI::IsMember({"strong", "cartesian"}));
    ce->add_option("--rows", ce_rows, "row count (products)");

    // render: embedding json to SVG
    std::string re_emb, re_out;
    int re_cell = 28;
    bool re_no_grid = false, re_no_dash = false;
    auto* re = app.add_subcommand("render", "render an embedding json as SVG");
    re->add_option("--embedding", re_emb, "embedding json file")->required();
    re->add_option("--out", re_out, "output svg file ('-' for stdout)");
    re->add_option("--cell", re_cell, "lattice pitch in pixels");
    re->add_flag("--no-grid", re_no_grid, "omit the host lattice dots");
    re->add_flag("--no-dash", re_no_dash, "draw diagonal edges solid");

    // oracle: reference brute-force implementations
    std::string or_kind, or_in, or_guest;
    HostOpts or_host;
    auto* orc = app.add_subcommand("oracle", "run a brute-force reference oracle");
    orc->add_option("kind", or_kind, "nae | 3part | embed")
        ->required()
        ->check(CLI::IsMember({"nae", "3part", "embed"}));
    orc->add_option("--in", or_in, "instance file (nae / 3part)");
    orc->add_option("--guest", or_guest, "guest graph file (embed)");
    or_host.host = "path:1";
    orc->add_option("--host", or_host.host, "host spec (embed)");
    orc->add_option("--product", or_host.product, "strong | cartesian (embed)");
    orc->add_option("--rows", or_host.rows, "row count (embed)");

    CLI11_PARSE(app, argc, argv);

    if (embed->parsed()) {
        Graph g = load_graph(em_guest);
        SearchConfig cfg;
        cfg.node_budget = em_budget;
        auto res = embed_into(g, em_host.resolve(g.n), cfg);
        std::cout << (res.outcome == Outcome::Yes  ? "yes"
                      : res.outcome == Outcome::No ? "no"
                                                   : "inconclusive")
                  << " nodes=" << res.nodes;
        if (!res.message.empty()) std::cout << " (" << res.message << ')';
        std::cout << '\n';
        if (res.witness && !em_out.empty()) emit(em_out, io::write_embedding(*res.witness));
        return res.outcome == Outcome::Yes  ? kExitYes
               : res.outcome == Outcome::No ? kExitNo
                                            : kExitInconclusive;
    }

    if (cat->parsed()) {
        Graph g = load_graph(cat_guest);
        auto prof = spine_profile(g);  // throws unless g is a caterpillar
        auto dec = decide_fast_profile(prof);
        std::cout << (dec.embeddable ? "yes" : "no") << " spine=" << prof.degrees.size()
                  << " ops=" << dec.operations << '\n';
        if (!dec.embeddable) return kExitNo;
        if (!cat_out.empty()) emit(cat_out, io::write_embedding(construct_diagonal_embedding(g)));
        return kExitYes;
    }

    if (tr->parsed()) {
        Graph g = load_graph(tr_in);
        TransformArtifact art;
        if (tr_kind == "tv") art = tv_gadget_transform(g);
        else if (tr_kind == "pad4") art = leaf_pad(g, 4);
        else if (tr_kind == "pad6") art = leaf_pad(g, 6);
        else art = universal_vertex(g);
        emit(tr_out, io::write_graph(art.output));
        return kExitYes;
    }

    if (gen->parsed()) {
        if (gen_kind == "paddle-tree") {
            auto inst = io::parse_partition(io::read_file(gen_in));
            auto t = build_paddle_tree(inst);
            if (!gen_out.empty() || gen_wout.empty()) emit(gen_out, io::write_graph(t.tree));
            if (!gen_wout.empty()) {
                auto rep = oracles::three_partition(inst);
                if (!rep.answer) {
                    std::cout << "no valid partition, no witness written\n";
                    return kExitNo;
                }
                emit(gen_wout, io::write_embedding(partition_witness(t, *rep.witness)));
            }
            return kExitYes;
        }
        auto inst = ensure_spacer(io::parse_nae(io::read_file(gen_in)));
        auto g0 = build_g0(inst);
        auto variant = gen_product == "strong" ? ProductKind::Strong : ProductKind::Cartesian;
        if (!gen_out.empty() || gen_wout.empty())
            emit(gen_out, io::write_graph(gen_kind == "logic-engine"
                                              ? g0.graph
                                              : build_pipeline(g0, variant).g));
        if (!gen_wout.empty()) {
            auto rep = oracles::nae_satisfiable(inst);
            if (!rep.answer) {
                std::cout << "unsatisfiable, no witness written\n";
                return kExitNo;
            }
            if (gen_kind == "logic-engine")
                emit(gen_wout, io::write_embedding(witness_embedding(g0, *rep.witness)));
            else {
                auto p = build_pipeline(g0, variant);
                emit(gen_wout, io::write_embedding(pipeline_witness(p, g0, *rep.witness)));
            }
        }
        return kExitYes;
    }

    if (ce->parsed()) {
        if (ce_kind == "products") {
            if (ce_host_arg.empty()) throw CLI::ValidationError("certify products needs --host");
            HostSpec spec = parse_host(
                ce_host_arg, ce_product == "strong" ? ProductKind::Strong : ProductKind::Cartesian,
                ce_rows);
            auto pg = build_product(spec);
            Graph host = materialize_host(spec);
            auto expect = product_edge_count(host.n, host.edge_count(), spec.rows, spec.product);
            bool ok = expect == pg.base.edge_count();
            std::cout << (ok ? "ok" : "mismatch") << " edges=" << pg.base.edge_count() << '\n';
            return ok ? kExitYes : kExitNo;
        }
        if (ce_emb.empty()) throw CLI::ValidationError("certify needs --embedding");
        Embedding e = io::parse_embedding(io::read_file(ce_emb));
        if (ce_kind == "caterpillar") {
            auto rep = verify_embedding(e);
            std::cout << (rep.valid() ? "valid" : "invalid") << '\n';
            for (const auto& v : rep.violations) std::cout << "  " << v << '\n';
            return rep.valid() ? kExitYes : kExitNo;
        }
        if (ce_in.empty()) throw CLI::ValidationError("certify needs --in");
        if (ce_kind == "logic-engine") {
            auto inst = ensure_spacer(io::parse_nae(io::read_file(ce_in)));
            auto g0 = build_g0(inst);
            if (e.guest.n != g0.graph.n || e.guest.edges != g0.graph.edges) {
                std::cout << "invalid (embedding is not of this gadget)\n";
                return kExitNo;
            }
            if (!verify_embedding(e, &g0.labels).valid()) {
                std::cout << "invalid\n";
                return kExitNo;
            }
            auto a = extract_assignment(g0, e);
            std::cout << "valid assignment:";
            for (int i = 0; i < inst.n; ++i) std::cout << ' ' << (a[i] ? i + 1 : -(i + 1));
            std::cout << '\n';
            return engine_feasible(inst, a) ? kExitYes : kExitNo;
        }
        auto inst = io::parse_partition(io::read_file(ce_in));
        auto t = build_paddle_tree(inst);
        auto groups = extract_partition(t, e);  // throws if invalid
        std::cout << "valid partition:";
        for (const auto& g : groups)
            std::cout << " {" << g[0] << ',' << g[1] << ',' << g[2] << '}';
        std::cout << '\n';
        return kExitYes;
    }

    if (re->parsed()) {
        Embedding e = io::parse_embedding(io::read_file(re_emb));
        svg::RenderSpec spec;
        spec.cell = re_cell;
        spec.show_grid = !re_no_grid;
        spec.dash_diagonals = !re_no_dash;
        emit(re_out, svg::render_svg(e, spec));
        return kExitYes;
    }

    // oracle
    if (or_kind == "nae") {
        auto rep = oracles::nae_satisfiable(io::parse_nae(io::read_file(or_in)));
        std::cout << (rep.answer ? "sat" : "unsat");
        if (rep.witness) {
            for (std::size_t i = 0; i < rep.witness->size(); ++i)
                std::cout << ' ' << ((*rep.witness)[i] ? int(i) + 1 : -int(i) - 1);
        }
        std::cout << '\n';
        return rep.answer ? kExitYes : kExitNo;
    }
    if (or_kind == "3part") {
        auto rep = oracles::three_partition(io::parse_partition(io::read_file(or_in)));
        std::cout << (rep.answer ? "yes" : "no");
        if (rep.witness)
            for (const auto& g : *rep.witness)
                std::cout << " {" << g[0] << ',' << g[1] << ',' << g[2] << '}';
        std::cout << '\n';
        return rep.answer ? kExitYes : kExitNo;
    }
    if (or_guest.empty()) throw CLI::ValidationError("oracle embed needs --guest");
    Graph g = load_graph(or_guest);
    auto rep = oracles::naive_embed(g, or_host.resolve(g.n));
    std::cout << (rep.answer ? "yes" : "no") << " nodes=" << rep.nodes_visited << '\n';
    return rep.answer ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return kExitUsage;  // CLI11_PARSE inside run handles messaging for parse errors
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitData;
    }
}
