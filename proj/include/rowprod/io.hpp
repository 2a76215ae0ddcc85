#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/logic_engine.hpp"
#include "rowprod/partition.hpp"
#include "rowprod/product.hpp"

namespace rowprod::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << data;
}

/// Plain-text graph format. First significant line is "graph <n> <m>",
/// followed by m "u v" lines. Comment lines start with '#'; the structured
/// comments "# vtag <v> <tag>" and "# etag <u> <v> <tag>" carry labels.
inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.n << ' ' << g.edge_count() << '\n';
    for (const auto& [v, tag] : g.vtag) out << "# vtag " << v << ' ' << tag << '\n';
    for (const auto& [e, tag] : g.etag)
        out << "# etag " << e.first << ' ' << e.second << ' ' << tag << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> es;
    std::map<int, std::string> vtag;
    std::map<Edge, std::string> etag;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "#") {
            std::string kind;
            if (!(ls >> kind)) continue;
            if (kind == "vtag") {
                int v;
                std::string tag;
                if (ls >> v >> tag) vtag[v] = tag;
            } else if (kind == "etag") {
                int u, v;
                std::string tag;
                if (ls >> u >> v >> tag) etag[make_edge(u, v)] = tag;
            }
            continue;
        }
        if (tok[0] == '#') continue;
        if (n < 0) {
            int mm;
            if (tok != "graph" || !(ls >> n >> mm) || n < 0 || mm < 0)
                throw std::invalid_argument("graph parse: expected 'graph <n> <m>' at line " +
                                            std::to_string(lineno));
            m = mm;
            continue;
        }
        int u = std::stoi(tok), v;
        if (!(ls >> v))
            throw std::invalid_argument("graph parse: bad edge at line " + std::to_string(lineno));
        es.push_back(make_edge(u, v));
    }
    if (n < 0) throw std::invalid_argument("graph parse: missing 'graph <n> <m>' header");
    if (static_cast<int>(es.size()) != m)
        throw std::invalid_argument("graph parse: header promises " + std::to_string(m) +
                                    " edges, found " + std::to_string(es.size()));
    Graph g = make_graph(n, std::move(es));
    for (const auto& [v, tag] : vtag)
        if (v < 0 || v >= n) throw std::invalid_argument("graph parse: vtag out of range");
    g.vtag = std::move(vtag);
    g.etag = std::move(etag);
    return g;
}

/// DIMACS-style not-all-equal instances: "p nae3 <n> <m>" then m clause lines
/// of signed literals terminated by 0. Lines starting with 'c' are comments.
inline std::string write_nae(const NaeInstance& inst) {
    std::ostringstream out;
    out << "p nae3 " << inst.n << ' ' << inst.clauses.size() << '\n';
    for (const auto& cl : inst.clauses) {
        for (int lit : cl) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

inline NaeInstance parse_nae(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    NaeInstance inst;
    bool header = false;
    std::size_t m = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> inst.n >> m) || fmt != "nae3" || inst.n < 1)
                throw std::invalid_argument("nae parse: bad problem line");
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("nae parse: clause before problem line");
        std::vector<int> cl;
        int lit = std::stoi(tok);
        while (lit != 0) {
            cl.push_back(lit);
            if (!(ls >> lit)) throw std::invalid_argument("nae parse: clause not 0-terminated");
        }
        inst.clauses.push_back(std::move(cl));
    }
    if (!header) throw std::invalid_argument("nae parse: missing problem line");
    if (inst.clauses.size() != m)
        throw std::invalid_argument("nae parse: clause count does not match header");
    validate_instance(inst);
    return inst;
}

/// Partition instances: first significant line n, second line the 3n values.
inline std::string write_partition(const PartitionInstance& inst) {
    std::ostringstream out;
    out << inst.n << '\n';
    for (std::size_t i = 0; i < inst.a.size(); ++i) out << (i ? " " : "") << inst.a[i];
    out << '\n';
    return out.str();
}

inline PartitionInstance parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<int> nums;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) {
            if (tok[0] == '#') continue;
            nums.push_back(std::stoi(tok));
            int v;
            while (ls >> v) nums.push_back(v);
        }
    }
    if (nums.empty()) throw std::invalid_argument("partition parse: empty input");
    int n = nums[0];
    std::vector<int> a(nums.begin() + 1, nums.end());
    return normalize_instance(std::move(a), n);
}

namespace detail {

inline std::string kind_name(HostSpec::Kind k) {
    switch (k) {
        case HostSpec::Kind::Path: return "path";
        case HostSpec::Kind::Caterpillar: return "caterpillar";
        case HostSpec::Kind::Star: return "star";
        case HostSpec::Kind::ExplicitTree: return "tree";
        case HostSpec::Kind::Explicit: return "graph";
    }
    return "path";
}

}  // namespace detail

inline json host_to_json(const HostSpec& spec) {
    json j;
    j["kind"] = detail::kind_name(spec.kind);
    j["product"] = spec.product == ProductKind::Strong ? "strong" : "cartesian";
    j["rows"] = spec.rows;
    if (spec.kind == HostSpec::Kind::ExplicitTree || spec.kind == HostSpec::Kind::Explicit)
        j["graph"] = write_graph(spec.graph);
    else {
        j["size"] = spec.size;
        if (spec.kind == HostSpec::Kind::Caterpillar) j["legs"] = spec.legs;
    }
    return j;
}

inline HostSpec host_from_json(const json& j) {
    std::string kind = j.at("kind");
    auto product = j.at("product") == "strong" ? ProductKind::Strong : ProductKind::Cartesian;
    int rows = j.at("rows");
    if (kind == "path") return HostSpec::path(j.at("size"), product, rows);
    if (kind == "caterpillar")
        return HostSpec::caterpillar(j.at("size"), j.at("legs"), product, rows);
    if (kind == "star") return HostSpec::star(j.at("size"), product, rows);
    if (kind == "tree")
        return HostSpec::explicit_tree(parse_graph(j.at("graph")), product, rows);
    if (kind == "graph")
        return HostSpec::explicit_graph(parse_graph(j.at("graph")), product, rows);
    throw std::invalid_argument("host json: unknown kind '" + kind + "'");
}

/// JSON embedding format: guest edge-list text, host description, and the
/// cell map as [h, row] pairs indexed by guest vertex.
inline std::string write_embedding(const Embedding& e) {
    json j;
    j["format"] = "rowprod-embedding";
    j["guest"] = write_graph(e.guest);
    j["host"] = host_to_json(e.host);
    json cells = json::array();
    for (const Cell& c : e.map) cells.push_back(json::array({c.h, c.row}));
    j["map"] = std::move(cells);
    return j.dump(2) + "\n";
}

inline Embedding parse_embedding(const std::string& text) {
    json j = json::parse(text);
    if (j.value("format", "") != "rowprod-embedding")
        throw std::invalid_argument("embedding json: wrong or missing format field");
    Embedding e;
    e.guest = parse_graph(j.at("guest"));
    e.host = host_from_json(j.at("host"));
    for (const auto& c : j.at("map")) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("embedding json: map entries must be [h, row]");
        e.map.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    if (e.map.size() != static_cast<std::size_t>(e.guest.n))
        throw std::invalid_argument("embedding json: map size does not match guest");
    return e;
}

}  // namespace rowprod::io
