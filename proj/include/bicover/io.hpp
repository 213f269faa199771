#ifndef BICOVER_IO_HPP
#define BICOVER_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicover/cover.hpp"
#include "bicover/errors.hpp"
#include "bicover/hypergraph.hpp"

namespace bicover {

using ordered_json = nlohmann::ordered_json;

struct ParseResult {
    Hypergraph graph;
    int duplicates_removed = 0;
};

/// Text format: line 1 `p bhg <n> <m> <k>`, then m lines `e v1 .. vk` with
/// 1-based vertex ids; `c` lines are comments.  Duplicate edges are accepted
/// and canonicalized (counted in the result); non-uniform edges are rejected.
inline ParseResult read_bhg(std::istream& in) {
    std::string line;
    int n = -1, m = -1, k = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> m >> k) || fmt != "bhg")
                throw InvalidInput("line " + std::to_string(lineno) +
                                   ": expected `p bhg <n> <m> <k>`");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw InvalidInput("edge line before the p line");
            Edge e;
            int v;
            while (ls >> v) {
                if (v < 1 || v > n)
                    throw InvalidInput("line " + std::to_string(lineno) + ": vertex " +
                                       std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
                e.push_back(v - 1);
            }
            if (static_cast<int>(e.size()) != k)
                throw InvalidInput("line " + std::to_string(lineno) + ": edge with " +
                                   std::to_string(e.size()) + " vertices in a " +
                                   std::to_string(k) + "-uniform hypergraph");
            edges.push_back(std::move(e));
            continue;
        }
        throw InvalidInput("line " + std::to_string(lineno) + ": unknown tag `" + tag + "`");
    }
    if (n < 0) throw InvalidInput("missing p line");
    if (static_cast<int>(edges.size()) != m)
        throw InvalidInput("p line declares m=" + std::to_string(m) + " but " +
                           std::to_string(edges.size()) + " edges present");
    int dups = 0;
    auto g = Hypergraph::make(n, k, std::move(edges), &dups);
    return ParseResult{std::move(g), dups};
}

inline ParseResult read_bhg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_bhg(in);
}

inline void write_bhg(std::ostream& out, const Hypergraph& g) {
    out << "p bhg " << g.n() << ' ' << g.m() << ' ' << g.k() << '\n';
    for (const auto& e : g.edges()) {
        out << 'e';
        for (int v : e) out << ' ' << v + 1;
        out << '\n';
    }
}

inline void write_bhg_file(const std::string& path, const Hypergraph& g) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open " + path + " for writing");
    write_bhg(out, g);
}

/// Cover JSON: {"n":N,"x":X,"colorings":["0101...", ...]} where character i
/// of string j is the color of vertex i+1 in bicoloring j+1.
inline ordered_json cover_to_json(int n, const Cover& c) {
    ordered_json j;
    j["n"] = n;
    j["x"] = c.size();
    auto arr = ordered_json::array();
    for (const auto& x : c.colorings) arr.push_back(x.to_string());
    j["colorings"] = std::move(arr);
    return j;
}

inline Cover cover_from_json(const ordered_json& j, int* n_out = nullptr) {
    if (!j.contains("n") || !j.contains("colorings"))
        throw InvalidInput("cover JSON must contain `n` and `colorings`");
    const int n = j["n"].get<int>();
    if (n_out) *n_out = n;
    Cover c;
    for (const auto& s : j["colorings"]) {
        const std::string str = s.get<std::string>();
        if (static_cast<int>(str.size()) != n)
            throw InvalidInput("coloring string of length " + std::to_string(str.size()) +
                               " but n=" + std::to_string(n));
        std::vector<std::uint8_t> bits(str.size());
        for (std::size_t i = 0; i < str.size(); ++i) {
            if (str[i] != '0' && str[i] != '1')
                throw InvalidInput("coloring string must be over {0,1}");
            bits[i] = static_cast<std::uint8_t>(str[i] - '0');
        }
        c.colorings.emplace_back(std::move(bits));
    }
    if (j.contains("x") && j["x"].get<int>() != c.size())
        throw InvalidInput("cover JSON declares x=" + std::to_string(j["x"].get<int>()) +
                           " but has " + std::to_string(c.size()) + " colorings");
    return c;
}

/// Certificate JSON: {"valid":bool,"witness":[w1..wm]} with 1-based
/// bicoloring indices and 0 for an uncovered edge.
inline ordered_json certificate_to_json(const CoverCertificate& cert) {
    ordered_json j;
    j["valid"] = cert.valid;
    auto arr = ordered_json::array();
    for (int w : cert.witness) arr.push_back(w + 1);
    j["witness"] = std::move(arr);
    return j;
}

inline CoverCertificate certificate_from_json(const ordered_json& j) {
    CoverCertificate cert;
    cert.valid = j.at("valid").get<bool>();
    for (const auto& w : j.at("witness")) cert.witness.push_back(w.get<int>() - 1);
    return cert;
}

inline ordered_json coloring_to_json(const ProperColoring& p) {
    ordered_json j;
    j["paletteSize"] = p.palette_size;
    j["colors"] = p.colors;
    return j;
}

inline ordered_json vertex_set_to_json(const std::vector<int>& vs) {
    auto arr = ordered_json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

inline ordered_json edge_set_to_json(const std::vector<Edge>& es) {
    auto arr = ordered_json::array();
    for (const auto& e : es) arr.push_back(vertex_set_to_json(e));
    return arr;
}

} // namespace bicover

#endif // BICOVER_IO_HPP
