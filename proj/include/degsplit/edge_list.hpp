#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "degsplit/digraph.hpp"
#include "degsplit/pairing.hpp"

namespace degsplit {

// Edge-list text format:
//
//   n m
//   u v          (m arc lines, u -> v)
//   part 0: v1 v2 ...   (optional, one line per part class)
//
// Part lines, when present, must assign every vertex exactly once.
// write_edge_list emits the canonical form: arcs sorted lexicographically,
// parts in ascending class order with sorted members.

inline digraph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long n = -1, m = -1;
    std::vector<arc> arcs;
    std::map<int, std::vector<vertex>> part_lines;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and blank lines
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (n < 0) {
            std::istringstream hs(line);
            long extra;
            if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> extra))
                throw std::invalid_argument("edge list: malformed header" + where);
            continue;
        }
        if (first == "part") {
            int id;
            char colon;
            if (!(ls >> id >> colon) || colon != ':')
                throw std::invalid_argument("edge list: malformed part line" + where);
            auto& members = part_lines[id];
            long v;
            while (ls >> v) {
                if (v < 0 || v >= n)
                    throw std::invalid_argument("edge list: part member out of range" + where);
                members.push_back(static_cast<vertex>(v));
            }
            if (!ls.eof()) throw std::invalid_argument("edge list: malformed part line" + where);
            continue;
        }
        std::istringstream as(line);
        long u, v;
        long extra;
        if (!(as >> u >> v) || (as >> extra))
            throw std::invalid_argument("edge list: malformed arc line" + where);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list: vertex out of range" + where);
        if (u == v) throw std::invalid_argument("edge list: loop arc" + where);
        arcs.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header");
    if (static_cast<long>(arcs.size()) != m)
        throw std::invalid_argument("edge list: header announces " + std::to_string(m) +
                                    " arcs, found " + std::to_string(arcs.size()));
    std::optional<std::vector<int>> part_of;
    if (!part_lines.empty()) {
        std::vector<int> assign(n, -1);
        int expected = 0;
        for (const auto& [id, members] : part_lines) {
            if (id != expected++)
                throw std::invalid_argument("edge list: part ids must be 0..k-1 without gaps");
            for (vertex v : members) {
                if (assign[v] != -1)
                    throw std::invalid_argument("edge list: vertex " + std::to_string(v) +
                                                " assigned to two parts");
                assign[v] = id;
            }
        }
        for (vertex v = 0; v < n; ++v)
            if (assign[v] == -1)
                throw std::invalid_argument("edge list: vertex " + std::to_string(v) +
                                            " missing from part lines");
        part_of = std::move(assign);
    }
    // digraph construction reports duplicate arcs
    return digraph(static_cast<int>(n), std::move(arcs), std::move(part_of));
}

inline std::string write_edge_list(const digraph& d) {
    std::ostringstream out;
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    if (d.part_of()) {
        const int k = d.part_count();
        for (int p = 0; p < k; ++p) {
            out << "part " << p << ':';
            for (vertex v = 0; v < d.vertex_count(); ++v)
                if ((*d.part_of())[v] == p) out << ' ' << v;
            out << '\n';
        }
    }
    return out.str();
}

// Pairing text format: one "u v" line per pair, optionally "single u" for
// the odd leftover.  The vertex count comes from the accompanying digraph.

inline pairing read_pairing(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    pairing p;
    p.n = n;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (first == "single") {
            long v;
            if (!(ls >> v) || (ls >> first))
                throw std::invalid_argument("pairing: malformed single line" + where);
            if (p.singleton) throw std::invalid_argument("pairing: two single lines" + where);
            p.singleton = static_cast<vertex>(v);
            continue;
        }
        std::istringstream ps(line);
        long u, v;
        if (!(ps >> u >> v) || (ps >> first))
            throw std::invalid_argument("pairing: malformed pair line" + where);
        p.pairs.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
    }
    p.validate();
    return p;
}

inline std::string write_pairing(const pairing& p) {
    std::ostringstream out;
    for (const auto& [u, v] : p.pairs) out << u << ' ' << v << '\n';
    if (p.singleton) out << "single " << *p.singleton << '\n';
    return out.str();
}

}  // namespace degsplit
