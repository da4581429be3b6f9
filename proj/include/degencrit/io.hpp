#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace degencrit {

// graph6 short form, n <= 62 only: one byte chr(n+63), then the upper triangle
// in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
// 6-bit groups, zero-padded, each group offset by 63.

inline std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    unsigned char first = static_cast<unsigned char>(s[0]);
    if (first < 63 || first > 126)
        throw std::invalid_argument("graph6: byte outside printable range");
    if (first == 126)
        throw std::invalid_argument("graph6: long form (n > 62) not supported");
    int n = first - 63;

    int bits_needed = n * (n - 1) / 2;
    std::size_t payload = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (s.size() - 1 != payload)
        throw std::invalid_argument("graph6: payload length " + std::to_string(s.size() - 1) +
                                    ", expected " + std::to_string(payload) + " for n=" +
                                    std::to_string(n));

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    int bit_index = 0;
    int u = 0, v = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte outside printable range");
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int bitval = (group >> b) & 1;
            if (bit_index < bits_needed) {
                if (bitval) {
                    adj[static_cast<std::size_t>(u)] |= Graph::bit(v);
                    adj[static_cast<std::size_t>(v)] |= Graph::bit(u);
                }
                if (++u == v) { u = 0; ++v; }
            } else if (bitval) {
                throw std::invalid_argument("graph6: nonzero padding bits");
            }
        }
    }
    return Graph::from_adjacency_masks(std::move(adj));
}

// Plain edge-list format: first line "n m", then m lines "u v".

inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_edge_list(is);
}

} // namespace degencrit
