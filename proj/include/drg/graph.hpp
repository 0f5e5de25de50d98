#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace drg {

// Simple undirected graph, 0-based vertices, sorted adjacency lists.
// No self-loops, no parallel edges; parallel inputs are collapsed on build.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                            std::string name = "") {
        if (n < 1) throw format_error("graph order must be >= 1, got " + std::to_string(n));
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw format_error("edge endpoint out of range: " + std::to_string(u) + " " +
                                   std::to_string(v) + " (n=" + std::to_string(n) + ")");
            if (u == v) throw format_error("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        Graph g;
        g.n_ = n;
        g.e_ = static_cast<int>(edges.size());
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        g.name_ = std::move(name);
        return g;
    }

    int order() const { return n_; }
    int size() const { return e_; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }

    bool adjacent(int u, int v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(e_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) es.emplace_back(u, v);
        return es;
    }

    bool is_regular() const {
        for (int u = 1; u < n_; ++u)
            if (degree(u) != degree(0)) return false;
        return n_ > 0;
    }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

private:
    int n_ = 0;
    int e_ = 0;
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

inline bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == n;
}

// --- graph6 ---
// Standard printable encoding: header = order, body = upper triangle in
// column-major order, 6 bits per byte, each byte offset by 63.
// Short header for n <= 62, '~' + 3 bytes for n <= 258047; the 8-byte
// form ('~~') is rejected as out of supported range. Padding bits must be 0.

namespace detail {

inline int g6_byte(std::string_view s, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw format_error("graph6: byte " + std::to_string(pos) + " out of range (" +
                           std::to_string(int(c)) + ")");
    return c - 63;
}

} // namespace detail

inline Graph parse_graph6(std::string_view s, std::string name = "") {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.remove_suffix(1);
    if (s.empty()) throw format_error("graph6: empty input");
    if (s.rfind(">>graph6<<", 0) == 0) s.remove_prefix(10);

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw format_error("graph6: order beyond supported range (n > 258047)");
        if (s.size() < 4) throw format_error("graph6: truncated long-form header");
        n = (std::int64_t(detail::g6_byte(s, 1)) << 12) |
            (std::int64_t(detail::g6_byte(s, 2)) << 6) | detail::g6_byte(s, 3);
        pos = 4;
    } else {
        n = detail::g6_byte(s, 0);
        pos = 1;
    }
    if (n < 1) throw format_error("graph6: order must be >= 1, got " + std::to_string(n));

    const std::int64_t bits = n * (n - 1) / 2;
    const std::int64_t body = (bits + 5) / 6;
    if (std::int64_t(s.size()) - std::int64_t(pos) != body)
        throw format_error("graph6: expected " + std::to_string(body) + " body bytes, got " +
                           std::to_string(s.size() - pos));

    std::vector<std::pair<int, int>> edges;
    std::int64_t k = 0;
    int cur = 0, curbits = 0;
    std::size_t curpos = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (curbits == 0) {
                cur = detail::g6_byte(s, curpos);
                curpos++;
                curbits = 6;
            }
            if ((cur >> (curbits - 1)) & 1) edges.emplace_back(i, j);
            --curbits;
        }
    }
    // padding must be zero
    if (curbits > 0 && (cur & ((1 << curbits) - 1)) != 0)
        throw format_error("graph6: nonzero padding bits in byte " + std::to_string(curpos - 1));
    return Graph::from_edges(static_cast<int>(n), std::move(edges), std::move(name));
}

inline std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw format_error("graph6: order beyond supported range (n > 258047)");
    }
    int cur = 0, curbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++curbits == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                curbits = 0;
            }
        }
    }
    if (curbits > 0) out.push_back(static_cast<char>((cur << (6 - curbits)) + 63));
    return out;
}

// --- edge list ---
// First line: n. Each further nonempty line: "u v". Duplicates collapse.

inline Graph parse_edge_list(std::istream& in, std::string name = "") {
    std::string line;
    int lineno = 0;
    auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            toks.clear();
            std::istringstream ls(line);
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) return true;
        }
        return false;
    };
    auto to_int = [&](const std::string& t) -> int {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (...) {
            throw format_error("edge list line " + std::to_string(lineno) + ": bad integer '" + t + "'");
        }
        if (used != t.size())
            throw format_error("edge list line " + std::to_string(lineno) + ": bad integer '" + t + "'");
        return v;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks)) throw format_error("edge list: missing order line");
    if (toks.size() != 1)
        throw format_error("edge list line " + std::to_string(lineno) + ": expected single order token");
    const int n = to_int(toks[0]);
    std::vector<std::pair<int, int>> edges;
    while (next_tokens(toks)) {
        if (toks.size() != 2)
            throw format_error("edge list line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(to_int(toks[0]), to_int(toks[1]));
    }
    return Graph::from_edges(n, std::move(edges), std::move(name));
}

inline Graph parse_edge_list(const std::string& text, std::string name = "") {
    std::istringstream in(text);
    return parse_edge_list(in, std::move(name));
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace drg
