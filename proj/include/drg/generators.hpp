#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace drg {

inline Graph cycle(int n) {
    if (n < 3) throw format_error("cycle: n must be >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> es;
    es.reserve(n);
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(es), "cycle(" + std::to_string(n) + ")");
}

inline Graph complete(int n) {
    if (n < 1) throw format_error("complete: n must be >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, std::move(es), "complete(" + std::to_string(n) + ")");
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw format_error("complete_bipartite: parts must be >= 1, got " + std::to_string(a) +
                           "," + std::to_string(b));
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, std::move(es),
                             "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

// vertices are bitmasks 0..2^q-1, edges join masks at Hamming distance 1
inline Graph hypercube(int q) {
    if (q < 1 || q > 20) throw format_error("hypercube: q must be in 1..20, got " + std::to_string(q));
    const int n = 1 << q;
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < q; ++b)
            if (!(u & (1 << b))) es.emplace_back(u, u | (1 << b));
    return Graph::from_edges(n, std::move(es), "hypercube(" + std::to_string(q) + ")");
}

// O_m: vertices are the (m-1)-subsets of a (2m-1)-set, adjacency is disjointness.
// O_3 is the Petersen graph; O_{D+1} has diameter D.
inline Graph odd_graph(int m) {
    if (m < 2 || m > 8) throw format_error("odd_graph: m must be in 2..8, got " + std::to_string(m));
    const int ground = 2 * m - 1;
    std::vector<int> subsets;
    for (int s = 0; s < (1 << ground); ++s)
        if (__builtin_popcount(static_cast<unsigned>(s)) == m - 1) subsets.push_back(s);
    const int n = static_cast<int>(subsets.size());
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((subsets[i] & subsets[j]) == 0) es.emplace_back(i, j);
    return Graph::from_edges(n, std::move(es), "odd_graph(" + std::to_string(m) + ")");
}

inline Graph petersen() {
    Graph g = odd_graph(3);
    g.set_name("petersen");
    return g;
}

// (u,a)~(v,b) iff (u=v or u~v) and (a=b or a~b), excluding equality of the pairs
inline Graph strong_product(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1) throw format_error("strong_product: empty factor");
    const int ng = g.order(), nh = h.order();
    auto idx = [nh](int u, int a) { return u * nh + a; };
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < ng; ++u)
        for (int a = 0; a < nh; ++a)
            for (int v = u; v < ng; ++v) {
                if (!(v == u || g.adjacent(u, v))) continue;
                for (int b = 0; b < nh; ++b) {
                    if (u == v && b <= a) continue;
                    if (!(a == b || h.adjacent(a, b))) continue;
                    if (idx(u, a) < idx(v, b)) es.emplace_back(idx(u, a), idx(v, b));
                }
            }
    return Graph::from_edges(ng * nh, std::move(es),
                             "strong_product(" + g.name() + "," + h.name() + ")");
}

// adjacency matrix A(G) Kronecker the all-ones 2x2 block: (u,a)~(v,b) iff u~v
inline Graph tensor_with_ones2(const Graph& g) {
    if (g.order() < 1) throw format_error("tensor_with_ones2: empty graph");
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) es.emplace_back(2 * u + a, 2 * v + b);
    return Graph::from_edges(2 * g.order(), std::move(es), "tensor_with_ones2(" + g.name() + ")");
}

} // namespace drg
