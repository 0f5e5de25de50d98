#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace drg {

// All-pairs BFS structure. dist uses -1 for unreachable pairs; girth and
// odd_girth use nullopt for "no cycle" / "bipartite".
struct DistanceData {
    int n = 0;
    int diameter = 0;                         // max over reachable pairs
    bool connected = false;
    bool bipartite = false;
    bool regular = false;
    int valency = -1;                         // common degree when regular
    std::optional<int> girth;
    std::optional<int> odd_girth;
    std::vector<int> dist;                    // n*n, row-major, -1 sentinel
    std::vector<std::vector<std::vector<int>>> spheres;  // spheres[u][i] = S_i(u)
    std::vector<std::vector<int>> k_of;       // k_of[u][i] = |S_i(u)|
    std::vector<double> k_bar;                // mean of k_i(u) over u, levels 0..diameter

    int d(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

inline DistanceData distance_data(const Graph& g) {
    const int n = g.order();
    DistanceData dd;
    dd.n = n;
    dd.dist.assign(static_cast<std::size_t>(n) * n, -1);
    dd.spheres.resize(n);
    dd.k_of.resize(n);

    std::vector<int> q;
    q.reserve(n);
    for (int s = 0; s < n; ++s) {
        int* row = dd.dist.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        q.clear();
        q.push_back(s);
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int v : g.neighbors(u))
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    q.push_back(v);
                }
        }
        int ecc = 0;
        for (int v = 0; v < n; ++v) ecc = std::max(ecc, row[v]);
        dd.spheres[s].assign(ecc + 1, {});
        for (int v = 0; v < n; ++v)
            if (row[v] >= 0) dd.spheres[s][row[v]].push_back(v);
        dd.k_of[s].resize(ecc + 1);
        for (int i = 0; i <= ecc; ++i) dd.k_of[s][i] = static_cast<int>(dd.spheres[s][i].size());
        dd.diameter = std::max(dd.diameter, ecc);
        if (s == 0) dd.connected = (static_cast<int>(q.size()) == n);
    }

    dd.k_bar.assign(dd.diameter + 1, 0.0);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < static_cast<int>(dd.k_of[u].size()); ++i) dd.k_bar[i] += dd.k_of[u][i];
    for (double& kb : dd.k_bar) kb /= n;

    dd.regular = g.is_regular();
    if (dd.regular) dd.valency = g.degree(0);

    // odd-girth: a same-level edge under BFS from u closes an odd walk of
    // length 2*level+1; the minimum over all roots is the exact odd-girth
    int og = -1;
    for (int u = 0; u < n; ++u) {
        const int* row = dd.dist.data() + static_cast<std::size_t>(u) * n;
        for (auto [x, y] : g.edges())
            if (row[x] >= 0 && row[x] == row[y]) {
                int cand = 2 * row[x] + 1;
                if (og < 0 || cand < og) og = cand;
            }
    }
    if (og > 0) dd.odd_girth = og;
    dd.bipartite = (og < 0);

    // girth: parent-tracking BFS from every vertex; each non-tree edge (x,y)
    // seen at levels d(x), d(y) closes a cycle of length <= d(x)+d(y)+1, and
    // a root on a shortest cycle attains equality
    int best = -1;
    std::vector<int> depth(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(depth.begin(), depth.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        depth[s] = 0;
        q.clear();
        q.push_back(s);
        for (std::size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int v : g.neighbors(u)) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if (parent[u] != v && parent[v] != u) {
                    int cand = depth[u] + depth[v] + 1;
                    if (best < 0 || cand < best) best = cand;
                }
            }
        }
    }
    if (best > 0) dd.girth = best;
    return dd;
}

} // namespace drg
