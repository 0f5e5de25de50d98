#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "distance.hpp"
#include "graph.hpp"
#include "prepoly.hpp"
#include "spectral.hpp"

namespace drg {

// For each ordered pair (u,v) at distance i: c = |S_{i-1}(u) cap N(v)|,
// a = |S_i(u) cap N(v)|, b = |S_{i+1}(u) cap N(v)|. Stored at the pair's own
// distance, row-major by (u,v). Exact integers, no tolerance anywhere here.
struct PairTables {
    int n = 0;
    int D = 0;
    std::vector<std::int32_t> c, a, b;

    std::int32_t c_at(int u, int v) const { return c[static_cast<std::size_t>(u) * n + v]; }
    std::int32_t a_at(int u, int v) const { return a[static_cast<std::size_t>(u) * n + v]; }
    std::int32_t b_at(int u, int v) const { return b[static_cast<std::size_t>(u) * n + v]; }
};

inline PairTables pairwise_intersection(const Graph& g, const DistanceData& dd) {
    const int n = g.order();
    PairTables t;
    t.n = n;
    t.D = dd.diameter;
    t.c.assign(static_cast<std::size_t>(n) * n, 0);
    t.a.assign(static_cast<std::size_t>(n) * n, 0);
    t.b.assign(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        const int* row = dd.dist.data() + static_cast<std::size_t>(u) * n;
        for (int v = 0; v < n; ++v) {
            const int i = row[v];
            if (i < 0) continue;
            const std::size_t k = static_cast<std::size_t>(u) * n + v;
            for (int w : g.neighbors(v)) {
                if (row[w] == i - 1) ++t.c[k];
                else if (row[w] == i) ++t.a[k];
                else if (row[w] == i + 1) ++t.b[k];
            }
        }
    }
    return t;
}

struct LevelProfile {
    int i = 0;
    double c_bar = 0, a_bar = 0, b_bar = 0;    // averages over ordered pairs at distance i
    double c_sq = 0, a_sq = 0, b_sq = 0;       // averages of the squares
    double k_bar_i = 0;
    bool c_defined = false, a_defined = false, b_defined = false, k_defined = false;
    int c_val = -1, a_val = -1, b_val = -1, k_val = -1;   // common value when defined
    int c_min = 0, c_max = 0, a_min = 0, a_max = 0, b_min = 0, b_max = 0;
    long long pairs = 0;                       // ordered pairs at this distance
};

inline std::vector<LevelProfile> level_profiles(const PairTables& t, const DistanceData& dd) {
    const int n = dd.n, D = dd.diameter;
    std::vector<LevelProfile> out(D + 1);
    struct Acc {
        long long cnt = 0, sc = 0, sa = 0, sb = 0, sc2 = 0, sa2 = 0, sb2 = 0;
        int cmin = 1 << 30, cmax = -1, amin = 1 << 30, amax = -1, bmin = 1 << 30, bmax = -1;
    };
    std::vector<Acc> acc(D + 1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const int i = dd.d(u, v);
            if (i < 0) continue;
            Acc& a = acc[i];
            const int cv = t.c_at(u, v), av = t.a_at(u, v), bv = t.b_at(u, v);
            ++a.cnt;
            a.sc += cv; a.sc2 += 1LL * cv * cv; a.cmin = std::min(a.cmin, cv); a.cmax = std::max(a.cmax, cv);
            a.sa += av; a.sa2 += 1LL * av * av; a.amin = std::min(a.amin, av); a.amax = std::max(a.amax, av);
            a.sb += bv; a.sb2 += 1LL * bv * bv; a.bmin = std::min(a.bmin, bv); a.bmax = std::max(a.bmax, bv);
        }
    for (int i = 0; i <= D; ++i) {
        LevelProfile& p = out[i];
        const Acc& a = acc[i];
        p.i = i;
        p.pairs = a.cnt;
        p.k_bar_i = dd.k_bar[i];
        if (a.cnt == 0) continue;  // cannot happen for i <= D on a connected graph
        p.c_bar = double(a.sc) / a.cnt; p.c_sq = double(a.sc2) / a.cnt;
        p.a_bar = double(a.sa) / a.cnt; p.a_sq = double(a.sa2) / a.cnt;
        p.b_bar = double(a.sb) / a.cnt; p.b_sq = double(a.sb2) / a.cnt;
        p.c_min = a.cmin; p.c_max = a.cmax;
        p.a_min = a.amin; p.a_max = a.amax;
        p.b_min = a.bmin; p.b_max = a.bmax;
        p.c_defined = (a.cmin == a.cmax);
        p.a_defined = (a.amin == a.amax);
        p.b_defined = (a.bmin == a.bmax);
        if (p.c_defined) p.c_val = a.cmin;
        if (p.a_defined) p.a_val = a.amin;
        if (p.b_defined) p.b_val = a.bmin;
        // k_i(u) across all vertices, counting 0 when the eccentricity is below i
        int kmin = 1 << 30, kmax = -1;
        for (int u = 0; u < n; ++u) {
            const int kv = i < static_cast<int>(dd.k_of[u].size()) ? dd.k_of[u][i] : 0;
            kmin = std::min(kmin, kv);
            kmax = std::max(kmax, kv);
        }
        p.k_defined = (kmin == kmax);
        if (p.k_defined) p.k_val = kmin;
    }
    return out;
}

inline Eigen::MatrixXd distance_indicator(const DistanceData& dd, int m) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dd.n, dd.n);
    if (m > dd.diameter) return a;
    for (int u = 0; u < dd.n; ++u)
        for (int v = 0; v < dd.n; ++v)
            if (dd.d(u, v) == m) a(u, v) = 1.0;
    return a;
}

struct NormIdentity {
    double lhs = 0;  // |A A_i|^2 under <M,N> = (1/n) tr(M^T N)
    double rhs = 0;  // kbar_{i-1} mean(b^2)_{i-1} + kbar_i mean(a^2)_i + kbar_{i+1} mean(c^2)_{i+1}
};

// Independent check: lhs by an actual matrix product, rhs from the pair tables.
inline NormIdentity matrix_norm_identity(const Graph& g, const DistanceData& dd,
                                         const std::vector<LevelProfile>& profiles, int i) {
    NormIdentity ni;
    const Eigen::MatrixXd prod = adjacency_matrix(g) * distance_indicator(dd, i);
    ni.lhs = prod.squaredNorm() / dd.n;
    const int D = dd.diameter;
    if (i - 1 >= 0) ni.rhs += profiles[i - 1].k_bar_i * profiles[i - 1].b_sq;
    ni.rhs += profiles[i].k_bar_i * profiles[i].a_sq;
    if (i + 1 <= D) ni.rhs += profiles[i + 1].k_bar_i * profiles[i + 1].c_sq;
    return ni;
}

struct PmOfA {
    Eigen::MatrixXd pm;
    double residual = 0;  // (1/n) sum of squared entry differences against A_m
};

// p_m(A) via the three-term recurrence on matrices; one multiply per level
inline PmOfA pm_of_a(const Graph& g, const PredistanceSystem& p, int m, const DistanceData& dd) {
    if (m > p.d) throw unsupported_error("pm_of_a: m exceeds d");
    const int n = g.order();
    const Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::MatrixXd prev = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd cur = a / p.gamma[1];
    if (m == 0) cur = prev;
    for (int i = 1; i < m; ++i) {
        Eigen::MatrixXd next = (a * cur - p.alpha[i] * cur - p.beta[i - 1] * prev) / p.gamma[i + 1];
        prev = std::move(cur);
        cur = std::move(next);
    }
    PmOfA r;
    r.pm = std::move(cur);
    r.residual = (r.pm - distance_indicator(dd, m)).squaredNorm() / n;
    return r;
}

struct WalkQuantities {
    bool identity_applies = false;  // girth >= 2d-2, which makes walk_avg equal ac_avg
    long long pairs = 0;            // ordered pairs at distance d-1
    double walk_avg = 0;            // mean of (A^d)_{uv} over those pairs
    double ac_avg = 0;              // mean of a_{d-1}(u,v) c_{d-1}(u,v) over those pairs
    double walk_min = 0, walk_max = 0;
};

inline WalkQuantities walk_quantities(const Graph& g, const DistanceData& dd,
                                      const PredistanceSystem& p, const PairTables& t) {
    WalkQuantities w;
    const int d = p.d, n = g.order();
    w.identity_applies = dd.girth ? (*dd.girth >= 2 * d - 2) : true;
    if (d - 1 > dd.diameter) return w;  // no pairs at distance d-1

    const Eigen::MatrixXd a = adjacency_matrix(g);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < d; ++i) power = power * a;

    double wsum = 0, acsum = 0, wmin = 0, wmax = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (dd.d(u, v) != d - 1) continue;
            const double walks = power(u, v);
            if (w.pairs == 0) wmin = wmax = walks;
            wmin = std::min(wmin, walks);
            wmax = std::max(wmax, walks);
            wsum += walks;
            acsum += double(t.a_at(u, v)) * t.c_at(u, v);
            ++w.pairs;
        }
    if (w.pairs > 0) {
        w.walk_avg = wsum / w.pairs;
        w.ac_avg = acsum / w.pairs;
        w.walk_min = wmin;
        w.walk_max = wmax;
    }
    return w;
}

} // namespace drg
