#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace drg {

// Tolerances are stored as scales; effective thresholds depend on n and lambda0.
// Every report records the effective values actually used.
struct ToleranceConfig {
    double eig_cluster_scale = 1e-8;   // gap threshold = scale * max(1,|lambda0|) * n
    double eq_band = 1e-6;             // absolute band for equality tests on preintersection numbers
    double residual_scale = 1e-7;      // matrix-identity residual bound = scale * n

    double eig_threshold(double lambda0, int n) const {
        return eig_cluster_scale * std::max(1.0, std::abs(lambda0)) * n;
    }
    double residual_bound(int n) const { return residual_scale * n; }

    void validate() const {
        if (!(eig_cluster_scale > 0) || !(eq_band > 0) || !(residual_scale > 0))
            throw unsupported_error("tolerances must be strictly positive");
    }
};

struct Spectrum {
    int n = 0;
    std::vector<double> distinct;   // strictly decreasing
    std::vector<int> mult;          // positive, sums to n
    bool marginal = false;          // clustering had a gap near the threshold on both sides

    int d() const { return static_cast<int>(distinct.size()) - 1; }
    double lambda0() const { return distinct.front(); }
};

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    return a;
}

// max order for the dense eigensolve path; larger inputs are refused upfront
inline constexpr int kMaxAnalyzeOrder = 4096;

inline std::vector<double> eigen_decompose(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw unsupported_error("empty graph");
    if (n > kMaxAnalyzeOrder)
        throw unsupported_error("graph too large for dense analysis (n=" + std::to_string(n) +
                                ", limit " + std::to_string(kMaxAnalyzeOrder) + ")");
    if (!is_connected(g)) throw unsupported_error("graph is disconnected");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g),
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw consistency_error("eigensolver failed to converge");
    std::vector<double> raw(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(raw.begin(), raw.end(), std::greater<double>());
    return raw;
}

// Merge adjacent raw values whose gap is <= threshold; distinct value is the
// cluster mean. Marginal means some merged gap and some kept gap both lie
// within a factor 10 of the threshold, i.e. the partition is borderline.
inline Spectrum cluster_spectrum(const std::vector<double>& raw, const ToleranceConfig& tol) {
    if (raw.empty()) throw unsupported_error("empty eigenvalue list");
    Spectrum s;
    s.n = static_cast<int>(raw.size());
    const double t = tol.eig_threshold(raw.front(), s.n);

    double sum = raw[0];
    int cnt = 1;
    bool merged_near = false, split_near = false;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        const double gap = raw[i - 1] - raw[i];
        if (gap <= t) {
            if (gap > t / 10) merged_near = true;
            sum += raw[i];
            ++cnt;
        } else {
            if (gap < 10 * t) split_near = true;
            s.distinct.push_back(sum / cnt);
            s.mult.push_back(cnt);
            sum = raw[i];
            cnt = 1;
        }
    }
    s.distinct.push_back(sum / cnt);
    s.mult.push_back(cnt);
    s.marginal = merged_near && split_near;
    return s;
}

inline int triangle_count(const Graph& g) {
    int t = 0;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w != v && g.adjacent(v, w)) ++t;
    return t / 3;  // each triangle counted once per edge
}

struct MomentDiagnostics {
    double m1 = 0, m2 = 0, m3 = 0;     // sum of mult*lambda^p
    double want2 = 0, want3 = 0;       // 2e and 6*triangles
    bool ok1 = false, ok2 = false, ok3 = false;
    bool ok() const { return ok1 && ok2 && ok3; }
};

// trace identities: sum m*lambda = 0, sum m*lambda^2 = 2e, sum m*lambda^3 = 6*triangles
inline MomentDiagnostics moment_sanity(const Spectrum& s, const Graph& g,
                                       const ToleranceConfig& tol) {
    MomentDiagnostics md;
    for (std::size_t j = 0; j < s.distinct.size(); ++j) {
        const double l = s.distinct[j], m = s.mult[j];
        md.m1 += m * l;
        md.m2 += m * l * l;
        md.m3 += m * l * l * l;
    }
    md.want2 = 2.0 * g.size();
    md.want3 = 6.0 * triangle_count(g);
    const double l0 = std::max(1.0, std::abs(s.lambda0()));
    const double base = tol.residual_bound(s.n);
    md.ok1 = std::abs(md.m1) <= base * l0;
    md.ok2 = std::abs(md.m2 - md.want2) <= base * l0 * l0;
    md.ok3 = std::abs(md.m3 - md.want3) <= base * l0 * l0 * l0;
    return md;
}

inline Spectrum analyze_spectrum(const Graph& g, const ToleranceConfig& tol) {
    Spectrum s = cluster_spectrum(eigen_decompose(g), tol);
    MomentDiagnostics md = moment_sanity(s, g, tol);
    if (!md.ok())
        throw consistency_error("spectral moment check failed (m1=" + std::to_string(md.m1) +
                                ", m2=" + std::to_string(md.m2) + " want " + std::to_string(md.want2) +
                                ", m3=" + std::to_string(md.m3) + " want " + std::to_string(md.want3) +
                                "); eigensolve or clustering is wrong");
    return s;
}

} // namespace drg
