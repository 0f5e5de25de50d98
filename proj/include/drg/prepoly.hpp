#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "spectral.hpp"

namespace drg {

// (1/n) sum_j m_j p(l_j) q(l_j): the spectral scalar product on value vectors
inline double spectral_inner_product(const std::vector<double>& p, const std::vector<double>& q,
                                     const Spectrum& s) {
    double acc = 0;
    for (std::size_t j = 0; j < s.distinct.size(); ++j) acc += s.mult[j] * p[j] * q[j];
    return acc / s.n;
}

// Orthogonal system for the spectral product, normalized so |p_i|^2 = p_i(l0).
// Polynomials are stored as value vectors at the distinct eigenvalues.
struct PredistanceSystem {
    int n = 0;
    int d = 0;
    Spectrum spectrum;
    std::vector<std::vector<double>> values;  // values[i][j] = p_i(l_j)
    std::vector<double> alpha, beta, gamma;   // three-term recurrence, gamma[0]=beta[d]=0
    std::vector<double> p_lambda0;            // p_i(l0)
    std::vector<double> norms;                // |p_i|^2, equals p_lambda0 by construction
    std::vector<double> leading;              // omega_i = 1/(gamma_1...gamma_i)

    double tail_sum() const {                 // l1 + ... + l_d
        double acc = 0;
        for (int j = 1; j <= d; ++j) acc += spectrum.distinct[j];
        return acc;
    }
};

struct HoffmanValues {
    std::vector<double> values;  // n at l0, zero elsewhere
    double pi0 = 0;              // product of (l0 - l_j), j >= 1
    double leading = 0;          // n / pi0
};

inline HoffmanValues hoffman_values(const Spectrum& s) {
    HoffmanValues h;
    h.values.assign(s.distinct.size(), 0.0);
    h.values[0] = s.n;
    h.pi0 = 1;
    for (std::size_t j = 1; j < s.distinct.size(); ++j) h.pi0 *= s.lambda0() - s.distinct[j];
    h.leading = s.n / h.pi0;
    return h;
}

inline Eigen::MatrixXd recurrence_matrix(const PredistanceSystem& p) {
    const int d = p.d;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        r(i, i) = p.alpha[i];
        if (i < d) {
            r(i, i + 1) = p.gamma[i + 1];
            r(i + 1, i) = p.beta[i];
        }
    }
    return r;
}

namespace detail {

// R is diagonally similar to a symmetric tridiagonal with off-diagonals
// sqrt(beta_i * gamma_{i+1}); its eigenvalues must be the distinct eigenvalues
inline void check_recurrence_eigenvalues(const PredistanceSystem& p, double tolerance) {
    const int d = p.d;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        t(i, i) = p.alpha[i];
        if (i < d) {
            const double off = std::sqrt(p.beta[i] * p.gamma[i + 1]);
            t(i, i + 1) = off;
            t(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
    for (int i = 0; i <= d; ++i) {
        const double got = es.eigenvalues()(d - i);  // Eigen sorts ascending
        if (std::abs(got - p.spectrum.distinct[i]) > tolerance)
            throw consistency_error("recurrence matrix eigenvalue " + std::to_string(i) +
                                    " is " + std::to_string(got) + ", expected " +
                                    std::to_string(p.spectrum.distinct[i]));
    }
}

inline void validate_system(const PredistanceSystem& p, const ToleranceConfig& tol) {
    const int d = p.d;
    const Spectrum& s = p.spectrum;
    const double l0 = std::max(1.0, std::abs(s.lambda0()));
    const double res = tol.residual_bound(p.n) * l0;
    auto fail = [](const std::string& what) { throw consistency_error("predistance system: " + what); };

    for (int j = 0; j <= d; ++j)
        if (p.values[0][j] != 1.0) fail("p_0 is not identically 1");
    for (int i = 0; i <= d; ++i) {
        if (std::abs(p.norms[i] - p.p_lambda0[i]) > res) fail("normalization |p|^2 = p(l0) broken at i=" + std::to_string(i));
        for (int j = 0; j < i; ++j)
            if (std::abs(spectral_inner_product(p.values[i], p.values[j], s)) > res)
                fail("orthogonality broken at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        // relative band: beta and gamma are ratio-derived and can dwarf lambda0
        const double row_scale = std::max(1.0, (std::abs(p.beta[i]) + std::abs(p.gamma[i])) / l0);
        if (std::abs(p.alpha[i] + p.beta[i] + p.gamma[i] - s.lambda0()) > res * row_scale)
            fail("alpha+beta+gamma = lambda0 broken at i=" + std::to_string(i));
    }
    for (int i = 1; i <= d; ++i) {
        // the same gamma by the second route: p_{i-1}(l0) beta_{i-1} = p_i(l0) gamma_i;
        // the quotient is conditioned only while p(l0) stays above ~1e-24
        if (std::min(p.p_lambda0[i - 1], p.p_lambda0[i]) >= 1e-24) {
            const double gamma_alt = p.p_lambda0[i - 1] * p.beta[i - 1] / p.p_lambda0[i];
            if (std::abs(gamma_alt - p.gamma[i]) > res * std::max(1.0, std::abs(p.gamma[i])))
                fail("gamma mismatch between normalization and balance routes at i=" + std::to_string(i));
        }
        if (!(p.gamma[i] > 0)) fail("gamma_" + std::to_string(i) + " is not positive");
    }
    for (int i = 0; i < d; ++i)
        if (!(p.beta[i] > 0)) fail("beta_" + std::to_string(i) + " is not positive");

    // |x p_i|^2 against the recurrence decomposition, boundary terms zero
    for (int i = 0; i <= d; ++i) {
        std::vector<double> xp(d + 1);
        for (int j = 0; j <= d; ++j) xp[j] = s.distinct[j] * p.values[i][j];
        const double lhs = spectral_inner_product(xp, xp, s);
        double rhs = p.p_lambda0[i] * p.alpha[i] * p.alpha[i];
        if (i > 0) rhs += p.p_lambda0[i - 1] * p.beta[i - 1] * p.beta[i - 1];
        if (i < d) rhs += p.p_lambda0[i + 1] * p.gamma[i + 1] * p.gamma[i + 1];
        if (std::abs(lhs - rhs) > res * l0)
            fail("squared-norm identity for x p_i broken at i=" + std::to_string(i));
    }

    double alpha_sum = 0, lambda_sum = 0;
    for (int i = 0; i <= d; ++i) {
        alpha_sum += p.alpha[i];
        lambda_sum += s.distinct[i];
    }
    if (std::abs(alpha_sum - lambda_sum) > res) fail("sum of alphas differs from sum of distinct eigenvalues");

    // Hoffman decomposition: sum_i p_i has value n at l0 and 0 elsewhere
    for (int j = 0; j <= d; ++j) {
        double col = 0;
        for (int i = 0; i <= d; ++i) col += p.values[i][j];
        const double want = (j == 0) ? double(p.n) : 0.0;
        if (std::abs(col - want) > res * p.n) fail("Hoffman sum broken at eigenvalue " + std::to_string(j));
    }

    check_recurrence_eigenvalues(p, res);
}

} // namespace detail

// Build from the orthonormal polynomial system for the spectral product
// (Stieltjes recurrence with full reorthogonalization in long double), then
// rescale: p_i = q_i(l0) q_i, so p_i(l0) = q_i(l0)^2 is positive by
// construction and the value table stays bounded by n. The predistance
// recurrence coefficients follow from the Jacobi coefficients; the balance
// route is cross-checked in validation.
inline PredistanceSystem predistance_system(const Spectrum& s, const ToleranceConfig& tol) {
    const int d = s.d();
    if (d < 1) throw unsupported_error("spectrum has a single eigenvalue (trivial graph)");
    if (s.mult[0] != 1)
        throw unsupported_error("lambda0 has multiplicity " + std::to_string(s.mult[0]) +
                                "; not a connected-graph spectrum");

    std::vector<long double> lam(d + 1), w(d + 1);
    for (int j = 0; j <= d; ++j) {
        lam[j] = s.distinct[j];
        w[j] = static_cast<long double>(s.mult[j]) / s.n;
    }
    auto dot = [&](const std::vector<long double>& a, const std::vector<long double>& b) {
        long double acc = 0;
        for (int j = 0; j <= d; ++j) acc += w[j] * a[j] * b[j];
        return acc;
    };

    std::vector<std::vector<long double>> q(d + 1, std::vector<long double>(d + 1, 0.0L));
    std::vector<long double> ja(d + 1, 0.0L), jb(d + 1, 0.0L);  // Jacobi diagonal, off-diagonal
    std::vector<long double> gamma_norm(d + 1, 0.0L);           // gamma by the normalization route
    for (int j = 0; j <= d; ++j) q[0][j] = 1.0L;                // |1|^2 = sum of weights = 1

    for (int i = 0; i < d; ++i) {
        std::vector<long double> r(d + 1);
        for (int j = 0; j <= d; ++j) r[j] = lam[j] * q[i][j];
        ja[i] = dot(r, q[i]);
        for (int j = 0; j <= d; ++j) {
            r[j] -= ja[i] * q[i][j];
            if (i > 0) r[j] -= jb[i] * q[i - 1][j];
        }
        // normalization route on the raw residual: the predistance residual is
        // q0_i * r, and gamma_{i+1} = |q0_i r|^2 / (q0_i r)(l0); sign-safe
        if (std::abs(static_cast<double>(r[0])) > 0)
            gamma_norm[i + 1] = q[i][0] * dot(r, r) / r[0];
        // two reorthogonalization passes keep the basis orthonormal at high degree
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k <= i; ++k) {
                const long double c = dot(r, q[k]);
                for (int j = 0; j <= d; ++j) r[j] -= c * q[k][j];
            }
        const long double rn = std::sqrt(dot(r, r));
        if (!(rn > 1e-300L))
            throw consistency_error("degenerate spectrum: orthonormal residual vanished at degree " +
                                    std::to_string(i + 1));
        jb[i + 1] = rn;
        for (int j = 0; j <= d; ++j) q[i + 1][j] = r[j] / rn;
    }
    {
        std::vector<long double> r(d + 1);
        for (int j = 0; j <= d; ++j) r[j] = lam[j] * q[d][j];
        ja[d] = dot(r, q[d]);
    }
    // orient every polynomial positively at lambda0
    std::vector<long double> q0(d + 1);
    for (int i = 0; i <= d; ++i) {
        if (q[i][0] < 0)
            for (int j = 0; j <= d; ++j) q[i][j] = -q[i][j];
        q0[i] = q[i][0];
        if (!(q0[i] > 1e-150L))
            throw consistency_error("predistance value at lambda0 is numerically zero at degree " +
                                    std::to_string(i));
    }

    // ratio chain rho_i = q_{i+1}(l0)/q_i(l0) by the backward recursion on the
    // l0 row of the Jacobi recurrence, seeded exactly at the top row. This
    // keeps every row identity alpha+beta+gamma = l0 exact even where the
    // forward quotient of tiny q(l0) values has lost its conditioning; the two
    // chains agree wherever the forward one is trustworthy.
    std::vector<long double> rho(d, 0.0L);
    rho[d - 1] = jb[d] / (lam[0] - ja[d]);
    if (!(rho[d - 1] > 0))
        throw consistency_error("degenerate spectrum: top recurrence row is not positive");
    for (int i = d - 1; i >= 1; --i) {
        const long double den = lam[0] - ja[i] - jb[i + 1] * rho[i];
        if (!(den > 0))
            throw consistency_error("degenerate spectrum: ratio chain lost positivity at degree " +
                                    std::to_string(i));
        rho[i - 1] = jb[i] / den;
    }

    PredistanceSystem p;
    p.n = s.n;
    p.d = d;
    p.spectrum = s;
    p.values.assign(d + 1, std::vector<double>(d + 1, 0.0));
    p.alpha.assign(d + 1, 0.0);
    p.beta.assign(d + 1, 0.0);
    p.gamma.assign(d + 1, 0.0);
    p.p_lambda0.assign(d + 1, 0.0);
    p.norms.assign(d + 1, 0.0);
    p.leading.assign(d + 1, 0.0);

    long double omega = 1.0L;  // 1/(gamma_1...gamma_i)
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) p.values[i][j] = static_cast<double>(q0[i] * q[i][j]);
        p.p_lambda0[i] = static_cast<double>(q0[i] * q0[i]);
        p.norms[i] = static_cast<double>(q0[i] * q0[i] * dot(q[i], q[i]));
        p.alpha[i] = static_cast<double>(ja[i]);
        if (i >= 1) {
            p.gamma[i] = static_cast<double>(jb[i] / rho[i - 1]);
            p.beta[i - 1] = static_cast<double>(jb[i] * rho[i - 1]);
            omega *= rho[i - 1] / jb[i];
        }
        p.leading[i] = static_cast<double>(omega);
    }
    for (int j = 0; j <= d; ++j) p.values[0][j] = 1.0;  // q_0 is exactly constant

    // the raw normalization route must reproduce the published gamma chain
    // wherever the values at l0 keep the quotient conditioned (trust floor:
    // below ~1e-12 the ratio noise exceeds any meaningful band)
    const double res = tol.residual_bound(p.n) * std::max(1.0, std::abs(s.lambda0()));
    for (int i = 1; i <= d; ++i) {
        if (std::min(q0[i - 1], q0[i]) < 1e-12L) continue;
        const double g2 = static_cast<double>(gamma_norm[i]);
        if (std::abs(g2 - p.gamma[i]) > res * std::max(1.0, std::abs(p.gamma[i])))
            throw consistency_error("predistance system: gamma normalization route disagrees at i=" +
                                    std::to_string(i));
    }

    detail::validate_system(p, tol);
    return p;
}

// Two highest monomial coefficients of p_deg via Newton divided differences
// over the first deg+1 eigenvalue nodes. Used for the leading-term identities.
struct TopCoefficients {
    double leading = 0;   // coefficient of x^deg
    double second = 0;    // coefficient of x^(deg-1), 0 when deg = 0
};

inline TopCoefficients two_highest_coefficients(const PredistanceSystem& p, int deg) {
    const std::vector<double>& nodes = p.spectrum.distinct;
    std::vector<double> dd(p.values[deg].begin(), p.values[deg].begin() + deg + 1);
    double prev_order_head = dd[0];  // f[x_0..x_{deg-1}] once the last round runs
    for (int order = 1; order <= deg; ++order) {
        prev_order_head = dd[0];
        for (int k = 0; k + order <= deg; ++k)
            dd[k] = (dd[k + 1] - dd[k]) / (nodes[k + order] - nodes[k]);
    }
    TopCoefficients tc;
    tc.leading = dd[0];
    if (deg >= 1) {
        double node_sum = 0;
        for (int j = 0; j < deg; ++j) node_sum += nodes[j];
        tc.second = prev_order_head - tc.leading * node_sum;
    }
    return tc;
}

struct GirthPrediction {
    bool applicable = false;          // requires gamma_1 = 1 (regular graph)
    bool matched = false;             // a girth pattern fired (or the acyclic one)
    std::optional<int> girth;         // nullopt = acyclic
};

// girth 2m+1: alpha_0..alpha_{m-1}=0, alpha_m != 0, gamma_1..gamma_m=1
// girth 2m:   alpha_0..alpha_{m-1}=0, gamma_1..gamma_{m-1}=1, gamma_m>1
inline GirthPrediction girth_from_preintersection(const PredistanceSystem& p, double eq_band) {
    GirthPrediction gp;
    if (std::abs(p.gamma[1] - 1.0) > eq_band) return gp;
    gp.applicable = true;
    int a = -1, c = -1;
    for (int i = 0; i <= p.d; ++i)
        if (std::abs(p.alpha[i]) > eq_band) {
            a = i;
            break;
        }
    for (int i = 1; i <= p.d; ++i)
        if (std::abs(p.gamma[i] - 1.0) > eq_band) {
            c = i;
            break;
        }
    if (a < 0 && c < 0) {
        gp.matched = true;  // acyclic pattern
        return gp;
    }
    if (a >= 0 && (c < 0 || a < c)) {
        gp.matched = true;
        gp.girth = 2 * a + 1;
        return gp;
    }
    if (c >= 0 && p.gamma[c] > 1.0 + eq_band) {
        gp.matched = true;
        gp.girth = 2 * c;
    }
    return gp;  // matched stays false when the first deviating gamma is below 1
}

struct OddGirthPrediction {
    bool bipartite = false;           // all alphas vanish
    std::optional<int> odd_girth;     // 2m+1 for the least m with alpha_m != 0
};

inline OddGirthPrediction odd_girth_from_preintersection(const PredistanceSystem& p, double eq_band) {
    OddGirthPrediction op;
    for (int i = 0; i <= p.d; ++i)
        if (std::abs(p.alpha[i]) > eq_band) {
            op.odd_girth = 2 * i + 1;
            return op;
        }
    op.bipartite = true;
    return op;
}

} // namespace drg
