#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "report_json.hpp"

namespace drg {

struct AcceptanceRow {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace selftest_detail {

struct Checker {
    bool ok = true;
    std::string msgs;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            msgs += (msgs.empty() ? "" : "; ") + what;
        }
    }
    void near(double got, double want, double tol, const std::string& what) {
        expect(std::abs(got - want) <= tol,
               what + ": got " + std::to_string(got) + ", want " + std::to_string(want) +
                   " within " + std::to_string(tol));
    }
};

inline Graph random_circulant(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> count(1, std::max(1, n / 4));
    while (true) {
        std::vector<int> offsets(n / 2);
        std::iota(offsets.begin(), offsets.end(), 1);
        std::shuffle(offsets.begin(), offsets.end(), rng);
        offsets.resize(count(rng));
        std::vector<std::pair<int, int>> edges;
        for (int s : offsets)
            for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + s) % n);  // from_edges dedupes
        std::string name = "circulant(" + std::to_string(n) + ";";
        std::sort(offsets.begin(), offsets.end());
        for (size_t i = 0; i < offsets.size(); ++i)
            name += (i ? "," : "") + std::to_string(offsets[i]);
        Graph g = Graph::from_edges(n, edges, name + ")");
        if (is_connected(g)) return g;
    }
}

// pairing model; retries until simple and connected
inline Graph random_regular(int n, int k, std::mt19937& rng, int tag) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), k, v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> edges;
        bool good = true;
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        for (size_t i = 0; i + 1 < stubs.size() && good; i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) good = false;
            else {
                seen[u][v] = seen[v][u] = true;
                edges.emplace_back(u, v);
            }
        }
        if (!good) continue;
        Graph g = Graph::from_edges(
            n, edges, std::to_string(k) + "-regular(n=" + std::to_string(n) + ",#" + std::to_string(tag) + ")");
        if (is_connected(g)) return g;
    }
    throw consistency_error("random regular sampling failed to converge");
}

} // namespace selftest_detail

// deterministic corpus used by the sweep rows; > 500 connected graphs
inline std::vector<Graph> soundness_corpus() {
    using namespace selftest_detail;
    std::mt19937 rng(20260815u);
    std::vector<Graph> out;
    for (int n = 3; n <= 20; ++n) out.push_back(cycle(n));
    for (int n = 2; n <= 12; ++n) out.push_back(complete(n));
    for (int a = 1; a <= 7; ++a)
        for (int b = a; b <= 7; ++b) {
            if (a == 1 && b == 1) continue;  // K_{1,1} = K_2 already present
            out.push_back(complete_bipartite(a, b));
        }
    for (int q = 1; q <= 4; ++q) out.push_back(hypercube(q));
    out.push_back(petersen());
    out.push_back(odd_graph(4));
    for (int i = 0; i < 140; ++i) {
        std::uniform_int_distribution<int> size(5, 32);
        out.push_back(random_circulant(size(rng), rng));
    }
    for (int i = 0; i < 140; ++i) {
        std::uniform_int_distribution<int> half(4, 24);
        out.push_back(random_regular(2 * half(rng), 3, rng, i));
    }
    for (int i = 0; i < 140; ++i) {
        std::uniform_int_distribution<int> size(8, 48);
        out.push_back(random_regular(size(rng), 4, rng, i));
    }
    // doubled bipartite distance-regular graphs
    for (int n = 4; n <= 20; n += 2) out.push_back(tensor_with_ones2(cycle(n)));
    for (int q = 1; q <= 4; ++q) out.push_back(tensor_with_ones2(hypercube(q)));
    for (int a = 2; a <= 5; ++a) out.push_back(tensor_with_ones2(complete_bipartite(a, a)));
    // strong products
    out.push_back(strong_product(hypercube(3), complete(2)));
    out.push_back(strong_product(cycle(5), complete(2)));
    out.push_back(strong_product(cycle(4), complete(3)));
    out.push_back(strong_product(petersen(), complete(2)));
    out.push_back(strong_product(complete(3), complete(3)));
    out.push_back(strong_product(cycle(6), cycle(4)));
    return out;
}

// the acceptance suite; rows 6..8 share one sweep over the corpus
inline std::vector<AcceptanceRow> run_acceptance(const ToleranceConfig& tol,
                                                 const std::string& fixture_dir = default_fixture_dir()) {
    using namespace selftest_detail;
    using clock = std::chrono::steady_clock;
    std::vector<AcceptanceRow> rows;

    auto run = [&rows](int number, const std::string& title, double time_limit_s,
                       const std::function<void(Checker&)>& body) {
        AcceptanceRow row;
        row.number = number;
        row.title = title;
        Checker ck;
        const auto t0 = clock::now();
        try {
            body(ck);
        } catch (const std::exception& ex) {
            ck.expect(false, std::string("exception: ") + ex.what());
        }
        row.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        if (time_limit_s > 0)
            ck.expect(row.seconds < time_limit_s,
                      "runtime " + std::to_string(row.seconds) + "s exceeds " +
                          std::to_string(time_limit_s) + "s");
        row.pass = ck.ok;
        row.detail = ck.msgs;
        rows.push_back(row);
    };

    run(1, "doubled 3-cube: spectrum, well-defined c and k, preintersection values, oracle", 1.0,
        [&](Checker& ck) {
            const FullReport r = full_report(strong_product(hypercube(3), complete(2)), tol);
            ck.expect(r.spectrum.d() == 3, "expected 4 distinct eigenvalues");
            const double want_l[] = {7, 3, -1, -5};
            const int want_m[] = {1, 3, 11, 1};
            for (int i = 0; i <= 3; ++i) {
                ck.near(r.spectrum.distinct[i], want_l[i], 1e-9, "lambda_" + std::to_string(i));
                ck.expect(r.spectrum.mult[i] == want_m[i], "mult_" + std::to_string(i));
            }
            const int want_c[] = {0, 1, 4, 6};
            const int want_k[] = {1, 7, 6, 2};
            for (int i = 1; i <= 3; ++i) {
                ck.expect(r.profiles[i].c_defined && r.profiles[i].c_val == want_c[i],
                          "c_" + std::to_string(i) + " well-defined value");
                ck.expect(r.profiles[i].k_defined && r.profiles[i].k_val == want_k[i],
                          "k_" + std::to_string(i) + " well-defined value");
            }
            ck.near(r.presystem.gamma[1], 1.0, 1e-9, "gamma_1");
            ck.near(r.presystem.gamma[2], 4.571, 1e-3, "gamma_2");
            ck.near(r.presystem.gamma[3], 4.816, 1e-3, "gamma_3");
            ck.expect(!r.oracle.is_drg, "oracle must refuse distance-regularity");
            ck.expect(!r.profiles[1].a_defined, "a_1 must not be well-defined");
            ck.expect(!r.profiles[1].b_defined, "b_1 must not be well-defined");
        });

    run(2, "spectrum of the putative scheme: preintersection numbers from values alone", 0.010,
        [&](Checker& ck) {
            const double r5 = std::sqrt(45.0);
            Spectrum s;
            s.n = 81;
            s.distinct = {10.0, (-1 + r5) / 2, 1.0, (-1 - r5) / 2};
            s.mult = {1, 30, 20, 30};
            const PredistanceSystem p = predistance_system(s, tol);
            ck.near(p.alpha[1], 0.0, 1e-9, "alpha_1");
            ck.near(p.gamma[2], 13.0 / 9.0, 1e-9, "gamma_2");
            ck.near(p.alpha[2], 99.0 / 13.0, 1e-9, "alpha_2");
            ck.near(p.gamma[3], 99.0 / 13.0, 1e-9, "gamma_3");
            ck.near(p.alpha[2] * p.gamma[2], 11.0, 1e-8, "alpha_2 * gamma_2");
        });

    run(3, "Perkel graph: oracle array, spectrum, balanced walk case of the girth criterion", 2.0,
        [&](Checker& ck) {
            const FullReport r = full_report(perkel_graph(fixture_dir), tol);
            ck.expect(r.oracle.is_drg, "oracle must certify distance-regularity");
            ck.expect(r.oracle.array_b == std::vector<int>{6, 5, 2} &&
                          r.oracle.array_c == std::vector<int>{1, 1, 3},
                      "intersection array {6,5,2;1,1,3}");
            const double want_l[] = {6.0, (3 + std::sqrt(5.0)) / 2, (3 - std::sqrt(5.0)) / 2, -3.0};
            const int want_m[] = {1, 18, 18, 20};
            for (int i = 0; i <= 3; ++i) {
                ck.near(r.spectrum.distinct[i], want_l[i], 1e-6, "lambda_" + std::to_string(i));
                ck.expect(r.spectrum.mult[i] == want_m[i], "mult_" + std::to_string(i));
            }
            ck.near(r.presystem.alpha[2], 3.0, 1e-6, "alpha_2");
            ck.near(r.presystem.gamma[3], 3.0, 1e-6, "gamma_3");
            const CriterionResult* girth = nullptr;
            const CriterionResult* gpp = nullptr;
            for (const CriterionResult& c : r.criteria) {
                if (c.id == "girth-theorem") girth = &c;
                if (c.id == "girth-plusplus") gpp = &c;
            }
            ck.expect(girth && girth->verdict == Verdict::certified, "girth theorem certifies at g=5=2d-1");
            ck.expect(gpp && gpp->applicable, "balanced-walk criterion applicable");
            if (gpp) {
                ck.near(gpp->margins.at("alpha_minus_gamma"), 0.0, tol.eq_band, "alpha_2 - gamma_3");
                ck.near(gpp->margins.at("walk_min"), 3.0, 1e-6, "min (A^3)_uv over distance-2 pairs");
                ck.near(gpp->margins.at("walk_max"), 3.0, 1e-6, "max (A^3)_uv over distance-2 pairs");
            }
        });

    run(4, "Hoffman graph: cospectral mate of the 4-cube, bipartite equality, no certificate", 1.0,
        [&](Checker& ck) {
            const FullReport r = full_report(hoffman_graph(fixture_dir), tol);
            const Spectrum cube = analyze_spectrum(hypercube(4), tol);
            ck.expect(r.spectrum.d() == cube.d() && r.spectrum.mult == cube.mult,
                      "clustered multiplicities match hypercube(4)");
            for (int i = 0; i <= std::min(r.spectrum.d(), cube.d()); ++i)
                ck.near(r.spectrum.distinct[i], cube.distinct[i], 1e-9, "lambda_" + std::to_string(i));
            ck.expect(r.dd.bipartite, "bipartite");
            for (int i = 0; i <= r.presystem.d; ++i)
                ck.near(r.presystem.alpha[i], 0.0, 1e-9, "alpha_" + std::to_string(i));
            ck.near(r.presystem.gamma[4], 4.0, 1e-6, "gamma_4 = -(l1+..+l4)");
            ck.near(-r.presystem.tail_sum(), 4.0, 1e-6, "eigenvalue tail sum");
            ck.expect(!r.oracle.is_drg, "oracle must refuse distance-regularity");
            for (const CriterionResult& c : r.criteria)
                ck.expect(c.verdict != Verdict::certified, "no certificate allowed: " + c.id);
        });

    run(5, "generalized-Odd equality for Petersen and O4; bipartite identity for hypercubes", 0,
        [&](Checker& ck) {
            for (const Graph& g : {petersen(), odd_graph(4)}) {
                const FullReport r = full_report(g, tol);
                ck.near(r.presystem.gamma[r.presystem.d], -r.presystem.tail_sum(), 1e-6,
                        g.name() + ": gamma_d vs eigenvalue tail");
                bool certified = false;
                for (const CriterionResult& c : r.criteria)
                    if (c.id == "odd-girth-theorem")
                        certified = (c.verdict == Verdict::certified);
                ck.expect(certified, g.name() + ": odd-girth criterion certifies");
            }
            for (int q = 2; q <= 4; ++q) {
                const FullReport r = full_report(hypercube(q), tol);
                ck.near(r.presystem.gamma[r.presystem.d], -r.presystem.tail_sum(), 1e-6,
                        r.name + ": bipartite identity");
            }
        });

    // rows 6..8 share one sweep
    std::vector<FullReport> sweep;
    std::vector<std::string> sweep_errors;

    run(6, "soundness sweep: certificates never contradict the oracle; system invariants hold", 300.0,
        [&](Checker& ck) {
            const std::vector<Graph> corpus = soundness_corpus();
            ck.expect(corpus.size() >= 500,
                      "corpus has " + std::to_string(corpus.size()) + " graphs, need 500");
            for (const Graph& g : corpus) {
                try {
                    FullReport r = full_report(g, tol);  // invariant gates run inside
                    for (const CriterionResult& c : r.criteria)
                        ck.expect(!(c.verdict == Verdict::certified && !r.oracle.is_drg),
                                  g.name() + ": " + c.id + " certified against the oracle");
                    ck.expect(r.internal_consistency_ok, g.name() + ": internal consistency");
                    sweep.push_back(std::move(r));
                } catch (const std::exception& ex) {
                    ck.expect(false, g.name() + ": " + ex.what());
                    sweep_errors.push_back(g.name());
                }
            }
        });

    run(7, "girth and odd-girth from preintersection numbers match BFS on regular graphs", 0,
        [&](Checker& ck) {
            ck.expect(!sweep.empty(), "sweep unavailable");
            for (const FullReport& r : sweep) {
                if (!r.dd.regular) continue;
                const GirthPrediction gp = girth_from_preintersection(r.presystem, tol.eq_band);
                ck.expect(gp.applicable && gp.matched, r.name + ": girth pattern must match");
                ck.expect(gp.girth == r.dd.girth, r.name + ": predicted girth differs from BFS");
                const OddGirthPrediction op = odd_girth_from_preintersection(r.presystem, tol.eq_band);
                ck.expect(op.bipartite == r.dd.bipartite, r.name + ": bipartite prediction differs");
                ck.expect(op.odd_girth == r.dd.odd_girth, r.name + ": predicted odd-girth differs");
            }
        });

    run(8, "spectral-excess chain: mean k_m >= p_m(lambda0), equality exactly at partial levels", 0,
        [&](Checker& ck) {
            ck.expect(!sweep.empty(), "sweep unavailable");
            for (const FullReport& r : sweep) {
                if (!r.dd.regular) continue;
                const int cap = std::min(r.oracle.max_pdr_level + 1, r.dd.diameter);
                for (int m = 1; m <= cap; ++m) {
                    const double slack = r.dd.k_bar[m] - r.presystem.p_lambda0[m];
                    ck.expect(slack >= -1e-6 * r.n,
                              r.name + ": mean k_" + std::to_string(m) + " below p_m(lambda0)");
                    const bool equal = std::abs(slack) <= 1e-6 * r.n;
                    const bool pdr = m <= r.oracle.max_pdr_level;
                    ck.expect(equal == pdr, r.name + ": equality vs partial level at m=" +
                                                std::to_string(m) + " (slack " + std::to_string(slack) + ")");
                }
            }
        });

    run(9, "doubling a bipartite even-diameter graph keeps k,a well-defined but breaks c_2", 0,
        [&](Checker& ck) {
            for (const Graph& base : {cycle(4), cycle(8), hypercube(2)}) {
                const Graph t = tensor_with_ones2(base);
                const FullReport r = full_report(t, tol);
                for (const LevelProfile& p : r.profiles) {
                    ck.expect(p.k_defined, t.name() + ": k_" + std::to_string(p.i) + " well-defined");
                    ck.expect(p.a_defined, t.name() + ": a_" + std::to_string(p.i) + " well-defined");
                }
                ck.expect(r.dd.diameter >= 2 && !r.profiles[2].c_defined,
                          t.name() + ": c_2 must not be well-defined");
                ck.expect(!r.oracle.is_drg, t.name() + ": oracle must refuse distance-regularity");
            }
        });

    return rows;
}

inline std::string acceptance_table(const std::vector<AcceptanceRow>& rows) {
    std::ostringstream out;
    int passed = 0;
    for (const AcceptanceRow& r : rows) {
        out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title;
        char buf[32];
        std::snprintf(buf, sizeof buf, "  [%.2fs]", r.seconds);
        out << buf << "\n";
        if (!r.pass) out << "      " << r.detail << "\n";
        passed += r.pass;
    }
    out << passed << "/" << rows.size() << " acceptance criteria passed\n";
    return out.str();
}

} // namespace drg
