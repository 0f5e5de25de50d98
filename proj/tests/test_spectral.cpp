#include <catch2/catch_amalgamated.hpp>
#include <drg/spectral.hpp>
#include <drg/generators.hpp>
#include <drg/distance.hpp>
#include <drg/metrics.hpp>
#include <drg/fixtures.hpp>

using namespace drg;

static ToleranceConfig tol;

TEST_CASE("eigen decomposition returns the known spectra") {
    auto raw = eigen_decompose(complete(3));
    REQUIRE(raw.size() == 3);
    REQUIRE(raw[0] == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(raw[1] == Catch::Approx(-1.0).margin(1e-12));
    REQUIRE(raw[2] == Catch::Approx(-1.0).margin(1e-12));

    Spectrum c4 = analyze_spectrum(cycle(4), tol);
    REQUIRE(c4.d() == 2);
    REQUIRE(c4.distinct[0] == Catch::Approx(2.0).margin(1e-9));
    REQUIRE(c4.distinct[1] == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(c4.distinct[2] == Catch::Approx(-2.0).margin(1e-9));
    REQUIRE(c4.mult == std::vector<int>{1, 2, 1});

    Spectrum pet = analyze_spectrum(petersen(), tol);
    REQUIRE(pet.d() == 2);
    REQUIRE(pet.distinct[0] == Catch::Approx(3.0).margin(1e-9));
    REQUIRE(pet.distinct[1] == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(pet.distinct[2] == Catch::Approx(-2.0).margin(1e-9));
    REQUIRE(pet.mult == std::vector<int>{1, 5, 4});
}

TEST_CASE("clustering merges within the scaled threshold and flags the margin") {
    const double t = tol.eig_threshold(1.0, 3);  // 3e-8 at these parameters
    // one merged gap and one kept gap, both within a factor 10 of the threshold
    Spectrum s = cluster_spectrum({1.0, 1.0 - 0.5 * t, 1.0 - 0.5 * t - 5 * t}, tol);
    REQUIRE(s.d() == 1);
    REQUIRE(s.mult == std::vector<int>{2, 1});
    REQUIRE(s.marginal);
    // cluster representative is the mean
    REQUIRE(s.distinct[0] == Catch::Approx(1.0 - 0.25 * t).epsilon(1e-12));

    // comfortably separated values are not marginal
    Spectrum t2 = cluster_spectrum({2.0, 1.0, -1.0}, tol);
    REQUIRE(t2.d() == 2);
    REQUIRE_FALSE(t2.marginal);

    // exactly repeated values collapse without a marginal flag
    Spectrum t3 = cluster_spectrum({2.0, 1.0, 1.0, 1.0, -2.0}, tol);
    REQUIRE(t3.mult == std::vector<int>{1, 3, 1});
    REQUIRE_FALSE(t3.marginal);
}

TEST_CASE("analysis refuses what it cannot answer for") {
    REQUIRE_THROWS_AS(eigen_decompose(Graph::from_edges(4, {{0, 1}, {2, 3}})), unsupported_error);
    Graph big = Graph::from_edges(kMaxAnalyzeOrder + 1, {{0, 1}});
    REQUIRE_THROWS_AS(eigen_decompose(big), unsupported_error);
}

TEST_CASE("moment diagnostics catch a wrong spectrum") {
    Graph g = petersen();
    Spectrum good = analyze_spectrum(g, tol);
    REQUIRE(moment_sanity(good, g, tol).ok());

    Spectrum bad = good;
    bad.distinct[1] = 1.25;  // perturb one eigenvalue well past the band
    MomentDiagnostics md = moment_sanity(bad, g, tol);
    REQUIRE_FALSE(md.ok());

    Spectrum swapped = good;
    swapped.mult = {1, 4, 5};  // wrong multiplicities
    REQUIRE_FALSE(moment_sanity(swapped, g, tol).ok());
}

TEST_CASE("triangle counting is exact") {
    REQUIRE(triangle_count(complete(4)) == 4);
    REQUIRE(triangle_count(petersen()) == 0);
    REQUIRE(triangle_count(cycle(3)) == 1);
    REQUIRE(triangle_count(hypercube(3)) == 0);
    // each of the 12 cube edges lifts to a K4 fiber block: 4 triangles apiece
    REQUIRE(triangle_count(strong_product(hypercube(3), complete(2))) == 48);
}

TEST_CASE("the bundled fixture is cospectral with the 4-cube but not isomorphic to it") {
    Graph h = hoffman_graph();
    REQUIRE(h.order() == 16);
    REQUIRE(h.size() == 32);
    Spectrum sh = analyze_spectrum(h, tol);
    Spectrum sq = analyze_spectrum(hypercube(4), tol);
    REQUIRE(sh.d() == 4);
    REQUIRE(sq.d() == 4);
    for (int j = 0; j <= 4; ++j) {
        REQUIRE(sh.distinct[j] == Catch::Approx(sq.distinct[j]).margin(1e-9));
        REQUIRE(sh.mult[j] == sq.mult[j]);
    }
    // distinguished by local structure: the 4-cube has every c_2 = 2
    DistanceData dh = distance_data(h);
    PairTables th = pairwise_intersection(h, dh);
    bool uniform = true;
    int first = -1;
    for (int u = 0; u < 16 && uniform; ++u)
        for (int v = 0; v < 16 && uniform; ++v)
            if (dh.d(u, v) == 2) {
                if (first < 0) first = th.c_at(u, v);
                else uniform = (th.c_at(u, v) == first);
            }
    REQUIRE_FALSE(uniform);
}

TEST_CASE("the bundled distance-regular fixture validates") {
    Graph p = perkel_graph();
    REQUIRE(p.order() == 57);
    REQUIRE(p.size() == 171);
    Spectrum s = analyze_spectrum(p, tol);
    REQUIRE(s.d() == 3);
    REQUIRE(s.distinct[0] == Catch::Approx(6.0).margin(1e-9));
    REQUIRE(s.distinct[1] == Catch::Approx((3.0 + std::sqrt(5.0)) / 2).margin(1e-9));
    REQUIRE(s.distinct[2] == Catch::Approx((3.0 - std::sqrt(5.0)) / 2).margin(1e-9));
    REQUIRE(s.distinct[3] == Catch::Approx(-3.0).margin(1e-9));
    REQUIRE(s.mult == std::vector<int>{1, 18, 18, 20});
}
