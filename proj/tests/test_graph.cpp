#include <catch2/catch_amalgamated.hpp>
#include <drg/graph.hpp>
#include <drg/generators.hpp>
#include <drg/distance.hpp>
#include <drg/spectral.hpp>
#include <Eigen/Dense>
#include <random>

using namespace drg;

TEST_CASE("graph6 decodes the short-form header") {
    Graph k3 = parse_graph6("Bw");
    REQUIRE(k3.order() == 3);
    REQUIRE(k3.size() == 3);
    REQUIRE(k3.adjacent(0, 1));
    REQUIRE(k3.adjacent(0, 2));
    REQUIRE(k3.adjacent(1, 2));

    Graph k2 = parse_graph6("A_");
    REQUIRE(k2.order() == 2);
    REQUIRE(k2.size() == 1);

    Graph e2 = parse_graph6("A?");
    REQUIRE(e2.order() == 2);
    REQUIRE(e2.size() == 0);
}

TEST_CASE("graph6 rejects malformed input") {
    REQUIRE_THROWS_AS(parse_graph6(""), format_error);
    REQUIRE_THROWS_AS(parse_graph6("?"), format_error);    // order 0
    REQUIRE_THROWS_AS(parse_graph6("A~"), format_error);   // nonzero padding
    REQUIRE_THROWS_AS(parse_graph6("B"), format_error);    // truncated body
    REQUIRE_THROWS_AS(parse_graph6("Bww"), format_error);  // trailing body bytes
    REQUIRE_THROWS_AS(parse_graph6("~~"), format_error);   // beyond supported range
    REQUIRE_THROWS_AS(parse_graph6("\x1c q"), format_error);  // byte below printable range

    // right body length, unprintable body byte: the position is reported
    bool threw = false;
    try {
        parse_graph6(std::string("B") + char(20));
    } catch (const format_error& e) {
        threw = true;
        REQUIRE(std::string(e.what()).find("byte 1") != std::string::npos);
    }
    REQUIRE(threw);
}

TEST_CASE("graph6 accepts the eol and header variants") {
    REQUIRE(parse_graph6("Bw\n").size() == 3);
    REQUIRE(parse_graph6(">>graph6<<Bw").size() == 3);
}

TEST_CASE("graph6 round-trips random graphs") {
    std::mt19937 rng(12345u);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(1, 30);
        const int n = nd(rng);
        std::bernoulli_distribution edge(0.4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        Graph h = parse_graph6(encode_graph6(g));
        REQUIRE(h.order() == g.order());
        REQUIRE(h.size() == g.size());
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(h.adjacent(u, v) == g.adjacent(u, v));
    }
}

TEST_CASE("graph6 long form header round-trips") {
    // cycle on 63 vertices forces the 4-byte header
    Graph g = cycle(63);
    const std::string enc = encode_graph6(g);
    REQUIRE(enc[0] == '~');
    Graph h = parse_graph6(enc);
    REQUIRE(h.order() == 63);
    REQUIRE(h.size() == 63);
}

TEST_CASE("edge list parsing reports line numbers") {
    Graph g = parse_edge_list("4\n0 1\n\n2 3\n1 2\n");
    REQUIRE(g.order() == 4);
    REQUIRE(g.size() == 3);

    REQUIRE_THROWS_AS(parse_edge_list(""), format_error);
    REQUIRE_THROWS_AS(parse_edge_list("4\n0 1 2\n"), format_error);
    REQUIRE_THROWS_AS(parse_edge_list("4\n0 x\n"), format_error);
    REQUIRE_THROWS_AS(parse_edge_list("4\n0 9\n"), format_error);   // endpoint out of range
    REQUIRE_THROWS_AS(parse_edge_list("4\n1 1\n"), format_error);   // self-loop

    try {
        parse_edge_list("3\n0 1\nbad line\n");
        REQUIRE(false);
    } catch (const format_error& e) {
        REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("edge lists collapse duplicates and both orientations") {
    Graph g = parse_edge_list("3\n0 1\n1 0\n0 1\n1 2\n");
    REQUIRE(g.size() == 2);
    const std::string round = write_edge_list(g);
    REQUIRE(round == "3\n0 1\n1 2\n");
}

TEST_CASE("connectivity and regularity detection") {
    REQUIRE(is_connected(petersen()));
    REQUIRE_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));

    DistanceData dd = distance_data(petersen());
    REQUIRE(dd.regular);
    REQUIRE(dd.valency == 3);
    REQUIRE(dd.diameter == 2);

    DistanceData star = distance_data(complete_bipartite(1, 3));
    REQUIRE_FALSE(star.regular);
    REQUIRE(star.bipartite);
}

TEST_CASE("girth and odd-girth are exact on known graphs") {
    auto gd = [](const Graph& g) { return distance_data(g); };

    DistanceData c5 = gd(cycle(5));
    REQUIRE(c5.girth == 5);
    REQUIRE(c5.odd_girth == 5);

    DistanceData c6 = gd(cycle(6));
    REQUIRE(c6.girth == 6);
    REQUIRE_FALSE(c6.odd_girth.has_value());
    REQUIRE(c6.bipartite);

    DistanceData pet = gd(petersen());
    REQUIRE(pet.girth == 5);
    REQUIRE(pet.odd_girth == 5);

    DistanceData k4 = gd(complete(4));
    REQUIRE(k4.girth == 3);

    DistanceData q3 = gd(hypercube(3));
    REQUIRE(q3.girth == 4);
    REQUIRE(q3.bipartite);
    REQUIRE(q3.diameter == 3);

    DistanceData path = gd(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    REQUIRE_FALSE(path.girth.has_value());
    REQUIRE_FALSE(path.odd_girth.has_value());

    DistanceData o4 = gd(odd_graph(4));
    REQUIRE(o4.girth == 6);
    REQUIRE(o4.odd_girth == 7);
}

TEST_CASE("distances agree with the matrix-power oracle") {
    std::mt19937 rng(777u);
    int tested = 0;
    while (tested < 40) {
        std::uniform_int_distribution<int> nd(2, 12);
        const int n = nd(rng);
        std::bernoulli_distribution edge(0.35);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) continue;
        ++tested;
        DistanceData dd = distance_data(g);

        Eigen::MatrixXd a = adjacency_matrix(g);
        Eigen::MatrixXd pw = Eigen::MatrixXd::Identity(n, n);
        std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
        for (int k = 0; k <= n; ++k) {
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (dist[u][v] < 0 && pw(u, v) > 0.5) dist[u][v] = k;
            pw = pw * a;
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(dd.d(u, v) == dist[u][v]);
    }
}

TEST_CASE("spheres and mean sphere sizes are consistent") {
    DistanceData dd = distance_data(hypercube(3));
    for (int u = 0; u < 8; ++u) {
        REQUIRE(dd.k_of[u][0] == 1);
        REQUIRE(dd.k_of[u][1] == 3);
        REQUIRE(dd.k_of[u][2] == 3);
        REQUIRE(dd.k_of[u][3] == 1);
    }
    REQUIRE(dd.k_bar[2] == Catch::Approx(3.0));
}

TEST_CASE("generators build the advertised graphs") {
    REQUIRE(cycle(5).size() == 5);
    REQUIRE(complete(6).size() == 15);
    REQUIRE(complete_bipartite(2, 3).size() == 6);
    REQUIRE(hypercube(4).order() == 16);
    REQUIRE(hypercube(4).size() == 32);
    REQUIRE(odd_graph(4).order() == 35);   // 3-subsets of a 7-set
    REQUIRE(odd_graph(4).size() == 70);
    REQUIRE(petersen().order() == 10);
    REQUIRE(petersen().size() == 15);

    Graph sp = strong_product(hypercube(3), complete(2));
    REQUIRE(sp.order() == 16);
    REQUIRE(distance_data(sp).regular);
    REQUIRE(distance_data(sp).valency == 7);

    Graph dbl = tensor_with_ones2(cycle(8));
    REQUIRE(dbl.order() == 16);
    REQUIRE(dbl.size() == 32);  // every edge lifts to four, so the valency doubles
    REQUIRE(distance_data(dbl).valency == 4);

    REQUIRE_THROWS_AS(cycle(2), format_error);
    REQUIRE_THROWS_AS(complete(0), format_error);
}
