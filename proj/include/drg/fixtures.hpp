#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include <json.hpp>

namespace drg {

// reads an edge-list file; a sidecar <path>.meta.json, when present, pins the
// expected order and size so a corrupted fixture fails at load
inline Graph load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open fixture: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string name = std::filesystem::path(path).stem().string();
    Graph g = parse_edge_list(buf.str(), name);

    const std::string meta_path = path + ".meta.json";
    std::ifstream meta(meta_path);
    if (meta) {
        nlohmann::json j = nlohmann::json::parse(meta, nullptr, true, true);
        if (j.contains("name")) g.set_name(j["name"].get<std::string>());
        if (j.contains("n") && j["n"].get<int>() != g.order())
            throw consistency_error(path + ": expected n=" + j["n"].dump() + ", got " +
                                    std::to_string(g.order()));
        if (j.contains("e") && j["e"].get<int>() != g.size())
            throw consistency_error(path + ": expected e=" + j["e"].dump() + ", got " +
                                    std::to_string(g.size()));
    }
    return g;
}

inline std::string default_fixture_dir() {
    if (const char* env = std::getenv("DRG_DATA_DIR")) return env;
    if (std::filesystem::exists("data/fixtures")) return "data/fixtures";
#ifdef DRG_SOURCE_ROOT
    return std::string(DRG_SOURCE_ROOT) + "/data/fixtures";
#else
    return "data/fixtures";
#endif
}

namespace detail {

inline bool spectra_match(const Spectrum& a, const Spectrum& b, const ToleranceConfig& tol) {
    if (a.n != b.n || a.d() != b.d()) return false;
    const double t = tol.eig_threshold(std::max(a.lambda0(), b.lambda0()), a.n);
    for (int i = 0; i <= a.d(); ++i)
        if (a.mult[i] != b.mult[i] || std::abs(a.distinct[i] - b.distinct[i]) > t) return false;
    return true;
}

} // namespace detail

// self-proving fixture: must be connected, bipartite, cospectral with the
// 4-cube, and not distance-regular
inline Graph hoffman_graph(const std::string& dir = default_fixture_dir()) {
    Graph g = load_fixture(dir + "/hoffman.el");
    const ToleranceConfig tol;
    DistanceData dd = distance_data(g);
    if (!dd.connected) throw consistency_error("hoffman fixture: not connected");
    if (!dd.bipartite) throw consistency_error("hoffman fixture: not bipartite");
    Spectrum s = analyze_spectrum(g, tol);
    Spectrum cube = analyze_spectrum(hypercube(4), tol);
    if (!detail::spectra_match(s, cube, tol))
        throw consistency_error("hoffman fixture: not cospectral with hypercube(4)");
    PairTables t = pairwise_intersection(g, dd);
    std::vector<LevelProfile> prof = level_profiles(t, dd);
    if (oracle_drg(g, dd, t, prof).is_drg)
        throw consistency_error("hoffman fixture: unexpectedly distance-regular");
    return g;
}

// self-proving fixture: the oracle must certify distance-regularity with
// intersection array {6,5,2;1,1,3}
inline Graph perkel_graph(const std::string& dir = default_fixture_dir()) {
    Graph g = load_fixture(dir + "/perkel.el");
    DistanceData dd = distance_data(g);
    if (!dd.connected) throw consistency_error("perkel fixture: not connected");
    PairTables t = pairwise_intersection(g, dd);
    std::vector<LevelProfile> prof = level_profiles(t, dd);
    OracleVerdict o = oracle_drg(g, dd, t, prof);
    if (!o.is_drg || o.array_b != std::vector<int>{6, 5, 2} ||
        o.array_c != std::vector<int>{1, 1, 3})
        throw consistency_error("perkel fixture: intersection array mismatch");
    return g;
}

// families accepted by the CLI generate command and the self-test corpus
inline Graph build_named(const std::string& family, const std::string& params) {
    auto ints = [&params]() {
        std::vector<int> out;
        std::stringstream ss(params);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(std::stoi(tok));
        return out;
    };
    if (family == "petersen") return petersen();
    if (family == "fixture") return load_fixture(params);
    const std::vector<int> p = ints();
    auto need = [&](size_t k) {
        if (p.size() != k)
            throw format_error("family " + family + " expects " + std::to_string(k) +
                               " integer parameter(s)");
    };
    if (family == "cycle") { need(1); return cycle(p[0]); }
    if (family == "complete") { need(1); return complete(p[0]); }
    if (family == "complete_bipartite") { need(2); return complete_bipartite(p[0], p[1]); }
    if (family == "hypercube") { need(1); return hypercube(p[0]); }
    if (family == "odd_graph") { need(1); return odd_graph(p[0]); }
    throw format_error("unknown family: " + family +
                       " (known: cycle, complete, complete_bipartite, hypercube, odd_graph, "
                       "petersen, fixture)");
}

} // namespace drg
