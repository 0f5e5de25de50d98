#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "criteria.hpp"
#include <json.hpp>

namespace drg {

// field names and order are a fixed external contract; ordered_json keeps
// serialization byte-deterministic
inline nlohmann::ordered_json report_to_json(const FullReport& r) {
    nlohmann::ordered_json j;
    j["graph"] = {{"name", r.name},
                  {"n", r.n},
                  {"e", r.e},
                  {"regular", r.dd.regular},
                  {"bipartite", r.dd.bipartite},
                  {"girth", r.dd.girth ? nlohmann::ordered_json(*r.dd.girth)
                                       : nlohmann::ordered_json(nullptr)},
                  {"odd_girth", r.dd.odd_girth ? nlohmann::ordered_json(*r.dd.odd_girth)
                                               : nlohmann::ordered_json(nullptr)},
                  {"diameter", r.dd.diameter}};
    j["spectrum"] = {{"distinct", r.spectrum.distinct}, {"mult", r.spectrum.mult}};
    j["presystem"] = {{"alpha", r.presystem.alpha},
                      {"beta", r.presystem.beta},
                      {"gamma", r.presystem.gamma},
                      {"p_lambda0", r.presystem.p_lambda0}};
    j["profiles"] = nlohmann::ordered_json::array();
    for (const LevelProfile& p : r.profiles) {
        nlohmann::ordered_json e;
        e["i"] = p.i;
        e["c_bar"] = p.c_bar;
        e["a_bar"] = p.a_bar;
        e["b_bar"] = p.b_bar;
        e["c_sq"] = p.c_sq;
        e["a_sq"] = p.a_sq;
        e["b_sq"] = p.b_sq;
        e["k_bar_i"] = p.k_bar_i;
        e["c_defined"] = p.c_defined;
        e["a_defined"] = p.a_defined;
        e["b_defined"] = p.b_defined;
        e["k_defined"] = p.k_defined;
        e["c_val"] = p.c_defined ? nlohmann::ordered_json(p.c_val) : nlohmann::ordered_json(nullptr);
        e["a_val"] = p.a_defined ? nlohmann::ordered_json(p.a_val) : nlohmann::ordered_json(nullptr);
        e["b_val"] = p.b_defined ? nlohmann::ordered_json(p.b_val) : nlohmann::ordered_json(nullptr);
        e["k_val"] = p.k_defined ? nlohmann::ordered_json(p.k_val) : nlohmann::ordered_json(nullptr);
        j["profiles"].push_back(e);
    }
    nlohmann::ordered_json o;
    o["is_drg"] = r.oracle.is_drg;
    o["max_pdr_level"] = r.oracle.max_pdr_level;
    o["witness"] = r.oracle.is_drg ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(r.oracle.witness);
    o["intersection_array"] =
        r.oracle.is_drg
            ? nlohmann::ordered_json({{"b", r.oracle.array_b}, {"c", r.oracle.array_c}})
            : nlohmann::ordered_json(nullptr);
    j["oracle"] = o;
    j["criteria"] = nlohmann::ordered_json::array();
    for (const CriterionResult& c : r.criteria) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["applicable"] = c.applicable;
        e["reason"] = c.reason;
        e["verdict"] = verdict_name(c.verdict);
        e["margins"] = c.margins;  // std::map: keys already sorted
        e["consistent"] = c.consistent;
        e["note"] = c.note;
        j["criteria"].push_back(e);
    }
    j["tolerances"] = {{"eig_cluster", r.tol_eig_effective},
                       {"eq_band", r.tol_eq},
                       {"residual", r.tol_residual_effective}};
    j["flags"] = r.flags;
    j["internal_consistency_ok"] = r.internal_consistency_ok;
    return j;
}

inline nlohmann::ordered_json error_record(const std::string& name, const std::string& what) {
    nlohmann::ordered_json j;
    j["graph"] = {{"name", name}};
    j["error"] = what;
    return j;
}

namespace detail {

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace detail

inline std::string text_report(const FullReport& r) {
    using detail::fmt;
    std::ostringstream out;
    out << "graph: " << r.name << "  (n=" << r.n << ", e=" << r.e << ")\n";
    out << "regular: " << (r.dd.regular ? "yes (k=" + std::to_string(r.dd.valency) + ")" : "no")
        << "   bipartite: " << (r.dd.bipartite ? "yes" : "no") << "   girth: "
        << (r.dd.girth ? std::to_string(*r.dd.girth) : "inf") << "   odd-girth: "
        << (r.dd.odd_girth ? std::to_string(*r.dd.odd_girth) : "inf")
        << "   diameter: " << r.dd.diameter << "\n";
    out << "spectrum:";
    for (int i = 0; i <= r.spectrum.d(); ++i)
        out << " " << fmt(r.spectrum.distinct[i]) << "^" << r.spectrum.mult[i];
    out << "   (d=" << r.spectrum.d() << ", D=" << r.dd.diameter << ")\n\n";

    out << "preintersection numbers:\n";
    out << "  i   gamma_i      alpha_i      beta_i       p_i(lambda0)\n";
    for (int i = 0; i <= r.presystem.d; ++i) {
        out << "  " << i << "   " << fmt(r.presystem.gamma[i]) << "\t" << fmt(r.presystem.alpha[i])
            << "\t" << (i < r.presystem.d ? fmt(r.presystem.beta[i]) : std::string("-")) << "\t"
            << fmt(r.presystem.p_lambda0[i]) << "\n";
    }
    out << "\nlevel profiles (averages over ordered pairs at distance i):\n";
    out << "  i   c_bar     a_bar     b_bar     k_bar     well-defined\n";
    for (const LevelProfile& p : r.profiles) {
        out << "  " << p.i << "   " << fmt(p.c_bar) << "\t" << fmt(p.a_bar) << "\t" << fmt(p.b_bar)
            << "\t" << fmt(p.k_bar_i) << "\t";
        out << (p.c_defined ? "c" : "-") << (p.a_defined ? "a" : "-") << (p.b_defined ? "b" : "-")
            << (p.k_defined ? "k" : "-") << "\n";
    }
    out << "\noracle: " << (r.oracle.is_drg ? "distance-regular" : "not distance-regular");
    out << "  (max partial level m*=" << r.oracle.max_pdr_level << ")\n";
    if (r.oracle.is_drg) {
        out << "  intersection array: {";
        for (size_t i = 0; i < r.oracle.array_b.size(); ++i)
            out << (i ? "," : "") << r.oracle.array_b[i];
        out << ";";
        for (size_t i = 0; i < r.oracle.array_c.size(); ++i)
            out << (i ? "," : "") << r.oracle.array_c[i];
        out << "}\n";
    } else {
        out << "  witness: " << r.oracle.witness << "\n";
    }
    out << "\ncriteria:\n";
    for (const CriterionResult& c : r.criteria) {
        out << "  [" << verdict_name(c.verdict) << "] " << c.id;
        if (!c.note.empty()) out << ": " << c.note;
        if (!c.consistent) out << "  (INCONSISTENT)";
        out << "\n";
    }
    if (!r.flags.empty()) {
        out << "\nflags:\n";
        for (const std::string& f : r.flags) out << "  " << f << "\n";
    }
    out << "\n";
    if (r.oracle.is_drg) {
        std::string ids;
        for (const CriterionResult& c : r.criteria)
            if (c.verdict == Verdict::certified) ids += (ids.empty() ? "" : ", ") + c.id;
        if (ids.empty()) ids = "none";
        out << "DISTANCE-REGULAR (oracle) — certified by: " << ids << "\n";
    } else {
        out << "NOT DISTANCE-REGULAR (oracle) — witness: " << r.oracle.witness << "\n";
    }
    return out.str();
}

} // namespace drg
