// drgcheck: decide distance-regularity from spectra and distance structure.
#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "drg/criteria.hpp"
#include "drg/fixtures.hpp"
#include "drg/report_json.hpp"
#include "drg/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFormat = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInconsistent = 4;

std::string read_all(const std::string& input) {
    if (input == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(input);
    if (!in) throw drg::format_error("cannot open input: " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// first nonempty line made of digits and blanks means edge list, else graph6
bool looks_like_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true, digits = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!std::isdigit(static_cast<unsigned char>(c)) &&
                !std::isspace(static_cast<unsigned char>(c)))
                digits = false;
        }
        if (!blank) return digits;
    }
    return false;
}

std::string first_nonempty_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (!trimmed.empty()) return trimmed;
    }
    throw drg::format_error("empty input");
}

struct Options {
    std::string input = "-";
    std::string format = "auto";
    std::string family, params;
    std::string output = "json";
    drg::ToleranceConfig tol;
    int jobs = 0;
};

drg::Graph load_graph(const Options& opt) {
    if (!opt.family.empty()) return drg::build_named(opt.family, opt.params);
    const std::string text = read_all(opt.input);
    std::string fmt = opt.format;
    if (fmt == "auto") fmt = looks_like_edgelist(text) ? "edgelist" : "graph6";
    if (fmt == "edgelist") return drg::parse_edge_list(text, opt.input == "-" ? "stdin" : opt.input);
    return drg::parse_graph6(first_nonempty_line(text), opt.input == "-" ? "stdin" : opt.input);
}

int cmd_analyze(const Options& opt) {
    const drg::Graph g = load_graph(opt);
    const drg::FullReport rep = drg::full_report(g, opt.tol);
    if (opt.output == "text") std::cout << drg::text_report(rep);
    else std::cout << drg::report_to_json(rep).dump(2) << "\n";
    return rep.internal_consistency_ok ? kExitOk : kExitInconsistent;
}

int cmd_batch(const Options& opt) {
    const std::string text = read_all(opt.input);
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
                line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }
    std::vector<std::string> results(lines.size());
    const int jobs = opt.jobs > 0 ? opt.jobs
                                  : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            const std::string name = "line " + std::to_string(i + 1);
            try {
                const drg::Graph g = drg::parse_graph6(lines[i], name);
                const drg::FullReport rep = drg::full_report(g, opt.tol);
                results[i] = drg::report_to_json(rep).dump();
            } catch (const std::exception& ex) {
                results[i] = drg::error_record(name, ex.what()).dump();
            }
        }
    };
    std::vector<std::thread> pool;
    const size_t nthreads = std::min<size_t>(jobs, std::max<size_t>(lines.size(), 1));
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (const std::string& r : results) std::cout << r << "\n";
    return kExitOk;
}

int cmd_generate(const Options& opt) {
    if (opt.family.empty()) throw drg::format_error("generate requires --family");
    const drg::Graph g = drg::build_named(opt.family, opt.params);
    if (opt.format == "graph6") std::cout << drg::encode_graph6(g) << "\n";
    else std::cout << drg::write_edge_list(g);
    return kExitOk;
}

int cmd_selftest(const Options& opt) {
    const std::vector<drg::AcceptanceRow> rows = drg::run_acceptance(opt.tol);
    std::cout << drg::acceptance_table(rows);
    for (const drg::AcceptanceRow& r : rows)
        if (!r.pass) return 1;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-regularity analyzer: spectra, predistance polynomials, "
                 "combinatorial oracle, certification criteria"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--input,-i", opt.input, "input path or - for stdin");
        cmd->add_option("--format", opt.format, "graph6|edgelist|auto")
            ->check(CLI::IsMember({"graph6", "edgelist", "auto"}));
        cmd->add_option("--output", opt.output, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--tol-eig", opt.tol.eig_cluster_scale, "eigenvalue clustering scale")
            ->envname("TOL_EIG");
        cmd->add_option("--tol-eq", opt.tol.eq_band, "equality band for criteria")
            ->envname("TOL_EQ");
        cmd->add_option("--tol-residual", opt.tol.residual_scale, "residual bound scale")
            ->envname("TOL_RESIDUAL");
        cmd->add_option("--jobs", opt.jobs, "parallel analyses in batch mode")->envname("JOBS");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one graph and print a report");
    add_common(analyze);
    analyze->add_option("--family", opt.family,
                        "named family: cycle, complete, complete_bipartite, hypercube, "
                        "odd_graph, petersen, fixture");
    analyze->add_option("--params", opt.params, "family parameters, comma-separated (or a path)");

    CLI::App* batch = app.add_subcommand("batch", "analyze newline-separated graph6 input");
    add_common(batch);

    CLI::App* generate = app.add_subcommand("generate", "emit a named graph");
    add_common(generate);
    generate->add_option("--family", opt.family, "family name")->required();
    generate->add_option("--params", opt.params, "family parameters");

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    add_common(selftest);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (batch->parsed()) return cmd_batch(opt);
        if (generate->parsed()) return cmd_generate(opt);
        return cmd_selftest(opt);
    } catch (const drg::format_error& ex) {
        std::cerr << "format error: " << ex.what() << "\n";
        return kExitFormat;
    } catch (const drg::unsupported_error& ex) {
        std::cerr << "unsupported input: " << ex.what() << "\n";
        return kExitUnsupported;
    } catch (const drg::consistency_error& ex) {
        std::cerr << "internal consistency failure: " << ex.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInconsistent;
    }
}
