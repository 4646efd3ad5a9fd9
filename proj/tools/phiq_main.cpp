#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "phi/cache.hpp"
#include "phi/catalog.hpp"
#include "phi/engine.hpp"
#include "phi/identify.hpp"
#include "phi/plane_graph.hpp"
#include "phi/series.hpp"
#include "phi/verify.hpp"

namespace {

constexpr int kExitBadGraph = 2;
constexpr int kExitEngine = 3;
constexpr int kExitNotFound = 4;

phi::PlaneGraph load_graph(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) return phi::catalog(spec.substr(8));
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in.good()) throw phi::GraphError("cannot open graph file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return phi::graph_from_json(ss.str());
    }
    throw phi::GraphError("graph must be catalog:NAME or file:PATH, got '" + spec + "'");
}

void print_series(const phi::TruncatedSeries& s, const std::string& format) {
    if (format == "json")
        std::cout << s.to_json() << "\n";
    else if (format == "csv")
        std::cout << s.to_csv();
    else
        std::cout << s.to_text() << "\n";
}

void print_stats(const phi::EngineStats& st) {
    for (size_t d = 0; d < st.states.size(); ++d)
        std::cerr << "depth=" << d << " states=" << st.states[d] << " pruned=" << st.pruned[d] << "\n";
}

int cmd_compute(const std::string& graph_spec, int order, const std::string& format,
                const std::string& mode, int jobs, bool no_cache) {
    phi::PlaneGraph g;
    try {
        g = load_graph(graph_spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
    try {
        std::string key;
        phi::ResultCache cache;
        if (!no_cache) {
            key = phi::canonical_form(phi::reduce(g));
            if (auto hit = cache.lookup(key, order, mode)) {
                print_series(phi::TruncatedSeries::from_json(*hit), format);
                return 0;
            }
        }
        phi::EngineStats stats;
        phi::TruncatedSeries s = mode == "tqft" ? phi::compute_phi_tqft(g, order, jobs)
                                                : phi::compute_phi(g, order, jobs, &stats);
        print_stats(stats);
        if (!no_cache) cache.store(key, order, mode, s.to_json());
        print_series(s, format);
        return 0;
    } catch (const phi::EngineError& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return kExitEngine;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
}

int cmd_oracle(const std::string& graph_spec, int order, const std::string& format, long long budget) {
    phi::PlaneGraph g;
    try {
        g = load_graph(graph_spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
    try {
        print_series(phi::compute_phi_oracle(g, order, budget), format);
        return 0;
    } catch (const phi::EngineError& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return kExitEngine;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
}

int cmd_verify(const std::string& suite, int order) {
    std::vector<phi::CheckResult> results;
    try {
        results = phi::run_suite(suite, order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all &= r.pass;
    }
    return all ? 0 : 1;
}

int cmd_identify(const std::string& graph_spec, const std::string& series_spec, int order,
                 int max_factors, int b_max) {
    try {
        phi::TruncatedSeries s = phi::TruncatedSeries::one(0);
        if (!series_spec.empty()) {
            if (series_spec.rfind("file:", 0) != 0)
                throw std::invalid_argument("--series must be file:PATH");
            std::string path = series_spec.substr(5);
            std::ifstream in(path);
            if (!in.good()) throw std::invalid_argument("cannot open series file '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            s = phi::TruncatedSeries::from_json(ss.str());
        } else {
            s = phi::compute_phi(load_graph(graph_spec), order);
        }
        phi::IdentifyResult r = phi::identify_theta_product(s, max_factors, b_max);
        std::cout << r.to_json() << "\n";
        if (!r.found)
            std::cerr << "no theta product within max_factors=" << max_factors << " b_max=" << b_max
                      << " up to order " << r.verified_order << "\n";
        return r.found ? 0 : kExitNotFound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
}

int cmd_catalog(const std::string& name) {
    try {
        if (name.empty()) {
            for (const auto& n : phi::catalog_names()) std::cout << n << "\n";
        } else {
            std::cout << phi::to_json(phi::catalog(name)) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadGraph;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable q-series of rooted plane graphs"};
    app.require_subcommand(1);

    std::string graph_spec, series_spec, format = "text", mode = "reduced", suite, name;
    int order = 20, jobs = 1, max_factors = 6, b_max = 14;
    long long budget = 2000000000LL;
    bool no_cache = false;

    auto* compute = app.add_subcommand("compute", "compute the series of a graph");
    compute->add_option("--graph", graph_spec, "catalog:NAME or file:PATH")->required();
    compute->add_option("--order", order, "truncation order (default 20)");
    compute->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    compute->add_option("--mode", mode, "reduced|tqft")->check(CLI::IsMember({"reduced", "tqft"}));
    compute->add_option("--jobs", jobs, "worker threads");
    compute->add_flag("--no-cache", no_cache, "skip the result cache");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "theorem1|golden-table|products|oracle|sbb|all")->required();
    int verify_order = 0;
    verify->add_option("--order", verify_order, "override the suite's default order");

    auto* identify = app.add_subcommand("identify", "search for a theta product");
    identify->add_option("--graph", graph_spec, "catalog:NAME or file:PATH");
    identify->add_option("--series", series_spec, "file:PATH with series json");
    identify->add_option("--order", order, "truncation order for --graph input");
    identify->add_option("--max-factors", max_factors, "factor budget");
    identify->add_option("--b-max", b_max, "largest theta index");

    auto* oracle = app.add_subcommand("oracle", "brute-force series (small orders)");
    oracle->add_option("--graph", graph_spec, "catalog:NAME or file:PATH")->required();
    int oracle_order = 6;
    oracle->add_option("--order", oracle_order, "truncation order (default 6)");
    oracle->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    oracle->add_option("--budget", budget, "box point budget");

    auto* catalog_cmd = app.add_subcommand("catalog", "list or dump catalog graphs");
    catalog_cmd->add_option("--name", name, "dump one graph as json");

    CLI11_PARSE(app, argc, argv);

    if (compute->parsed()) return cmd_compute(graph_spec, order, format, mode, jobs, no_cache);
    if (verify->parsed()) return cmd_verify(suite, verify_order);
    if (identify->parsed()) {
        if (graph_spec.empty() && series_spec.empty()) {
            std::cerr << "error: identify needs --graph or --series\n";
            return kExitBadGraph;
        }
        return cmd_identify(graph_spec, series_spec, order, max_factors, b_max);
    }
    if (oracle->parsed()) return cmd_oracle(graph_spec, oracle_order, format, budget);
    if (catalog_cmd->parsed()) return cmd_catalog(name);
    return 0;
}
