#include "phi/verify.hpp"

#include <sstream>
#include <stdexcept>

#include "phi/catalog.hpp"
#include "phi/engine.hpp"
#include "phi/plane_graph.hpp"
#include "phi/series.hpp"

namespace phi {

const std::map<std::string, std::vector<long long>>& golden_series_21() {
    static const std::map<std::string, std::vector<long long>> table = {
        {"G6_1", {1, -3, -1, 5, 3, 3, -7, -5, -8, -6, 6, 7, 12, 15, 16, -3, -1, -15, -21, -31, -30}},
        {"G6_2", {1, -2, 1, 3, -2, -2, -3, 3, 4, 1, 3, -6, -5, -3, 0, 1, 7, 9, 3, 0, -6}},
        {"G7_1", {1, -3, 1, 5, -3, -3, -6, 6, 8, 3, 6, -13, -14, -9, -1, 3, 21, 27, 14, 3, -17}},
        {"G7_2", {1, -2, 1, 1, -3, 1, 1, 3, -2, -4, 1, 0, 4, 5, -2, -5, -4, -2, -2, 5, 8}},
        {"G8_1", {1, -4, 2, 9, -5, -8, -14, 10, 21, 14, 19, -29, -42, -42, -20, 3, 64, 104, 88, 55, -25}},
        {"G8_2", {1, -3, 3, 4, -8, -2, 2, 12, 3, -15, -4, -14, 10, 25, 15, 0, -18, -22, -39, -12, 19}},
        {"G8_3", {1, -3, 1, 3, -3, 3, 0, 4, -6, -10, 1, -1, 9, 13, 3, -9, -3, -6, -4, 5, 13}},
        {"G8_4", {1, -3, 2, 3, -6, 1, 2, 8, -3, -13, 0, -3, 13, 19, 1, -15, -20, -16, -13, 15, 37}},
        {"G8_5", {1, -3, 3, 5, -8, -5, -1, 15, 12, -8, -7, -31, -11, 14, 30, 35, 27, 8, -48, -66, -72}},
        {"G8_6", {1, -2, 1, 1, -1, 2, -2, -1, -2, 2, 5, -1, -1, -3, -2, 0, 5, 0, -2, -1, -1}},
        {"G8_7", {1, -2, 1, 0, -2, 3, 0, 0, -3, 1, 4, -1, -2, -2, -3, 3, 7, 2, -4, -4, -4}},
    };
    return table;
}

const std::map<std::string, std::vector<long long>>& golden_prefix_9edge() {
    static const std::map<std::string, std::vector<long long>> table = {
        {"G9_10", {1, -3, 3, 2, -7, 3}},
        {"G9_12", {1, -3, 3, 1, -7, 6}},
        {"G9_16", {1, -3, 3, 1, -8, 6}},
    };
    return table;
}

namespace {

bool matches_prefix(const TruncatedSeries& s, const std::vector<long long>& expect) {
    for (size_t k = 0; k < expect.size(); ++k) {
        if (static_cast<int>(k) > s.order()) return false;
        if (s.coeff(static_cast<int>(k)) != BigInt(expect[k])) return false;
    }
    return true;
}

std::string mismatch_detail(const TruncatedSeries& s, const std::vector<long long>& expect) {
    for (size_t k = 0; k < expect.size(); ++k) {
        if (static_cast<int>(k) > s.order()) return "series too short";
        if (s.coeff(static_cast<int>(k)) != BigInt(expect[k])) {
            std::ostringstream os;
            os << "q^" << k << ": got " << s.coeff(static_cast<int>(k)).to_string() << ", expected "
               << expect[k];
            return os.str();
        }
    }
    return "";
}

}  // namespace

std::vector<CheckResult> suite_theorem1(int order) {
    if (order < 2) order = 2;
    std::vector<CheckResult> out;
    for (const auto& name : catalog_names()) {
        PlaneGraph g = catalog(name);
        auto expect = theorem1_prefix(g);
        TruncatedSeries phi = compute_phi(g, order);
        bool ok = phi.coeff(0) == BigInt(expect[0]) && phi.coeff(1) == BigInt(expect[1]) &&
                  phi.coeff(2) == BigInt(expect[2]);
        std::ostringstream detail;
        if (!ok)
            detail << "expected (" << expect[0] << "," << expect[1] << "," << expect[2] << "), got ("
                   << phi.coeff(0).to_string() << "," << phi.coeff(1).to_string() << ","
                   << phi.coeff(2).to_string() << ")";
        out.push_back({"theorem1 " + name, ok, detail.str()});
    }
    return out;
}

std::vector<CheckResult> suite_golden_table(int order) {
    if (order <= 0) order = 20;
    std::vector<CheckResult> out;
    for (const auto& [name, expect] : golden_series_21()) {
        std::vector<long long> want(expect.begin(),
                                    expect.begin() + std::min<size_t>(expect.size(), static_cast<size_t>(order) + 1));
        TruncatedSeries phi = compute_phi(catalog(name), order);
        bool ok = matches_prefix(phi, want);
        out.push_back({"golden-table " + name, ok, ok ? "" : mismatch_detail(phi, want)});
    }
    return out;
}

std::vector<CheckResult> suite_products(int order) {
    if (order <= 0) order = 15;
    std::vector<CheckResult> out;
    for (const std::string base : {"P3", "P4"}) {
        for (int r : {3, 4, 5}) {
            PlaneGraph g = catalog(base);
            PlaneGraph pr = polygon(r);
            PlaneGraph glued = edge_connect(g, make_edge("v1", "v2"), pr, make_edge("v1", "v2"));
            TruncatedSeries lhs = compute_phi(glued, order);
            TruncatedSeries rhs = mul(compute_phi(g, order), theta_h(r, order));
            bool ok = lhs == rhs;
            out.push_back({"product " + base + "*P" + std::to_string(r), ok,
                           ok ? "" : "series differ: " + lhs.to_text() + " vs " + rhs.to_text()});
        }
    }
    return out;
}

std::vector<CheckResult> suite_oracle(int order) {
    if (order <= 0) order = 6;
    std::vector<CheckResult> out;
    for (const auto& name : catalog_names()) {
        PlaneGraph g = catalog(name);
        if (edge_list(g).size() > 8) continue;
        TruncatedSeries fast = compute_phi(g, order);
        TruncatedSeries slow = compute_phi_oracle(g, order);
        bool ok = fast == slow;
        out.push_back({"oracle " + name, ok,
                       ok ? "" : "engine " + fast.to_text() + " vs oracle " + slow.to_text()});
    }
    return out;
}

std::vector<CheckResult> suite_sbb(int order) {
    if (order <= 0) order = 10;
    std::vector<CheckResult> out;
    for (int r : {3, 4, 5}) {
        for (long long bl : {0, 1, 2}) {
            auto [lhs, rhs] = verify_sbb(r, bl, order);
            bool ok = lhs == rhs;
            out.push_back({"sbb r=" + std::to_string(r) + " b=" + std::to_string(bl), ok,
                           ok ? "" : "lhs " + lhs.to_text() + " vs rhs " + rhs.to_text()});
        }
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& name, int order) {
    if (name == "theorem1") return suite_theorem1(order > 0 ? order : 2);
    if (name == "golden-table") return suite_golden_table(order);
    if (name == "products") return suite_products(order);
    if (name == "oracle") return suite_oracle(order);
    if (name == "sbb") return suite_sbb(order);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* s : {"theorem1", "golden-table", "products", "oracle", "sbb"}) {
            auto part = run_suite(s, order);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace phi
