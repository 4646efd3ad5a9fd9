// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failures. Each check is exact integer equality at the stated order.
#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "phi/catalog.hpp"
#include "phi/engine.hpp"
#include "phi/identify.hpp"
#include "phi/plane_graph.hpp"
#include "phi/series.hpp"
#include "phi/verify.hpp"

using namespace phi;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what, const std::string& detail = "") {
    std::cout << "criterion " << criterion << (pass ? " PASS: " : " FAIL: ") << what;
    if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!pass) ++failures;
}

bool all_pass(const std::vector<CheckResult>& rs, std::string& detail) {
    for (const auto& r : rs)
        if (!r.pass) {
            detail = r.name + ": " + r.detail;
            return false;
        }
    return true;
}

TruncatedSeries one_minus_q(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    s.set_coeff(1, BigInt(-1));
    return s;
}

AdmissibleState random_state(const PlaneGraph& g, std::mt19937& rng) {
    std::set<std::string> outer(g.outer_face.begin(), g.outer_face.end());
    AdmissibleState s;
    std::uniform_int_distribution<int> db(-2, 4);
    for (const auto& v : g.vertices) {
        int val = db(rng);
        if (outer.count(v) && val < 0) val = -val;
        s.b[v] = val;
    }
    s.b[g.root] = 0;
    std::uniform_int_distribution<int> da(0, 3);
    for (const auto& f : g.bounded_faces) {
        long long bbar = s.b.at(f[0]);
        for (const auto& v : f) bbar = std::min(bbar, s.b.at(v));
        s.a.push_back(-bbar + da(rng));
    }
    return s;
}

}  // namespace

int main() {
    std::string detail;

    // 1. Golden table: all 21 coefficients for the 11 irreducible graphs.
    try {
        bool ok = all_pass(suite_golden_table(20), detail);
        report(1, ok, "golden 21-term table, 11 graphs, order 20", detail);
    } catch (const std::exception& e) {
        report(1, false, "golden 21-term table", e.what());
    }

    // 2. Theorem prefix (1, c1-c2-1, ((c1-c2)^2 - 2c3 - c1 + c2)/2).
    try {
        bool ok = all_pass(suite_theorem1(2), detail);
        report(2, ok, "coefficient formulas q^0..q^2 on every catalog graph", detail);
    } catch (const std::exception& e) {
        report(2, false, "coefficient formulas q^0..q^2", e.what());
    }

    // 3. Oracle equivalence at order 6 (catalog graphs with <= 8 edges).
    try {
        bool ok = all_pass(suite_oracle(6), detail);
        report(3, ok, "pruned engine equals brute-force oracle at order 6", detail);
    } catch (const std::exception& e) {
        report(3, false, "oracle equivalence", e.what());
    }

    // 4. Special values at order 50 and the pentagonal prefix.
    try {
        bool ok = compute_phi(polygon(2), 50) == TruncatedSeries::one(50);
        ok = ok && compute_phi(polygon(3), 50) == euler_infinity(50);
        const long long penta[] = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
        TruncatedSeries e = euler_infinity(15);
        for (int k = 0; k <= 15; ++k) ok = ok && e.coeff(k) == BigInt(penta[k]);
        report(4, ok, "P2 -> 1 and P3 -> (q)_inf at order 50; pentagonal prefix");
    } catch (const std::exception& e) {
        report(4, false, "special values", e.what());
    }

    // 5. Product law Phi_{G.P_r} = Phi_G h_r at order 15.
    try {
        bool ok = all_pass(suite_products(15), detail);
        report(5, ok, "edge-connected polygon products at order 15", detail);
    } catch (const std::exception& e) {
        report(5, false, "product law", e.what());
    }

    // 6. Flype fixture: two distinct graphs, identical series = h4 h3^2.
    TruncatedSeries triple_series = TruncatedSeries::one(20);
    try {
        TruncatedSeries g1 = compute_phi(catalog("G1_triple"), 20);
        TruncatedSeries g2 = compute_phi(catalog("G2_triple"), 20);
        TruncatedSeries prod = mul(theta_h(4, 20), mul(theta_h(3, 20), theta_h(3, 20)));
        bool distinct = canonical_form(catalog("G1_triple")) != canonical_form(catalog("G2_triple"));
        bool ok = distinct && g1 == g2 && g1 == prod;
        triple_series = g1;
        report(6, ok, "flype pair gives one series equal to h4*h3^2 at order 20");
    } catch (const std::exception& e) {
        report(6, false, "flype fixture", e.what());
    }

    // 7. S-identity for r in {3,4,5}, b_last in {0,1,2}, order 10.
    try {
        bool ok = all_pass(suite_sbb(10), detail);
        report(7, ok, "iterated-sum identity S(b,0) = (q)_inf^{1-r} h_r", detail);
    } catch (const std::exception& e) {
        report(7, false, "S-identity", e.what());
    }

    // 8. TQFT relation (1-q) Phi^TQFT = Phi at order 15 for three graphs.
    try {
        bool ok = true;
        for (const char* name : {"P3", "G6_2", "G8_2"}) {
            PlaneGraph g = catalog(name);
            ok = ok && mul(one_minus_q(15), compute_phi_tqft(g, 15)) == compute_phi(g, 15);
        }
        report(8, ok, "(1-q) * unreduced series equals reduced series at order 15");
    } catch (const std::exception& e) {
        report(8, false, "TQFT relation", e.what());
    }

    // 9. Identification: recover {3,3,4}; 8_5's series stays unidentified.
    try {
        IdentifyResult found = identify_theta_product(triple_series, 6, 14);
        IdentifyResult nf = identify_theta_product(compute_phi(catalog("G8_7"), 20), 5, 12);
        bool ok = found.found && found.factors == std::vector<int>{3, 3, 4} && !nf.found;
        report(9, ok, "theta-product search: found {3,3,4} / not_found for G8_7");
    } catch (const std::exception& e) {
        report(9, false, "identification", e.what());
    }

    // 10. Optional 9-edge tier: printed prefixes through q^5.
    try {
        bool ok = true;
        std::string d;
        for (const auto& [name, row] : golden_prefix_9edge()) {
            TruncatedSeries s = compute_phi(catalog(name), 5);
            for (int k = 0; k <= 5; ++k)
                if (s.coeff(k) != BigInt(row[static_cast<size_t>(k)])) {
                    ok = false;
                    d = name + " q^" + std::to_string(k);
                }
        }
        report(10, ok, "9-edge trio prefixes through q^5", d);
    } catch (const std::exception& e) {
        report(10, false, "9-edge prefixes", e.what());
    }

    // 11. Property suites: the parity and nonnegativity assertions are live
    // in every run above (they throw on violation); exercised again here on
    // random admissible states, plus presentation invariance and worker
    // determinism.
    try {
        bool ok = true;
        std::mt19937 rng(2024);
        for (const auto& name : catalog_names()) {
            PlaneGraph g = catalog(name);
            for (int t = 0; t < 200; ++t) {
                AdmissibleState s = random_state(g, rng);
                for (long long term : eval_A_decomposed(g, s))
                    ok = ok && term >= 0;
                ok = ok && (eval_A(g, s) + eval_B(g, s)) % 2 == 0;
            }
        }
        for (const char* name : {"G6_1", "G7_2", "G8_2"}) {
            PlaneGraph g = catalog(name);
            TruncatedSeries base = compute_phi(g, 10);
            PlaneGraph moved = g;
            std::rotate(moved.outer_face.begin(), moved.outer_face.begin() + 1, moved.outer_face.end());
            std::reverse(moved.bounded_faces[0].begin(), moved.bounded_faces[0].end());
            moved.root = moved.outer_face[0];
            ok = ok && compute_phi(moved, 10) == base;
            ok = ok && compute_phi(g, 10, 4) == base;
        }
        report(11, ok, "parity/nonnegativity, presentation invariance, jobs in {1,4}");
    } catch (const std::exception& e) {
        report(11, false, "property suites", e.what());
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << std::endl;
    return failures;
}
