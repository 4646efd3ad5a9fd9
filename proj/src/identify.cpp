#include "phi/identify.hpp"

#include <json.hpp>

namespace phi {

std::string IdentifyResult::to_json() const {
    nlohmann::json j;
    j["status"] = found ? "found" : "not_found";
    j["factors"] = factors;
    j["verified_order"] = verified_order;
    return j.dump();
}

namespace {

struct Search {
    int order;
    int b_max;
    std::vector<TruncatedSeries> inv_h;  // index b, valid from 3
    std::vector<int> chosen;

    // Every h_b (b >= 3) starts 1 - q + ..., so a product of m factors has
    // q-coefficient exactly -m: the first coefficient of the remainder pins
    // how many factors are still required.
    bool dfs(const TruncatedSeries& rem, int min_b, int budget, IdentifyResult& out) {
        BigInt c1 = order >= 1 ? rem.coeff(1) : BigInt(0);
        long long needed = 0;
        if (!c1.is_zero()) {
            if (!c1.fits_int64()) return false;
            needed = -c1.to_int64();
        }
        if (needed == 0) {
            if (rem == TruncatedSeries::one(order)) {
                out.found = true;
                out.factors = chosen;
                return true;
            }
            return false;
        }
        if (needed < 0 || needed > budget) return false;
        for (int b = min_b; b <= b_max; ++b) {
            chosen.push_back(b);
            if (dfs(mul(rem, inv_h[static_cast<size_t>(b)]), b, static_cast<int>(needed) - 1, out))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

IdentifyResult identify_theta_product(const TruncatedSeries& s, int max_factors, int b_max) {
    if (s.coeff(0) != BigInt(1))
        throw BadConstantTerm("identify: constant coefficient must be 1, got " + s.coeff(0).to_string());
    Search se;
    se.order = s.order();
    se.b_max = b_max;
    se.inv_h.reserve(static_cast<size_t>(b_max) + 1);
    for (int b = 0; b <= b_max; ++b)
        se.inv_h.push_back(b >= 3 ? theta_h(b, se.order).inverted() : TruncatedSeries::one(se.order));
    IdentifyResult out;
    out.verified_order = se.order;
    se.dfs(s, 3, max_factors, out);
    return out;
}

bool verify_product(const TruncatedSeries& s, const std::vector<int>& factors) {
    TruncatedSeries p = TruncatedSeries::one(s.order());
    for (int b : factors) p = mul(p, theta_h(b, s.order()));
    return p == s;
}

}  // namespace phi
