#include "phi/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <json.hpp>

namespace phi {

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order >= this->order()) {
        TruncatedSeries r = *this;
        r.coeffs_.resize(static_cast<size_t>(order) + 1);
        return r;
    }
    TruncatedSeries r(order);
    for (int k = 0; k <= order; ++k) r.coeffs_[static_cast<size_t>(k)] = coeffs_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
    int n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<size_t>(k)] = s.coeff(k) + t.coeff(k);
    return r;
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
    int n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[static_cast<size_t>(k)] = s.coeff(k) - t.coeff(k);
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[static_cast<size_t>(k)] = -coeff(k);
    return r;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    int n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (s.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (t.coeff(j).is_zero()) continue;
            r.coeffs_[static_cast<size_t>(i + j)] += s.coeff(i) * t.coeff(j);
        }
    }
    return r;
}

TruncatedSeries mul_trunc(const TruncatedSeries& s, const TruncatedSeries& t, int order) {
    if (order > s.order() || order > t.order())
        throw std::invalid_argument("mul_trunc: order exceeds an input order");
    TruncatedSeries r(order);
    for (int i = 0; i <= order; ++i) {
        if (s.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (t.coeff(j).is_zero()) continue;
            r.add_coeff(i + j, s.coeff(i) * t.coeff(j));
        }
    }
    return r;
}

void TruncatedSeries::add_shifted(const TruncatedSeries& t, int shift) {
    for (int k = 0; k + shift <= order() && k <= t.order(); ++k)
        coeffs_[static_cast<size_t>(k + shift)] += t.coeff(k);
}

TruncatedSeries TruncatedSeries::inverted() const {
    const BigInt& c0 = coeff(0);
    bool plus = c0 == BigInt(1);
    bool minus = c0 == BigInt(-1);
    if (!plus && !minus) throw NotAUnit();
    // t_0 = 1/c0; t_n = -1/c0 * sum_{k=1..n} c_k t_{n-k}.
    TruncatedSeries t(order());
    t.coeffs_[0] = c0;
    for (int n = 1; n <= order(); ++n) {
        BigInt acc;
        for (int k = 1; k <= n; ++k) {
            if (coeff(k).is_zero()) continue;
            acc += coeff(k) * t.coeff(n - k);
        }
        t.coeffs_[static_cast<size_t>(n)] = plus ? -acc : acc;
    }
    return t;
}

TruncatedSeries invert_unit(const TruncatedSeries& s) { return s.inverted(); }

TruncatedSeries TruncatedSeries::pow(int e) const {
    TruncatedSeries r = one(order());
    TruncatedSeries base = *this;
    int k = e;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

TruncatedSeries euler_infinity(int order) {
    TruncatedSeries r = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        // r *= (1 - q^n), done in place right-to-left.
        TruncatedSeries next(order);
        for (int k = 0; k <= order; ++k) {
            BigInt v = r.coeff(k);
            if (k >= n) v -= r.coeff(k - n);
            next.set_coeff(k, std::move(v));
        }
        r = std::move(next);
    }
    return r;
}

TruncatedSeries pochhammer(int n, int order) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative index");
    TruncatedSeries r = TruncatedSeries::one(order);
    for (int j = 1; j <= n && j <= order; ++j) {
        TruncatedSeries next(order);
        for (int k = 0; k <= order; ++k) {
            BigInt v = r.coeff(k);
            if (k >= j) v -= r.coeff(k - j);
            next.set_coeff(k, std::move(v));
        }
        r = std::move(next);
    }
    return r;
}

TruncatedSeries theta_h(int b, int order) {
    if (b < 1) throw std::invalid_argument("theta_h: b must be >= 1");
    TruncatedSeries r(order);
    auto exponent = [&](long long n) {
        // b/2 * n(n+1) - n; n(n+1) is even so this is an integer for all b.
        long long m = n * (n + 1);
        assert(m % 2 == 0);
        return b * (m / 2) - n;
    };
    for (long long n = 0;; ++n) {
        long long e = exponent(n);
        if (e > order) break;
        int eps = (b % 2 == 1) ? (n % 2 == 0 ? 1 : -1) : 1;
        r.add_coeff(static_cast<int>(e), BigInt(eps));
    }
    for (long long n = -1;; --n) {
        long long e = exponent(n);
        if (e > order) break;
        int eps = (b % 2 == 1) ? (((-n) % 2 == 0) ? 1 : -1) : -1;
        r.add_coeff(static_cast<int>(e), BigInt(eps));
    }
    return r;
}

std::string TruncatedSeries::to_json() const {
    nlohmann::json j;
    j["order"] = order();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(c.to_string());
    j["coeffs"] = std::move(arr);
    return j.dump();
}

TruncatedSeries TruncatedSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int order = j.at("order").get<int>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1)
        throw std::invalid_argument("series json: coeffs must have order+1 entries");
    TruncatedSeries s(order);
    for (int k = 0; k <= order; ++k) s.coeffs_[static_cast<size_t>(k)] = BigInt(arr[static_cast<size_t>(k)].get<std::string>());
    return s;
}

std::string TruncatedSeries::to_csv() const {
    std::ostringstream os;
    for (int k = 0; k <= order(); ++k) os << k << "," << coeff(k).to_string() << "\n";
    return os.str();
}

std::string TruncatedSeries::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const BigInt& c = coeff(k);
        if (c.is_zero()) continue;
        BigInt a = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        std::string mag = a.to_string();
        if (k == 0) {
            os << mag;
        } else {
            if (mag != "1") os << mag;
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace phi
