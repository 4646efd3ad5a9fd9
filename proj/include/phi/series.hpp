#ifndef PHI_SERIES_HPP
#define PHI_SERIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "phi/bigint.hpp"

namespace phi {

struct NotAUnit : std::runtime_error {
    NotAUnit() : std::runtime_error("invert_unit: constant coefficient is not +1 or -1") {}
};

// Element of Z[[q]] / q^(N+1) with exact integer coefficients.
// Values are immutable in spirit: operations return fresh series and never
// mutate their inputs, so sharing across threads is safe.
//
// Mixed-order arithmetic truncates to the smaller order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = BigInt(1);
        return s;
    }
    // c * q^k, with terms beyond the order silently dropped.
    static TruncatedSeries monomial(int order, int k, const BigInt& c) {
        TruncatedSeries s(order);
        if (k >= 0 && k <= order) s.coeffs_[static_cast<size_t>(k)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    void set_coeff(int k, BigInt v) { coeffs_[static_cast<size_t>(k)] = std::move(v); }
    void add_coeff(int k, const BigInt& v) { coeffs_[static_cast<size_t>(k)] += v; }

    bool is_zero() const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries truncated(int order) const;

    friend TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
    friend TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
    friend TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);
    TruncatedSeries operator-() const;

    // In-place accumulate of t * q^shift, truncating whatever falls off the end.
    void add_shifted(const TruncatedSeries& t, int shift);

    // Inverse series; requires constant coefficient +1 or -1, else NotAUnit.
    TruncatedSeries inverted() const;

    TruncatedSeries pow(int e) const;

    // {"order": N, "coeffs": ["c0", ...]} with decimal-string coefficients.
    std::string to_json() const;
    static TruncatedSeries from_json(const std::string& text);

    // "k,coefficient" lines.
    std::string to_csv() const;
    // Sign-separated polynomial, e.g. "1 - 3q + 3q^2 + 4q^3".
    std::string to_text() const;

private:
    std::vector<BigInt> coeffs_;
};

TruncatedSeries invert_unit(const TruncatedSeries& s);

// Product truncated to the given order, which must not exceed either input
// order. Lets callers work at a reduced order without re-truncating inputs.
TruncatedSeries mul_trunc(const TruncatedSeries& s, const TruncatedSeries& t, int order);

// (q)_inf = prod_{n>=1} (1 - q^n) mod q^(N+1); sparse by the pentagonal
// number theorem, expanded here as a plain product.
TruncatedSeries euler_infinity(int order);

// (q)_n = prod_{k=1..n} (1 - q^k) mod q^(N+1).
TruncatedSeries pochhammer(int n, int order);

// h_b(q) = sum_{n in Z} eps_b(n) q^(b/2*n(n+1) - n): unary theta for odd b,
// false theta for even b. h_1 = 0, h_2 = 1, h_3 = (q)_inf.
TruncatedSeries theta_h(int b, int order);

}  // namespace phi

#endif
