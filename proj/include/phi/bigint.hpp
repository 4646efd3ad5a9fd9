#ifndef PHI_BIGINT_HPP
#define PHI_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace phi {

// Signed arbitrary-precision integer, sign/magnitude with base-1e9 limbs.
// Series coefficients must stay exact well past 2^53, so everything here
// is integer-only; no floating point anywhere.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    // Throws std::overflow_error if the value does not fit.
    long long to_int64() const;
    bool fits_int64() const;

    std::string to_string() const;

private:
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void trim();

    static constexpr uint32_t kBase = 1000000000u;
    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> mag_;    // little-endian base-1e9 digits, empty iff zero
};

}  // namespace phi

#endif
