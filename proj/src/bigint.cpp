#include "phi/bigint.hpp"

#include <stdexcept>

namespace phi {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u % kBase));
        u /= kBase;
    }
}

BigInt::BigInt(const std::string& decimal) {
    size_t i = 0;
    int s = 1;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        if (decimal[i] == '-') s = -1;
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("BigInt: empty decimal string");
    for (size_t k = i; k < decimal.size(); ++k)
        if (decimal[k] < '0' || decimal[k] > '9')
            throw std::invalid_argument("BigInt: bad decimal string '" + decimal + "'");
    // Parse in 9-digit chunks from the right.
    for (size_t end = decimal.size(); end > i;) {
        size_t begin = end >= i + 9 ? end - 9 : i;
        mag_.push_back(static_cast<uint32_t>(std::stoul(decimal.substr(begin, end - begin))));
        end = begin;
    }
    sign_ = s;
    trim();
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint32_t carry = 0;
    for (size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s % kBase));
        carry = static_cast<uint32_t>(s / kBase);
    }
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t d = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.mag_.size() || carry; ++j) {
            uint64_t cur = r.mag_[i + j] + carry;
            if (j < b.mag_.size()) cur += static_cast<uint64_t>(a.mag_[i]) * b.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur % BigInt::kBase);
            carry = cur / BigInt::kBase;
        }
    }
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 3) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        if (u > (~0ull) / kBase) return false;
        u = u * kBase + mag_[i];
    }
    unsigned long long limit = sign_ < 0 ? 9223372036854775808ull : 9223372036854775807ull;
    return u <= limit;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = u * kBase + mag_[i];
    if (sign_ < 0) return static_cast<long long>(-u);
    return static_cast<long long>(u);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(mag_.back());
    for (size_t i = mag_.size() - 1; i-- > 0;) {
        std::string d = std::to_string(mag_[i]);
        s += std::string(9 - d.size(), '0') + d;
    }
    return s;
}

}  // namespace phi
