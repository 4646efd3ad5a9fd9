#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "phi/bigint.hpp"
#include "phi/series.hpp"

using namespace phi;

namespace {

TruncatedSeries from_ints(std::initializer_list<long long> cs) {
    TruncatedSeries s(static_cast<int>(cs.size()) - 1);
    int k = 0;
    for (long long c : cs) s.set_coeff(k++, BigInt(c));
    return s;
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool unit) {
    TruncatedSeries s(order);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, BigInt(d(rng)));
    if (unit) s.set_coeff(0, BigInt(rng() % 2 ? 1 : -1));
    return s;
}

// Independent partition counter by restricted enumeration.
long long partitions(int n, int max_part) {
    if (n == 0) return 1;
    if (n < 0 || max_part == 0) return 0;
    return partitions(n - max_part, max_part) + partitions(n, max_part - 1);
}

}  // namespace

TEST_CASE("bigint arithmetic and decimal io") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1234567890123LL).to_string() == "-1234567890123");
    BigInt a("123456789012345678901234567890");
    BigInt b("-987654321098765432109876543210");
    CHECK((a + b).to_string() == "-864197532086419753208641975320");
    CHECK((a * b).to_string() == "-121932631137021795226185032733622923332237463801111263526900");
    CHECK(a - a == BigInt(0));
    CHECK(BigInt("000123").to_string() == "123");
    CHECK(BigInt(7) * BigInt(-6) == BigInt(-42));
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt("999999999") + BigInt(1) == BigInt(1000000000));
    CHECK(BigInt(1000000000000LL).fits_int64());
    CHECK(!BigInt("99999999999999999999").fits_int64());
    CHECK(BigInt("-42").to_int64() == -42);
    CHECK_THROWS_AS(BigInt("12x4"), std::invalid_argument);
}

TEST_CASE("add: cancellation, identity, inverse") {
    CHECK(add(from_ints({1, -1}), from_ints({0, 1})) == from_ints({1, 0}));
    TruncatedSeries e = euler_infinity(5);
    CHECK(add(TruncatedSeries::zero(5), e) == e);
    CHECK(add(e, -e).is_zero());
}

TEST_CASE("mul: geometric inverse and pochhammer expansion") {
    TruncatedSeries one_minus_q = from_ints({1, -1, 0, 0, 0, 0});
    TruncatedSeries geom(5);
    for (int k = 0; k <= 5; ++k) geom.set_coeff(k, BigInt(1));
    CHECK(mul(one_minus_q, geom) == TruncatedSeries::one(5));
    CHECK(pochhammer(2, 3) == from_ints({1, -1, -1, 1}));
}

TEST_CASE("mixed-order arithmetic truncates to the smaller order") {
    TruncatedSeries a = euler_infinity(10);
    TruncatedSeries b = euler_infinity(4);
    CHECK(mul(a, b).order() == 4);
    CHECK(add(a, b).order() == 4);
    CHECK(mul(a, b) == mul(b, a));
}

TEST_CASE("invert_unit") {
    TruncatedSeries one_minus_q = from_ints({1, -1, 0, 0, 0, 0, 0, 0});
    TruncatedSeries inv = invert_unit(one_minus_q);
    for (int k = 0; k <= 7; ++k) CHECK(inv.coeff(k) == BigInt(1));
    CHECK(invert_unit(TruncatedSeries::one(6)) == TruncatedSeries::one(6));
    CHECK_THROWS_AS(invert_unit(from_ints({2, 1})), NotAUnit);

    // 1/(q)_inf is the partition generating function.
    TruncatedSeries pgen = invert_unit(euler_infinity(12));
    for (int n = 0; n <= 12; ++n) CHECK(pgen.coeff(n) == BigInt(partitions(n, n == 0 ? 1 : n)));
}

TEST_CASE("euler_infinity pentagonal expansion") {
    CHECK(euler_infinity(15) ==
          from_ints({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1}));
    CHECK(euler_infinity(0) == TruncatedSeries::one(0));
    CHECK(theta_h(3, 100) == euler_infinity(100));
}

TEST_CASE("pochhammer edges") {
    CHECK(pochhammer(0, 8) == TruncatedSeries::one(8));
    CHECK(pochhammer(9, 8) == euler_infinity(8));
    CHECK(pochhammer(100, 8) == euler_infinity(8));
}

TEST_CASE("theta_h special values") {
    CHECK(theta_h(1, 30).is_zero());
    CHECK(theta_h(2, 30) == TruncatedSeries::one(30));
    CHECK(theta_h(4, 15) ==
          from_ints({1, -1, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, -1}));
    CHECK_THROWS_AS(theta_h(0, 5), std::invalid_argument);
}

TEST_CASE("ring properties on random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries a = random_series(rng, 12, false);
        TruncatedSeries b = random_series(rng, 12, false);
        TruncatedSeries c = random_series(rng, 12, false);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(mul(a, TruncatedSeries::one(12)) == a);
        TruncatedSeries u = random_series(rng, 12, true);
        CHECK(mul(u, invert_unit(u)) == TruncatedSeries::one(12));
    }
}

TEST_CASE("serialization and printing") {
    TruncatedSeries s(3);
    s.set_coeff(0, BigInt(1));
    s.set_coeff(2, BigInt("123456789012345678901234567890"));
    s.set_coeff(3, BigInt(-7));
    TruncatedSeries back = TruncatedSeries::from_json(s.to_json());
    CHECK(back == s);
    CHECK(s.to_json().find("\"order\":3") != std::string::npos);
    CHECK(s.to_json().find("123456789012345678901234567890") != std::string::npos);

    CHECK(from_ints({1, -3, 3, 4}).to_text() == "1 - 3q + 3q^2 + 4q^3");
    CHECK(from_ints({0, 1, 0, -1}).to_text() == "q - q^3");
    CHECK(TruncatedSeries::zero(2).to_text() == "0");
    CHECK(from_ints({1, -1}).to_csv() == "0,1\n1,-1\n");

    CHECK_THROWS(TruncatedSeries::from_json("{\"order\": 2, \"coeffs\": [\"1\"]}"));
}
