#include <doctest.h>

#include <cmath>
#include <random>

#include "asorder/integer_math.hpp"

using namespace asorder;

TEST_CASE("residue arithmetic basics") {
    CHECK(add_mod(5, 6, 7) == 4);
    CHECK(sub_mod(2, 5, 7) == 4);
    CHECK(neg_mod(0, 13) == 0);
    CHECK(neg_mod(5, 13) == 8);
    CHECK(mul_mod(1'000'000'007ULL, 998'244'353ULL, 2'305'843'009'213'693'951ULL) ==
          static_cast<std::uint64_t>((static_cast<unsigned __int128>(1'000'000'007ULL) *
                                      998'244'353ULL) %
                                     2'305'843'009'213'693'951ULL));
    CHECK(pow_mod(2, 10, 1'000'003) == 1024);
    CHECK(pow_mod(7, 0, 13) == 1);
}

TEST_CASE("modular inverse against a scan of small primes") {
    for (std::uint64_t p : {2ULL, 3ULL, 13ULL, 101ULL}) {
        for (std::uint64_t a = 1; a < p; ++a) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
    }
}

TEST_CASE("primality over 64 bits") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(727));
    CHECK(is_prime_u64(1'000'003));
    CHECK(is_prime_u64(2'305'843'009'213'693'951ULL));  // 2^61 - 1
    CHECK(is_prime_u64(9'223'372'036'854'775'783ULL));  // largest prime below 2^63
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));    // Carmichael
    CHECK_FALSE(is_prime_u64(2047));   // strong pseudoprime to base 2
    CHECK_FALSE(is_prime_u64(25326001));
    CHECK_FALSE(is_prime_u64(3'825'123'056'546'413'051ULL));  // pseudoprime to first 9 bases
}

TEST_CASE("exact binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 6) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK(binomial(180, 30) == BigInt("13256166154299679213044725041407792"));

    // Pascal recurrence on a pseudo-random sample
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = 1 + rng() % 120;
        std::uint64_t k = 1 + rng() % n;
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("log of big integers") {
    CHECK(std::fabs(log_bigint(BigInt(1))) < 1e-18L);
    CHECK(log_bigint(BigInt(1'000'000)) == doctest::Approx(std::log(1e6)).epsilon(1e-12));
    long double got = log_bigint(BigInt(1) << 200);
    long double want = 200.0L * std::log(2.0L);
    CHECK(std::fabs(got - want) / want < 1e-15L);
    CHECK_THROWS_AS(log_bigint(BigInt(0)), Error);
}

TEST_CASE("probable primality on big integers") {
    CHECK(is_probable_prime(BigInt("618970019642690137449562111")));  // 2^89 - 1
    CHECK(is_probable_prime(BigInt(1'000'000'007)));
    CHECK_FALSE(is_probable_prime(BigInt("618970019642690137449562109")));
    CHECK_FALSE(is_probable_prime(BigInt(1)));
    BigInt p1("2305843009213693951"), p2("618970019642690137449562111");
    CHECK_FALSE(is_probable_prime(p1 * p2));
}

TEST_CASE("small factorization") {
    auto f = factor_small(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, unsigned>{5, 1});
    CHECK(factor_small(1).empty());
    CHECK(factor_small(97) == std::vector<std::pair<std::uint64_t, unsigned>>{{97, 1}});
}
