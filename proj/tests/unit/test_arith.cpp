#include <doctest.h>

#include "mordell/arith.hpp"
#include "mordell/error.hpp"

#include <random>

using namespace mordell;

namespace {

bool naive_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

TEST_CASE("isqrt and perfect squares agree with GMP")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t v = rng() >> (rng() % 64);
        BigInt b(static_cast<unsigned long>(v));
        CHECK(BigInt(static_cast<unsigned long>(isqrt(v))) == BigInt(sqrt(b)));
        bool gmp_sq = mpz_perfect_square_p(b.get_mpz_t()) != 0;
        CHECK(is_perfect_square(b).has_value() == gmp_sq);
        auto s = static_cast<std::uint64_t>(v >> 33);
        auto sq = is_perfect_square(static_cast<std::int64_t>(s * s));
        REQUIRE(sq);
        CHECK(static_cast<std::uint64_t>(*sq) == s);
    }
    CHECK(*is_perfect_square(BigInt(0)) == 0);
    CHECK(*is_perfect_square(BigInt(97344)) == 312);
    CHECK_FALSE(is_perfect_square(BigInt(2)));
    CHECK_FALSE(is_perfect_square(BigInt(-4)));
}

TEST_CASE("128-bit perfect squares near the top of the range")
{
    u128 r = (static_cast<u128>(1) << 63) + 12345;
    CHECK(is_perfect_square(r * r).value() == static_cast<std::uint64_t>(r));
    CHECK_FALSE(is_perfect_square(r * r + 1));
    CHECK_FALSE(is_perfect_square(r * r - 1));
}

TEST_CASE("big perfect squares")
{
    BigInt r = pow(BigInt(10), 40) + 7;
    CHECK(*is_perfect_square(BigInt(r * r)) == r);
    CHECK_FALSE(is_perfect_square(BigInt(r * r + 1)));
}

TEST_CASE("rational cube roots")
{
    CHECK(*rational_cbrt(Rational(-27, 8)) == Rational(-3, 2));
    CHECK_FALSE(rational_cbrt(Rational(2)));
    CHECK(*rational_cbrt(Rational(0)) == 0);
}

TEST_CASE("floor and ceil division")
{
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(7, 2) == 4);
}

TEST_CASE("primality matches trial division")
{
    for (std::uint64_t n = 0; n < 20000; ++n)
        CHECK(is_prime(n) == naive_prime(n));
    CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
    CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));
    CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_prime(BigInt("3317044064679887385961981")));
}

TEST_CASE("sieve and prime counts")
{
    CHECK(prime_pi(100) == 25);
    CHECK(prime_pi(10) == 4);
    CHECK(prime_pi(1'000'000) == 78498);
}

TEST_CASE("factorisation reconstructs n")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t n = 1 + rng() % 1'000'000'000'000ULL;
        std::uint64_t prod = 1;
        std::uint64_t last = 1;
        for (auto [p, e] : factor_u64(n)) {
            CHECK(p > last);
            BigInt bp(static_cast<unsigned long>(p));
            CHECK(mpz_probab_prime_p(bp.get_mpz_t(), 30) != 0);
            for (unsigned j = 0; j < e; ++j)
                prod *= p;
            last = p;
        }
        CHECK(prod == n);
    }
    CHECK(factor_u64(1).empty());
}

TEST_CASE("square-free decomposition")
{
    CHECK(is_squarefree(5));
    CHECK_FALSE(is_squarefree(8));
    CHECK_FALSE(is_squarefree(20));
    auto [d, f] = squarefree_decomposition(-72);
    CHECK(d == -2);
    CHECK(f == 6);
}

TEST_CASE("rational parsing")
{
    CHECK(*parse_rational("-3/6") == Rational(-1, 2));
    CHECK(*parse_rational("17") == 17);
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("abc"));
}
