#include <doctest.h>

#include "mordell/arith.hpp"
#include "mordell/error.hpp"
#include "mordell/lucas_quartic.hpp"

#include <cmath>

using namespace mordell;
using namespace mordell::lucas;

namespace {

bool trial_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

// Direct scan of y^2 = D x^4 - 4 with GMP, no Lucas sequences involved.
std::vector<QuarticPoint> oracle_quartic(std::int64_t t, std::int64_t d, std::int64_t x_max)
{
    BigInt D = BigInt(d) * d * (BigInt(t) * t + 4);
    std::vector<QuarticPoint> out;
    for (std::int64_t x = 0; x <= x_max; ++x) {
        BigInt X(x);
        BigInt v = D * X * X * X * X - 4;
        if (sgn(v) < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0)
            continue;
        out.push_back({X, sqrt(v)});
    }
    return out;
}

} // namespace

TEST_CASE("sequence values")
{
    LucasContext one(1), two(2);
    CHECK(lucas_u(one, 7) == 13);
    CHECK(lucas_u(one, 0) == 0);
    CHECK(lucas_v(one, 0) == 2);
    CHECK(lucas_v(two, 7) == 478);
    CHECK(lucas_u(two, 7) == 169);
    CHECK_THROWS_AS(LucasContext(0), PreconditionError);
    auto tab = lucas_table(two, 10);
    REQUIRE(tab.size() == 11);
    for (std::int64_t j = 0; j <= 10; ++j) {
        CHECK(tab[static_cast<std::size_t>(j)].first == lucas_u(two, j));
        CHECK(tab[static_cast<std::size_t>(j)].second == lucas_v(two, j));
    }
}

TEST_CASE("square terms")
{
    CHECK(find_square_u(LucasContext(1), 200) == std::vector<std::int64_t>{1});
    CHECK(find_square_u(LucasContext(2), 200) == std::vector<std::int64_t>{1, 7});
    CHECK(find_square_u(LucasContext(3), 200) == std::vector<std::int64_t>{1});
}

TEST_CASE("companion identity v^2 - (t^2 + 4) u^2 = 4 (-1)^j")
{
    for (std::int64_t t = 1; t <= 50; ++t) {
        LucasContext ctx(t);
        BigInt disc = BigInt(t) * t + 4;
        auto tab = lucas_table(ctx, 60);
        for (std::int64_t j = 0; j <= 60; ++j) {
            auto const & [u, v] = tab[static_cast<std::size_t>(j)];
            CHECK(v * v - disc * u * u == (j % 2 == 0 ? 4 : -4));
        }
    }
}

TEST_CASE("quartic points")
{
    CHECK(quartic_points(QuarticCurve(1, 1), 10'000) == std::vector<QuarticPoint>{{BigInt(1), BigInt(1)}});
    CHECK(quartic_points(QuarticCurve(2, 1), 10'000) ==
          std::vector<QuarticPoint>{{BigInt(1), BigInt(2)}, {BigInt(13), BigInt(478)}});
    for (std::int64_t t : {3, 5, 6})
        CHECK(quartic_points(QuarticCurve(t, 1), 10'000).size() == 1);
    for (std::int64_t t = 1; t <= 12; ++t)
        for (std::int64_t d = 1; d <= 3; ++d)
            CHECK(quartic_points(QuarticCurve(t, d), 3000) == oracle_quartic(t, d, 3000));
    CHECK(QuarticCurve(2, 3).coefficient() == 72);
    CHECK_THROWS_AS(QuarticCurve(1, 0), PreconditionError);
}

TEST_CASE("bijection with square terms")
{
    for (std::int64_t t : {1, 2, 5})
        CHECK(check_bijection(LucasContext(t), 40, 100'000));
}

TEST_CASE("unit hypothesis and premise")
{
    CHECK(unit_hypothesis_holds(1));
    CHECK(unit_hypothesis_holds(3));
    CHECK_FALSE(unit_hypothesis_holds(4));
    CHECK(quartic_premise(2, 2));
    CHECK(quartic_premise(14, 2));
    CHECK_FALSE(quartic_premise(1, 2));
    CHECK(quartic_premise(1, 5));
}

TEST_CASE("prime density among odd-index Lucas numbers")
{
    auto d = lucas_prime_density(100);
    CHECK(d.rho == 2);
    CHECK(d.pi == 25);
    auto s = lucas_prime_density(10);
    CHECK(s.rho == 0);
    CHECK(s.pi == 4);
    for (std::uint32_t N : {100u, 1000u, 100'000u, 10'000'000u}) {
        std::uint64_t rho = 0, pi_n = 0;
        std::uint64_t a = 2, b = 1; // L_0, L_1
        for (int idx = 1; b <= N; ++idx) {
            if (idx >= 3 && idx % 2 == 1 && trial_prime(b))
                ++rho;
            std::uint64_t c = a + b;
            a = b;
            b = c;
        }
        for (std::uint64_t n = 2; n <= N && N <= 100'000; ++n)
            pi_n += trial_prime(n);
        auto got = lucas_prime_density(N);
        CHECK(got.rho == rho);
        if (N <= 100'000)
            CHECK(got.pi == pi_n);
        CHECK(got.rho <= lucas_rho_bound(N));
    }
    CHECK(lucas_rho_bound(100) == 4);
}
