#include <doctest.h>

#include "mordell/bound_evals.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace mordell;
using namespace mordell::bounds;

namespace {

std::map<std::int64_t, std::uint64_t> oracle_counts(std::array<std::int64_t, 4> const & F, std::int64_t m_max,
                                                    std::int64_t box)
{
    std::map<std::int64_t, std::uint64_t> out;
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y) {
            if (std::gcd(x, y) != 1)
                continue;
            BigInt X(x), Y(y);
            BigInt v = F[0] * X * X * X + F[1] * X * X * Y + F[2] * X * Y * Y + F[3] * Y * Y * Y;
            if (v != 0 && abs(v) <= m_max)
                ++out[v.get_si()];
        }
    return out;
}

} // namespace

TEST_CASE("factorization helpers")
{
    CHECK(omega(BigInt(12)) == 2);
    CHECK(omega(BigInt(1)) == 0);
    CHECK(omega(BigInt(-30)) == 3);
    CHECK(nu_p(BigInt(72), BigInt(2)) == 3);
    CHECK(nu_p(BigInt(72), BigInt(3)) == 2);
    CHECK(nu_p(BigInt(72), BigInt(5)) == 0);
    auto f = factorize(BigInt(-360));
    CHECK(f.n == -360);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<BigInt, unsigned>{BigInt(2), 3});
    CHECK(f.factors[2] == std::pair<BigInt, unsigned>{BigInt(5), 1});
    CHECK_THROWS_AS(factorize(BigInt(0)), PreconditionError);
    CHECK(bennett_cubic_bound(BigInt(12)) == 90);
    CHECK(bennett_cubic_bound(BigInt(1)) == 10);
}

TEST_CASE("coprime counts and the Bennett bound")
{
    std::array<std::int64_t, 4> sum{1, 0, 0, 1};
    auto c = coprime_representation_counts(sum, 50, 200);
    CHECK(c == oracle_counts(sum, 50, 200));
    CHECK(c.at(1) == 2);
    CHECK(c.at(2) == 1);

    std::mt19937 rng(41);
    std::uniform_int_distribution<std::int64_t> u(-7, 7);
    int forms = 0;
    while (forms < 10) {
        std::array<std::int64_t, 4> F{u(rng), u(rng), u(rng), u(rng)};
        BigInt A = F[0], B = F[1], C = F[2], D = F[3];
        BigInt disc = B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D;
        if (disc == 0)
            continue;
        auto got = coprime_representation_counts(F, 50, 120);
        CHECK(got == oracle_counts(F, 50, 120));
        for (auto [m, n] : got)
            CHECK(BigInt(static_cast<unsigned long>(n)) <= bennett_cubic_bound(BigInt(m)));
        ++forms;
    }
}

TEST_CASE("product bound")
{
    CHECK(alpoge_ho_product(1, factorize(BigInt(72))) == 50);
    CHECK(alpoge_ho_product(3, factorize(BigInt(6))) == 8);
    CHECK(alpoge_ho_product(0, factorize(BigInt(1 << 10))) == 21);
}

TEST_CASE("shape and logarithmic bounds")
{
    long double v = helfgott_venkatesh_shape<long double>(2, 3, std::log(1000.0L), 2.0L);
    CHECK(std::fabs(v - 8 * 1.33L * 1.33L * std::log(1000.0L) * std::log(1000.0L)) < 1e-12L);
    CHECK(std::fabs(helfgott_venkatesh_shape(2, factorize(BigInt(-1000)), 2.0L) -
                    4 * 1.33L * 1.33L * std::log(1000.0L) * std::log(1000.0L)) < 1e-12L);

    long double s = alpoge_ho_S_bound<long double>(0, 0, BigInt(1));
    CHECK(std::fabs(s - 249.07L) < 0.01L);
    set_mpfr_precision_bits(160);
    MpfrReal hi = 2 * log(MpfrReal(2)) + 5 * 128 * log(MpfrReal(7)) + log(MpfrReal(3));
    long double lo = alpoge_ho_S_bound<long double>(2, 2, BigInt(3));
    CHECK(std::fabs(lo / hi.convert_to<long double>() - 1) < 1e-9L);
    CHECK_THROWS_AS(alpoge_ho_S_bound<long double>(0, 0, BigInt(0)), PreconditionError);
}

TEST_CASE("Hajdu-Herendi against an extended precision recomputation")
{
    set_mpfr_precision_bits(160);
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, 0}, {1, 1}, {-7, 6}, {0, 17}, {123456, -789}}) {
        MpfrReal A(a), B(b);
        MpfrReal delta = abs(-4 * A * A * A - 27 * B * B);
        MpfrReal c1 = 32 * sqrt(delta) * pow(8 + log(delta) / 2, 4) / 3;
        MpfrReal t1 = 16 * A * A, t2 = 256 * pow(delta, MpfrReal(2) / 3);
        MpfrReal c2 = 10000 * (t1 > t2 ? t1 : t2);
        MpfrReal lb = MpfrReal("5e64") * c1 * log(c1 + log(c2));
        auto got = hajdu_herendi<long double>(BigInt(a), BigInt(b));
        CHECK(std::fabs(got.c1 / c1.convert_to<long double>() - 1) < 1e-9L);
        CHECK(std::fabs(got.c2 / c2.convert_to<long double>() - 1) < 1e-9L);
        CHECK(std::fabs(got.log_bound / lb.convert_to<long double>() - 1) < 1e-9L);
    }
    CHECK_THROWS_AS(hajdu_herendi<long double>(BigInt(-3), BigInt(2)), PreconditionError);
}

TEST_CASE("j-invariant and the rank one constant")
{
    CHECK(j_invariant(BigInt(1), BigInt(1)) == Rational(6912, 31));
    CHECK(j_invariant(BigInt(0), BigInt(5)) == 0);
    CHECK(j_invariant(BigInt(-4), BigInt(0)) == 1728);
    CHECK(silverman_rank1_bound() == BigInt("3280000000000000000000000000000000"));
    CHECK(silverman_rank1_applies(1, BigInt(0), BigInt(2)));
    CHECK_FALSE(silverman_rank1_applies(1, BigInt(1), BigInt(1)));
    CHECK_FALSE(silverman_rank1_applies(2, BigInt(0), BigInt(2)));
}

TEST_CASE("constant gate")
{
    auto r = bhargava_constant_report(1.0L, 10'000);
    CHECK(r.holds == (r.first_failure == 0 && r.tail_min_ratio > 1));
    CHECK(bhargava_constant_gate(1e6L, 10'000));
    auto tiny = bhargava_constant_report(1e-6L, 10'000);
    CHECK_FALSE(tiny.holds);
    CHECK(tiny.first_failure == 1);
}
