#include <doctest.h>

#include "mordell/silverman.hpp"

#include <set>

using namespace mordell;
using namespace mordell::silverman;

namespace {

RationalPoint pt(long s, long t)
{
    return {Rational(s), Rational(t)};
}

std::uint64_t oracle_count(std::array<long, 4> const & c, long m, long box)
{
    std::uint64_t n = 0;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
            n += c[0] * x * x * x + c[1] * x * x * y + c[2] * x * y * y + c[3] * y * y * y == m;
    return n;
}

} // namespace

TEST_CASE("form and discriminant")
{
    auto a = build_form(BigInt(3), pt(1, 2));
    CHECK(cubic::discriminant(a.form) == -5184);
    CHECK(a.form.a == 1);
    CHECK(a.form.b == -1);
    CHECK(a.form.d == -12);
    auto b = build_form(BigInt(-2), pt(3, 5));
    CHECK(cubic::discriminant(b.form) == 21600);
    CHECK_THROWS_AS(build_form(BigInt(1), pt(0, 1)), PreconditionError);
    CHECK_THROWS_AS(build_form(BigInt(3), pt(1, 3)), PreconditionError);
}

TEST_CASE("covariants agree with the generic cubic covariants")
{
    auto sf = build_form(BigInt(3), pt(1, 2));
    auto [H, G] = silverman_covariants(sf);
    CHECK(H.coeffs == std::vector<Rational>{9, 108, -108});
    CHECK(H == scale(cubic::hessian(sf.form).poly(), 9));
    CHECK(G == scale(cubic::covariant_g(sf.form).poly(), 27));
    CHECK(check_modified_syzygy(sf));
}

TEST_CASE("fixtures satisfy the identities")
{
    auto fx = rational_point_fixtures(-50, 50, 400);
    CHECK(fx.size() >= 50);
    std::set<std::pair<std::string, std::string>> seen;
    for (auto const & f : fx) {
        auto const & [s, t] = f.P;
        CHECK(t * t == s * s * s + Rational(f.D));
        CHECK(seen.insert({to_string(f.D), to_string(s)}).second);
        if (s == 0)
            continue;
        auto sf = build_form(f.D, f.P);
        CHECK(cubic::discriminant(sf.form) == -432 * Rational(f.D) * t * t);
        CHECK(check_modified_syzygy(sf));
        auto o = origin_preimage(sf);
        auto img = lambda_map(sf, o[0], o[1], o[2]);
        REQUIRE(img.Z != 0);
        CHECK(img.X / img.Z == s);
        CHECK(img.Y / img.Z == -t);
        CHECK(on_projective_mordell(img, f.D));
    }
}

TEST_CASE("lambda images of points on C")
{
    int mapped = 0;
    for (auto const & f : rational_point_fixtures(-20, 20, 100)) {
        if (f.P.s == 0)
            continue;
        auto sf = build_form(f.D, f.P);
        for (auto const & q : points_on_c(sf, 30)) {
            CHECK(sf.form(q[0], q[1]) * 2 * f.P.t == q[2] * q[2] * q[2]);
            auto img = lambda_map(sf, q[0], q[1], q[2]);
            CHECK(on_projective_mordell(img, f.D));
            ++mapped;
        }
    }
    CHECK(mapped > 0);
    auto sf = build_form(BigInt(3), pt(1, 2));
    try {
        lambda_map(sf, Rational(1), Rational(0), Rational(1));
        FAIL("expected OffCurveError");
    } catch (OffCurveError const & e) {
        // F(1, 0) - 1/4
        CHECK(e.residual() == Rational(3, 4));
    }
}

TEST_CASE("scaled integral form")
{
    for (auto const & f : rational_point_fixtures(-30, 30, 400)) {
        if (f.P.s == 0)
            continue;
        auto sc = scaled_form(f.D, f.P);
        auto sf = build_form(f.D, f.P);
        BigInt b4 = sc.b * sc.b * sc.b * sc.b;
        CHECK(Rational(sc.disc) == Rational(b4) * cubic::discriminant(sf.form));
        BigInt s2 = f.P.s.get_den();
        CHECK(sc.b * gcd(s2, BigInt(3)) == s2);
        CHECK(sc.expanded[0] == sc.b);
        CHECK(sc.expanded[2] == 0);
        CHECK(Rational(sc.expanded[1]) == -3 * f.P.s * Rational(sc.b));
        CHECK(sc.expanded[3] == -4 * f.D * sc.b);
    }
}

TEST_CASE("exponent and Elkies pair")
{
    CHECK(lower_bound_exponent(17) == Rational(17, 19));
    CHECK(lower_bound_exponent(11) == Rational(11, 13));
    auto e = elkies_pair();
    CHECK(to_string(BigInt(abs(e.b))).size() == 33);
    CHECK(e.k1 == -e.b);
    CHECK(e.k2 == -27 * e.b);
    CHECK(to_string(e.k2).ends_with("801"));
    CHECK(e.disc1 == -432 * e.k1 * e.k1);
    CHECK(e.disc2 == -432 * e.k2 * e.k2);
}

TEST_CASE("representation counts against brute force")
{
    std::array<BigInt, 4> sum{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    CHECK(count_representations(sum, BigInt(1729), 12) == 4);
    for (long m = -20; m <= 20; ++m) {
        CHECK(count_representations(sum, BigInt(m), 15) == oracle_count({1, 0, 0, 1}, m, 15));
        CHECK(count_representations({BigInt(2), BigInt(-3), BigInt(0), BigInt(-12)}, BigInt(m), 10) ==
              oracle_count({2, -3, 0, -12}, m, 10));
    }
}
