#include "mordell/silverman.hpp"

#include "mordell/arith.hpp"
#include "mordell/error.hpp"

#include <numeric>

namespace mordell::silverman {

namespace {

void require_on_curve(BigInt const & D, RationalPoint const & P)
{
    require(D != 0, "D must be nonzero");
    require(sign(P.s) != 0 && sign(P.t) != 0, "point must satisfy s t != 0");
    require(P.t * P.t == P.s * P.s * P.s + Rational(D), "point is not on y^2 = x^3 + D");
}

Rational eval(BinaryPoly<Rational> const & p, Rational const & x, Rational const & y)
{
    Rational v = p(x, y);
    v.canonicalize();
    return v;
}

} // namespace

SilvermanForm build_form(BigInt const & D, RationalPoint const & P)
{
    require_on_curve(D, P);
    cubic::RationalCubicForm f{Rational(1), Rational(-P.s), Rational(0), Rational(-4 * D)};
    Rational disc = cubic::discriminant(f);
    disc.canonicalize();
    Rational expected = Rational(-432 * D) * P.t * P.t;
    if (disc != expected)
        throw PrecisionError("discriminant identity failed for D = " + to_string(D));
    return {D, P, f};
}

Covariants silverman_covariants(SilvermanForm const & sf)
{
    Rational const & s = sf.point.s;
    Rational D(sf.D);
    BinaryPoly<Rational> H{{9 * s * s, 36 * D, -36 * s * D}};
    BinaryPoly<Rational> G{{54 * (s * s * s + 2 * D), -324 * s * D, 648 * s * s * D, 432 * D * D}};
    for (auto * p : {&H, &G})
        for (auto & c : p->coeffs)
            c.canonicalize();
    return {H, G};
}

bool check_modified_syzygy(SilvermanForm const & sf)
{
    auto [H, G] = silverman_covariants(sf);
    BinaryPoly<Rational> F = sf.form.expanded();
    BinaryPoly<Rational> G4 = scale(G, Rational(4));
    BinaryPoly<Rational> H4 = scale(H, Rational(4));
    Rational c = Rational(432) * sf.point.t;
    BinaryPoly<Rational> lhs = G4 * G4;
    BinaryPoly<Rational> rhs = power(H4, 3) + scale(F * F, Rational(c * c * Rational(sf.D)));
    for (auto * p : {&lhs, &rhs})
        for (auto & v : p->coeffs)
            v.canonicalize();
    return lhs == rhs;
}

OffCurveError::OffCurveError(Rational residual)
    : PreconditionError("point is off F(x, y) = z^3 / (2t); residual " + to_string(residual)),
      residual_(std::move(residual))
{
}

ProjectivePoint lambda_map(SilvermanForm const & sf, Rational const & x, Rational const & y, Rational const & z)
{
    Rational Fxy = eval(sf.form.expanded(), x, y);
    Rational residual = Fxy - z * z * z / (2 * sf.point.t);
    residual.canonicalize();
    if (sign(residual) != 0)
        throw OffCurveError(residual);
    require(sign(z) != 0 || sign(Fxy) != 0, "map undefined at z = 0");
    auto [H, G] = silverman_covariants(sf);
    ProjectivePoint p{z * eval(H, x, y) / 9, eval(G, x, y) / 54, z * z * z};
    p.X.canonicalize();
    p.Y.canonicalize();
    p.Z.canonicalize();
    return p;
}

bool on_projective_mordell(ProjectivePoint const & p, BigInt const & D)
{
    Rational lhs = p.Z * p.Y * p.Y;
    Rational rhs = p.X * p.X * p.X + Rational(D) * p.Z * p.Z * p.Z;
    return lhs == rhs;
}

std::array<Rational, 3> origin_preimage(SilvermanForm const & sf)
{
    Rational x = -sf.point.s / sf.point.t;
    Rational y = Rational(-1) / (2 * sf.point.t);
    x.canonicalize();
    y.canonicalize();
    return {x, y, Rational(1)};
}

std::vector<std::array<Rational, 3>> points_on_c(SilvermanForm const & sf, std::int64_t height)
{
    require(height >= 1, "height must be at least 1");
    std::vector<std::array<Rational, 3>> out;
    auto F = sf.form.expanded();
    Rational two_t = 2 * sf.point.t;
    // Integral (a, b) on the cone, z = cbrt(2t F(a, b)); rescaling puts
    // every rational point of C in this shape.
    for (std::int64_t a = -height; a <= height; ++a)
        for (std::int64_t b = -height; b <= height; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            Rational v = two_t * eval(F, Rational(a), Rational(b));
            v.canonicalize();
            if (sign(v) == 0)
                continue;
            if (auto z = rational_cbrt(v))
                out.push_back({Rational(a), Rational(b), *z});
        }
    return out;
}

ScaledForm scaled_form(BigInt const & D, RationalPoint const & P)
{
    SilvermanForm sf = build_form(D, P);
    BigInt s2 = P.s.get_den();
    BigInt g;
    BigInt three = 3;
    mpz_gcd(g.get_mpz_t(), three.get_mpz_t(), s2.get_mpz_t());
    BigInt b = s2 / g;
    Rational bq(b);
    std::array<Rational, 4> e{bq, -3 * bq * P.s, Rational(0), -4 * bq * Rational(D)};
    ScaledForm out{b, {}, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        e[i].canonicalize();
        if (e[i].get_den() != 1)
            throw PrecisionError("scaled form has a non-integral coefficient");
        out.expanded[i] = e[i].get_num();
    }
    cubic::RationalCubicForm scaled{bq, Rational(-bq * P.s), Rational(0), Rational(-4 * bq * Rational(D))};
    Rational disc = cubic::discriminant(scaled);
    disc.canonicalize();
    Rational b4 = bq * bq * bq * bq;
    if (disc != b4 * cubic::discriminant(sf.form) || disc.get_den() != 1)
        throw PrecisionError("scaled discriminant is not b^4 disc(F)");
    out.disc = disc.get_num();
    return out;
}

Rational lower_bound_exponent(std::int64_t r)
{
    require(r >= 1, "rank must be positive");
    return make_rational(big(r), big(r + 2));
}

ElkiesPair elkies_pair()
{
    BigInt b = big_from_string("-908800736629952526116772283648363");
    BigInt k1 = -b;
    BigInt k2 = -27 * b;
    return {b, k1, k2, -432 * k1 * k1, -432 * k2 * k2};
}

std::vector<FixturePoint> rational_point_fixtures(std::int64_t D_lo, std::int64_t D_hi, std::int64_t height)
{
    require(D_lo <= D_hi, "empty D range");
    require(height >= 1 && height <= 100'000, "height must lie in [1, 1e5]");
    std::vector<FixturePoint> out;
    for (std::int64_t D = D_lo; D <= D_hi; ++D) {
        if (D == 0)
            continue;
        for (std::int64_t e = 1; e * e <= height; ++e) {
            i128 e6 = static_cast<i128>(e) * e * e * e * e * e;
            for (std::int64_t m = -height; m <= height; ++m) {
                if (m == 0 || std::gcd(m, e) != 1)
                    continue;
                i128 rhs = static_cast<i128>(m) * m * m + static_cast<i128>(D) * e6;
                if (rhs <= 0)
                    continue;
                auto n = is_perfect_square(static_cast<u128>(rhs));
                if (!n)
                    continue;
                BigInt E = big(e);
                Rational s = make_rational(big(m), E * E);
                Rational t = make_rational(BigInt(std::to_string(*n)), E * E * E);
                out.push_back({big(D), {s, t}});
            }
        }
    }
    return out;
}

std::uint64_t count_representations(std::array<BigInt, 4> const & expanded, BigInt const & m, std::int64_t box)
{
    require(box >= 0, "box must be nonnegative");
    BinaryPoly<BigInt> F{{expanded.begin(), expanded.end()}};
    std::uint64_t count = 0;
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y)
            if (F(big(x), big(y)) == m)
                ++count;
    return count;
}

} // namespace mordell::silverman
