#pragma once

#include "mordell/bigint.hpp"
#include "mordell/binary_poly.hpp"
#include "mordell/cubic_forms.hpp"

#include <array>
#include <cstdint>
#include <vector>

// The cubic form x^3 - 3 s x^2 y - 4 D y^3 attached to a rational point
// (s, t) on y^2 = x^3 + D, its covariants, the map from the curve
// F(x, y) = z^3 / (2t) back to the Mordell curve, and related constants.

namespace mordell::silverman {

struct RationalPoint
{
    Rational s;
    Rational t;

    friend bool operator==(RationalPoint const &, RationalPoint const &) = default;
};

/// F = (1, -s, 0, -4D) in binomial shape; discriminant -432 D t^2.
struct SilvermanForm
{
    BigInt D;
    RationalPoint point;
    cubic::RationalCubicForm form;
};

/// Requires t^2 = s^3 + D and s t != 0; verifies the discriminant.
SilvermanForm build_form(BigInt const & D, RationalPoint const & P);

struct Covariants
{
    BinaryPoly<Rational> H; ///< 9 (s^2 x^2 + 4 D x y - 4 s D y^2)
    BinaryPoly<Rational> G; ///< 54 ((s^3 + 2D) x^3 - 6 s D x^2 y + 12 s^2 D x y^2 + 8 D^2 y^3)
};

Covariants silverman_covariants(SilvermanForm const & sf);

/// (4G)^2 == (4H)^3 + (432 t)^2 D F^2 by exact expansion.
bool check_modified_syzygy(SilvermanForm const & sf);

struct ProjectivePoint
{
    Rational X, Y, Z;
};

class OffCurveError : public PreconditionError
{
  public:
    explicit OffCurveError(Rational residual);

    Rational const & residual() const { return residual_; }

  private:
    Rational residual_;
};

/// [z H(x, y) / 9, G(x, y) / 54, z^3] for (x, y, z) on F(x, y) = z^3 / (2t).
/// Throws OffCurveError carrying F(x, y) - z^3 / (2t) otherwise.
ProjectivePoint lambda_map(SilvermanForm const & sf, Rational const & x, Rational const & y, Rational const & z);

/// Z Y^2 == X^3 + D Z^3.
bool on_projective_mordell(ProjectivePoint const & p, BigInt const & D);

/// (-s/t, -1/(2t)), which lambda sends to [s, -t, 1].
std::array<Rational, 3> origin_preimage(SilvermanForm const & sf);

/// Points (x, y, 1) of F(x, y) = 1/(2t) with x, y of numerator and
/// denominator at most `height`.
std::vector<std::array<Rational, 3>> points_on_c(SilvermanForm const & sf, std::int64_t height);

struct ScaledForm
{
    BigInt b;                      ///< s2 / gcd(3, s2), s = s1/s2 in lowest terms
    std::array<BigInt, 4> expanded; ///< b (1, -3s, 0, -4D)
    BigInt disc;                   ///< b^4 disc(F)
};

ScaledForm scaled_form(BigInt const & D, RationalPoint const & P);

/// r / (r + 2).
Rational lower_bound_exponent(std::int64_t r);

struct ElkiesPair
{
    BigInt b;
    BigInt k1;    ///< y^2 = x^3 + k1 with k1 = -b
    BigInt k2;    ///< k2 = -27 b
    BigInt disc1; ///< -432 k1^2
    BigInt disc2; ///< -432 k2^2
};

ElkiesPair elkies_pair();

/// Rational points (m/e^2, n/e^3) with n > 0, m n != 0, gcd(m, e) = 1,
/// |m| <= height and e^2 <= height, on y^2 = x^3 + D for D in [D_lo, D_hi]
/// (D = 0 skipped). Ordered by (D, e, m).
struct FixturePoint
{
    BigInt D;
    RationalPoint P;
};

std::vector<FixturePoint> rational_point_fixtures(std::int64_t D_lo, std::int64_t D_hi, std::int64_t height);

/// #{(x, y) : F(x, y) = m, |x|, |y| <= box} for an integral form.
std::uint64_t count_representations(std::array<BigInt, 4> const & expanded, BigInt const & m, std::int64_t box);

} // namespace mordell::silverman
