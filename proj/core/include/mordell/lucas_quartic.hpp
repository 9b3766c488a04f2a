#pragma once

#include "mordell/bigint.hpp"

#include <cstdint>
#include <vector>

// Lucas-type sequences u_j, v_j attached to t, the quartic curves
// y^2 = d^2 (t^2 + 4) x^4 - 4 and the density of primes among odd-index
// Lucas numbers.

namespace mordell::lucas {

/// u_0 = 0, u_1 = 1, v_0 = 2, v_1 = t, both with x_{j+2} = t x_{j+1} + x_j.
class LucasContext
{
  public:
    explicit LucasContext(std::int64_t t);

    std::int64_t t() const { return t_; }

  private:
    std::int64_t t_;
};

BigInt lucas_u(LucasContext const & ctx, std::int64_t j);
BigInt lucas_v(LucasContext const & ctx, std::int64_t j);

/// Pairs (u_j, v_j) for j = 0..j_max.
std::vector<std::pair<BigInt, BigInt>> lucas_table(LucasContext const & ctx, std::int64_t j_max);

/// Odd j <= j_max with u_j a perfect square.
std::vector<std::int64_t> find_square_u(LucasContext const & ctx, std::int64_t j_max);

/// y^2 = d^2 (t^2 + 4) x^4 - 4.
class QuarticCurve
{
  public:
    QuarticCurve(std::int64_t t, std::int64_t d);

    std::int64_t t() const { return t_; }
    std::int64_t d() const { return d_; }
    BigInt const & coefficient() const { return D_; }

  private:
    std::int64_t t_;
    std::int64_t d_;
    BigInt D_;
};

struct QuarticPoint
{
    BigInt x;
    BigInt y;

    friend bool operator==(QuarticPoint const &, QuarticPoint const &) = default;
};

/// Solutions with 0 <= x <= x_max and y >= 0, ascending in x.
std::vector<QuarticPoint> quartic_points(QuarticCurve const & curve, std::int64_t x_max);

/// Square odd-index u_j and points of the d = 1 curve correspond one to one
/// through j -> (sqrt u_j, v_j) inside the given windows.
bool check_bijection(LucasContext const & ctx, std::int64_t j_max, std::int64_t x_max);

/// True when t^2 + 4 = d z^2 for some integer z.
bool quartic_premise(std::int64_t t, std::int64_t d);

/// (t + sqrt(t^2 + 4)) / 2 is the fundamental unit of Q(sqrt(t^2 + 4)).
bool unit_hypothesis_holds(std::int64_t t);

struct PrimeDensity
{
    std::uint64_t rho;
    std::uint64_t pi;
};

/// rho: primes p <= N equal to a classical Lucas number L_{2n+1}, n >= 1.
PrimeDensity lucas_prime_density(std::uint32_t N);

/// pi(ceil(log_phi N)) with phi the golden ratio.
std::uint64_t lucas_rho_bound(std::uint32_t N);

} // namespace mordell::lucas
