#include "mordell/lucas_quartic.hpp"

#include "mordell/arith.hpp"
#include "mordell/class_field.hpp"
#include "mordell/error.hpp"

#include <cmath>

namespace mordell::lucas {

LucasContext::LucasContext(std::int64_t t) : t_(t)
{
    require(t != 0, "t must be nonzero");
}

namespace {

std::pair<BigInt, BigInt> step_to(LucasContext const & ctx, std::int64_t j, BigInt u0, BigInt u1)
{
    require(j >= 0, "index must be nonnegative");
    BigInt t = big(ctx.t());
    for (std::int64_t i = 0; i < j; ++i) {
        BigInt next = t * u1 + u0;
        u0 = std::move(u1);
        u1 = std::move(next);
    }
    return {u0, u1};
}

} // namespace

BigInt lucas_u(LucasContext const & ctx, std::int64_t j)
{
    return step_to(ctx, j, 0, 1).first;
}

BigInt lucas_v(LucasContext const & ctx, std::int64_t j)
{
    return step_to(ctx, j, 2, big(ctx.t())).first;
}

std::vector<std::pair<BigInt, BigInt>> lucas_table(LucasContext const & ctx, std::int64_t j_max)
{
    require(j_max >= 0, "index must be nonnegative");
    BigInt t = big(ctx.t());
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(static_cast<std::size_t>(j_max) + 1);
    BigInt u0 = 0, u1 = 1, v0 = 2, v1 = t;
    for (std::int64_t j = 0; j <= j_max; ++j) {
        out.emplace_back(u0, v0);
        BigInt un = t * u1 + u0;
        BigInt vn = t * v1 + v0;
        u0 = std::move(u1);
        u1 = std::move(un);
        v0 = std::move(v1);
        v1 = std::move(vn);
    }
    return out;
}

std::vector<std::int64_t> find_square_u(LucasContext const & ctx, std::int64_t j_max)
{
    require(j_max >= 1, "j_max must be at least 1");
    auto table = lucas_table(ctx, j_max);
    std::vector<std::int64_t> out;
    for (std::int64_t j = 1; j <= j_max; j += 2)
        if (is_perfect_square(table[static_cast<std::size_t>(j)].first))
            out.push_back(j);
    return out;
}

QuarticCurve::QuarticCurve(std::int64_t t, std::int64_t d) : t_(t), d_(d)
{
    require(d >= 1, "d must be positive");
    D_ = big(d) * big(d) * (big(t) * big(t) + 4);
}

std::vector<QuarticPoint> quartic_points(QuarticCurve const & curve, std::int64_t x_max)
{
    require(x_max >= 1, "x_max must be at least 1");
    std::vector<QuarticPoint> out;
    BigInt const & D = curve.coefficient();
    // D x^4 stays below 2^126 for D < 2^62 and x < 2^16.
    bool native = fits_int64(D) && D < (BigInt(1) << 62) && x_max < (1 << 16);
    if (native) {
        i128 d = to_int64(D);
        for (std::int64_t x = 1; x <= x_max; ++x) {
            i128 X = x;
            i128 rhs = d * X * X * X * X - 4;
            if (auto r = is_perfect_square(static_cast<u128>(rhs)))
                out.push_back({big(x), BigInt(std::to_string(*r))});
        }
        return out;
    }
    for (std::int64_t x = 1; x <= x_max; ++x) {
        BigInt X = big(x);
        BigInt rhs = D * X * X * X * X - 4;
        if (auto r = is_perfect_square(rhs))
            out.push_back({X, *r});
    }
    return out;
}

bool check_bijection(LucasContext const & ctx, std::int64_t j_max, std::int64_t x_max)
{
    auto squares = find_square_u(ctx, j_max);
    auto points = quartic_points(QuarticCurve(ctx.t(), 1), x_max);
    if (squares.size() != points.size())
        return false;
    auto table = lucas_table(ctx, j_max);
    for (std::int64_t j : squares) {
        auto const & [u, v] = table[static_cast<std::size_t>(j)];
        QuarticPoint p{isqrt(u), abs(v)};
        bool hit = false;
        for (auto const & q : points)
            hit = hit || q == p;
        if (!hit)
            return false;
    }
    return true;
}

bool quartic_premise(std::int64_t t, std::int64_t d)
{
    require(d >= 1, "d must be positive");
    BigInt n = big(t) * big(t) + 4;
    if (n % d != 0)
        return false;
    return static_cast<bool>(is_perfect_square(BigInt(n / d)));
}

bool unit_hypothesis_holds(std::int64_t t)
{
    require(t >= 1 && t < 3'000'000'000LL, "t must lie in [1, 3e9)");
    auto [d, f] = squarefree_decomposition(t * t + 4);
    std::int64_t delta = (d % 4 == 1) ? d : 4 * d;
    auto unit = field::fundamental_unit(delta);
    // (t + f sqrt d) / 2 written as (x + y sqrt delta) / 2.
    BigInt want_y = (d % 4 == 1) ? BigInt(static_cast<unsigned long>(f)) : BigInt(static_cast<unsigned long>(f / 2));
    return unit.x == big(t) && unit.y == want_y;
}

PrimeDensity lucas_prime_density(std::uint32_t N)
{
    require(N >= 2, "N must be at least 2");
    std::uint64_t rho = 0;
    std::uint64_t prev = 2, cur = 1; // L_0, L_1
    for (unsigned idx = 1;;) {
        std::uint64_t next = prev + cur;
        prev = cur;
        cur = next;
        ++idx;
        if (cur > N)
            break;
        if (idx % 2 == 1 && is_prime(cur))
            ++rho;
    }
    return {rho, prime_pi(N)};
}

std::uint64_t lucas_rho_bound(std::uint32_t N)
{
    require(N >= 2, "N must be at least 2");
    long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    auto k = static_cast<std::uint32_t>(std::ceil(std::log(static_cast<long double>(N)) / std::log(phi)));
    return k < 2 ? 0 : prime_pi(k);
}

} // namespace mordell::lucas
