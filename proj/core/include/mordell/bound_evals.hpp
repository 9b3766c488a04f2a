#pragma once

#include "mordell/bigint.hpp"
#include "mordell/error.hpp"
#include "mordell/real.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

// Explicit bounds on integral points and their arithmetic helpers. Bounds
// that can exceed any fixed-width type are returned as natural logs.
// Bounds whose published form hides an absolute constant take that
// constant from the caller.

namespace mordell::bounds {

/// |n| = prod p^e with strictly increasing primes; sign kept separately.
struct FactoredInteger
{
    BigInt n;
    std::vector<std::pair<BigInt, unsigned>> factors;
};

/// Trial division; |n| must be nonzero and below 2^64.
FactoredInteger factorize(BigInt const & n);

unsigned omega(FactoredInteger const & f);
unsigned omega(BigInt const & n);

/// Largest e with p^e | n.
unsigned nu_p(BigInt const & n, BigInt const & p);

/// 10 * 3^omega(m).
BigInt bennett_cubic_bound(BigInt const & m);

/// For each m with 1 <= |m| <= m_abs_max, the number of coprime (x, y),
/// |x|, |y| <= box, with F(x, y) = m. F is given by its ordinary
/// coefficients (x^3, x^2 y, x y^2, y^3).
std::map<std::int64_t, std::uint64_t> coprime_representation_counts(std::array<std::int64_t, 4> const & F,
                                                                   std::int64_t m_abs_max, std::int64_t box);

/// 2^rank prod_{p^2 | disc} min(4 floor(nu_p / 2) + 1, 7^128).
BigInt alpoge_ho_product(unsigned rank, FactoredInteger const & disc);

/// c^omega * 1.33^rank * (log |disc|)^2.
template <class Real = DefaultReal>
Real helfgott_venkatesh_shape(unsigned rank, unsigned omega_disc, Real log_abs_disc, Real c)
{
    using std::pow;
    require(c > 0, "constant must be positive");
    return pow(c, Real(omega_disc)) * pow(Real(1.33), Real(rank)) * log_abs_disc * log_abs_disc;
}

long double helfgott_venkatesh_shape(unsigned rank, FactoredInteger const & disc, long double c);

/// log of 2^rank C^{2|S|+1} cl2 with C = 7^128.
template <class Real = DefaultReal>
Real alpoge_ho_S_bound(unsigned rank, unsigned S_size, BigInt const & cl2)
{
    using std::log;
    require(cl2 >= 1, "2-torsion class number must be at least 1");
    return Real(rank) * ln2<Real>() + Real(2 * S_size + 1) * 128 * log(Real(7)) + log_big<Real>(cl2);
}

template <class Real>
struct HajduHerendi
{
    Real c1;
    Real c2;
    Real log_bound;
};

/// Delta_f = -4 a^3 - 27 b^2,
/// c1 = 32 |Delta_f|^{1/2} (8 + 0.5 log |Delta_f|)^4 / 3,
/// c2 = 1e4 max(16 a^2, 256 |Delta_f|^{2/3}),
/// log_bound = 5e64 c1 log(c1 + log c2).
template <class Real = DefaultReal>
HajduHerendi<Real> hajdu_herendi(BigInt const & a, BigInt const & b)
{
    using std::cbrt;
    using std::log;
    using std::pow;
    using std::sqrt;
    BigInt delta = -4 * a * a * a - 27 * b * b;
    require(delta != 0, "discriminant -4a^3 - 27b^2 must be nonzero");
    BigInt abs_delta = abs(delta);
    Real D = to_real<Real>(abs_delta);
    Real lnD = log_big<Real>(abs_delta);
    Real inner = 8 + lnD / 2;
    Real c1 = 32 * sqrt(D) * pow(inner, 4) / 3;
    Real A2 = to_real<Real>(BigInt(16 * a * a));
    Real D23 = 256 * cbrt(D * D);
    Real c2 = 10000 * (A2 > D23 ? A2 : D23);
    Real log_bound = Real(5e64) * c1 * log(c1 + log(c2));
    return {c1, c2, log_bound};
}

/// 1728 * 4 A^3 / (4 A^3 + 27 B^2).
Rational j_invariant(BigInt const & A, BigInt const & B);

/// 3.28e33 as the exact integer 328 * 10^31.
BigInt silverman_rank1_bound();

/// The rank-one bound applies when the declared rank is 1 and j is integral.
bool silverman_rank1_applies(unsigned rank, BigInt const & A, BigInt const & B);

struct GateReport
{
    bool holds;
    std::int64_t first_failure; ///< smallest |k| that fails, 0 if none in range
    long double tail_min_ratio; ///< min of lhs / rhs over the analytic tail
};

/// C (432 k^2)^0.26 > 10 (sqrt k / pi (0.5 log k + 0.716) + 1) for
/// 1 <= k <= k_max, followed by a scan in u = log k from log k_max to 200.
/// Past that the k^0.52 growth dominates the sqrt(k) log(k) right side.
GateReport bhargava_constant_report(long double C, std::int64_t k_max);

bool bhargava_constant_gate(long double C, std::int64_t k_max);

} // namespace mordell::bounds
