#include "mordell/bound_evals.hpp"

#include "mordell/arith.hpp"

#include <algorithm>
#include <numeric>

namespace mordell::bounds {

FactoredInteger factorize(BigInt const & n)
{
    require(n != 0, "cannot factor 0");
    BigInt a = abs(n);
    require(mpz_fits_ulong_p(a.get_mpz_t()) != 0, "factorisation limited to |n| < 2^64");
    FactoredInteger out{n, {}};
    for (auto [p, e] : factor_u64(mpz_get_ui(a.get_mpz_t())))
        out.factors.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
    return out;
}

unsigned omega(FactoredInteger const & f)
{
    return static_cast<unsigned>(f.factors.size());
}

unsigned omega(BigInt const & n)
{
    return omega(factorize(n));
}

unsigned nu_p(BigInt const & n, BigInt const & p)
{
    require(n != 0, "nu_p of 0 is infinite");
    require(p >= 2, "p must be at least 2");
    BigInt m = abs(n);
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

BigInt bennett_cubic_bound(BigInt const & m)
{
    require(m != 0, "m must be nonzero");
    return 10 * pow(BigInt(3), static_cast<unsigned long>(omega(m)));
}

std::map<std::int64_t, std::uint64_t> coprime_representation_counts(std::array<std::int64_t, 4> const & F,
                                                                   std::int64_t m_abs_max, std::int64_t box)
{
    require(box >= 0 && box <= 100'000, "box must lie in [0, 1e5]");
    require(m_abs_max >= 1, "m range must be nonempty");
    std::map<std::int64_t, std::uint64_t> out;
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y) {
            if (std::gcd(x, y) != 1)
                continue;
            i128 X = x, Y = y;
            i128 v = F[0] * X * X * X + F[1] * X * X * Y + F[2] * X * Y * Y + F[3] * Y * Y * Y;
            if (v != 0 && v <= m_abs_max && v >= -m_abs_max)
                ++out[static_cast<std::int64_t>(v)];
        }
    return out;
}

BigInt alpoge_ho_product(unsigned rank, FactoredInteger const & disc)
{
    require(disc.n != 0, "discriminant must be nonzero");
    BigInt cap = pow(BigInt(7), 128);
    BigInt out = pow(BigInt(2), static_cast<unsigned long>(rank));
    for (auto const & [p, e] : disc.factors) {
        if (e < 2)
            continue;
        BigInt term = 4 * (e / 2) + 1;
        out *= std::min(term, cap);
    }
    return out;
}

long double helfgott_venkatesh_shape(unsigned rank, FactoredInteger const & disc, long double c)
{
    BigInt a = abs(disc.n);
    require(a > 1, "|disc| must exceed 1");
    return helfgott_venkatesh_shape<long double>(rank, omega(disc), log_big<long double>(a), c);
}

Rational j_invariant(BigInt const & A, BigInt const & B)
{
    BigInt four_a3 = 4 * A * A * A;
    BigInt denom = four_a3 + 27 * B * B;
    require(denom != 0, "singular curve: 4A^3 + 27B^2 = 0");
    return make_rational(1728 * four_a3, denom);
}

BigInt silverman_rank1_bound()
{
    return 328 * pow(BigInt(10), 31);
}

bool silverman_rank1_applies(unsigned rank, BigInt const & A, BigInt const & B)
{
    return rank == 1 && j_invariant(A, B).get_den() == 1;
}

namespace {

long double gate_ratio(long double C, long double log_k)
{
    long double k_sqrt = std::exp(log_k / 2);
    long double lhs = C * std::pow(432.0L, 0.26L) * std::exp(0.52L * log_k);
    long double rhs = 10.0L * (k_sqrt / pi<long double>() * (0.5L * log_k + 0.716L) + 1.0L);
    return lhs / rhs;
}

} // namespace

GateReport bhargava_constant_report(long double C, std::int64_t k_max)
{
    require(C > 0, "C must be positive");
    require(k_max >= 1, "k_max must be at least 1");
    GateReport rep{true, 0, 0};
    for (std::int64_t k = 1; k <= k_max; ++k) {
        if (!(gate_ratio(C, std::log(static_cast<long double>(k))) > 1)) {
            rep.holds = false;
            rep.first_failure = k;
            break;
        }
    }
    long double lo = std::log(static_cast<long double>(k_max));
    long double tail_min = gate_ratio(C, lo);
    for (long double u = lo; u <= 200.0L; u += 0.01L)
        tail_min = std::min(tail_min, gate_ratio(C, u));
    rep.tail_min_ratio = tail_min;
    if (!(tail_min > 1))
        rep.holds = false;
    return rep;
}

bool bhargava_constant_gate(long double C, std::int64_t k_max)
{
    return bhargava_constant_report(C, k_max).holds;
}

} // namespace mordell::bounds
