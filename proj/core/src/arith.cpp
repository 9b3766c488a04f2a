#include "mordell/arith.hpp"

#include <array>
#include <cmath>
#include <string>

namespace mordell {

namespace {

// Bitmaps of quadratic residues used to reject most non-squares before
// taking a root.
template <unsigned M>
constexpr std::array<bool, M> residue_table()
{
    std::array<bool, M> t{};
    for (unsigned i = 0; i < M; ++i)
        t[(i * i) % M] = true;
    return t;
}

constexpr auto qr64 = residue_table<64>();
constexpr auto qr63 = residue_table<63>();
constexpr auto qr65 = residue_table<65>();
constexpr auto qr11 = residue_table<11>();

inline bool passes_residue_filters(u128 n)
{
    if (!qr64[static_cast<unsigned>(n & 63)])
        return false;
    if (!qr63[static_cast<unsigned>(n % 63)])
        return false;
    if (!qr65[static_cast<unsigned>(n % 65)])
        return false;
    return qr11[static_cast<unsigned>(n % 11)];
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a)
{
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

constexpr std::array<unsigned, 13> kPrimeBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

} // namespace

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n)
        --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t isqrt(u128 n)
{
    if (n >> 64 == 0)
        return isqrt(static_cast<std::uint64_t>(n));
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return static_cast<std::uint64_t>(r);
}

BigInt isqrt(BigInt const & n)
{
    if (sign(n) < 0)
        return BigInt(0);
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<std::uint64_t> is_perfect_square(u128 n)
{
    if (!passes_residue_filters(n))
        return std::nullopt;
    std::uint64_t r = isqrt(n);
    if (static_cast<u128>(r) * r == n)
        return r;
    return std::nullopt;
}

std::optional<std::int64_t> is_perfect_square(std::int64_t n)
{
    if (n < 0)
        return std::nullopt;
    auto r = is_perfect_square(static_cast<u128>(n));
    if (!r)
        return std::nullopt;
    return static_cast<std::int64_t>(*r);
}

std::optional<BigInt> is_perfect_square(BigInt const & n)
{
    if (sign(n) < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_cbrt(Rational const & q)
{
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    BigInt rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 3) == 0)
        return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) == 0)
        return std::nullopt;
    return make_rational(rn, rd);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (unsigned p : kPrimeBases) {
        if (n % p == 0)
            return n == p;
    }
    for (unsigned a : kPrimeBases) {
        if (!strong_probable_prime(n, a))
            return false;
    }
    return true;
}

bool is_prime(BigInt const & n)
{
    if (sign(n) <= 0)
        return false;
    if (mpz_fits_ulong_p(n.get_mpz_t()) != 0)
        return is_prime(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())));

    static BigInt const certified_limit("3317044064679887385961981", 10);
    if (n >= certified_limit)
        return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;

    for (unsigned p : kPrimeBases) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0)
            return false;
    }
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt nm1 = n - 1;
    for (unsigned a : kPrimeBases) {
        BigInt x;
        BigInt base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1)
            continue;
        bool witness = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == nm1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n)
{
    std::vector<std::uint32_t> primes;
    if (n < 2)
        return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return primes;
}

std::uint64_t prime_pi(std::uint32_t n)
{
    return primes_up_to(n).size();
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    bool cofactor_prime = false;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 0) {
            out.emplace_back(p, e);
            cofactor_prime = is_prime(n);
        }
    };
    cofactor_prime = is_prime(n);
    if (!cofactor_prime) {
        strip(2);
        strip(3);
    }
    for (std::uint64_t p = 5; !cofactor_prime && p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(std::uint64_t n)
{
    if (n == 0)
        return false;
    for (auto const & [p, e] : factor_u64(n)) {
        if (e > 1)
            return false;
    }
    return true;
}

std::pair<std::int64_t, std::uint64_t> squarefree_decomposition(std::int64_t n)
{
    if (n == 0)
        return {0, 0};
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    std::uint64_t core = 1;
    std::uint64_t f = 1;
    for (auto const & [p, e] : factor_u64(m)) {
        for (unsigned i = 0; i < e / 2; ++i)
            f *= p;
        if (e % 2 == 1)
            core *= p;
    }
    auto signed_core = static_cast<std::int64_t>(core);
    return {n < 0 ? -signed_core : signed_core, f};
}

std::optional<Rational> parse_rational(std::string const & s)
{
    if (s.empty())
        return std::nullopt;
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        return std::nullopt;
    if (q.get_den() == 0)
        return std::nullopt;
    q.canonicalize();
    return q;
}

} // namespace mordell
