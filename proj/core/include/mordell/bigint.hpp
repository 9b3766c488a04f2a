#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace mordell {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(std::int64_t v)
{
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline BigInt big_from_string(std::string const & s)
{
    return BigInt(s, 10);
}

inline std::string to_string(BigInt const & v)
{
    return v.get_str(10);
}

inline std::string to_string(Rational const & v)
{
    return v.get_str(10);
}

inline bool fits_int64(BigInt const & v)
{
    return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(BigInt const & v)
{
    return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

inline int sign(BigInt const & v)
{
    return mpz_sgn(v.get_mpz_t());
}

inline int sign(Rational const & v)
{
    return mpq_sgn(v.get_mpq_t());
}

inline BigInt pow(BigInt const & base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(Rational const & base, unsigned e)
{
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

/// Rational with a canonical representation built from a numerator and a
/// nonzero denominator.
inline Rational make_rational(BigInt const & num, BigInt const & den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q" or "-p/q".
std::optional<Rational> parse_rational(std::string const & s);

} // namespace mordell
