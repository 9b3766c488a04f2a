#pragma once

#include "mordell/bigint.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <type_traits>

// Real scalar types. Numeric routines are templates over the scalar; the
// default is long double (64-bit mantissa on x86-64), and MpfrReal gives
// runtime-selectable precision for --precision.

namespace mordell {

using DefaultReal = long double;
using MpfrReal = boost::multiprecision::mpfr_float;
/// Fixed 50-digit (about 166-bit) scalar, independent of the runtime default.
using Mpfr50 = boost::multiprecision::mpfr_float_50;

/// Sets the working precision of MpfrReal values created afterwards.
inline void set_mpfr_precision_bits(unsigned bits)
{
    auto digits10 = static_cast<unsigned>(static_cast<double>(bits) * 0.30102999566398120) + 1;
    MpfrReal::default_precision(digits10);
}

template <class Real>
Real pi()
{
    return boost::math::constants::pi<Real>();
}

template <class Real>
Real euler_gamma()
{
    return boost::math::constants::euler<Real>();
}

template <class Real>
Real ln2()
{
    return boost::math::constants::ln_two<Real>();
}

/// Natural log of a positive big integer without overflowing the scalar's
/// exponent range.
template <class Real>
Real log_big(BigInt const & x)
{
    using std::log;
    if constexpr (std::is_floating_point_v<Real>) {
        std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
        if (bits <= 64) {
            return log(static_cast<Real>(mpz_get_ui(x.get_mpz_t())));
        }
        BigInt top;
        mpz_tdiv_q_2exp(top.get_mpz_t(), x.get_mpz_t(), bits - 64);
        auto lead = static_cast<Real>(mpz_get_ui(top.get_mpz_t()));
        return log(lead) + static_cast<Real>(bits - 64) * ln2<Real>();
    } else {
        return log(Real(x.get_str()));
    }
}

template <class Real>
Real to_real(BigInt const & x)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<Real>(std::stold(x.get_str()));
    } else {
        return Real(x.get_str());
    }
}

template <class Real>
Real to_real(Rational const & q)
{
    Real n = to_real<Real>(BigInt(q.get_num()));
    Real d = to_real<Real>(BigInt(q.get_den()));
    return n / d;
}

} // namespace mordell
