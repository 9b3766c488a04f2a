#pragma once

#include "mordell/bigint.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Exact integer kernels shared by the search, field and sequence modules.

namespace mordell {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// floor(sqrt(n)) for n >= 0.
std::uint64_t isqrt(std::uint64_t n);
std::uint64_t isqrt(u128 n);
BigInt isqrt(BigInt const & n);

/// Root r >= 0 with r*r == n, if n is a perfect square (n < 0 never is).
std::optional<BigInt> is_perfect_square(BigInt const & n);
std::optional<std::int64_t> is_perfect_square(std::int64_t n);
std::optional<std::uint64_t> is_perfect_square(u128 n);

/// Exact rational cube root, if one exists.
std::optional<Rational> rational_cbrt(Rational const & q);

/// Floor division rounding towards negative infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);
/// Deterministic strong-pseudoprime test with the first 13 prime bases,
/// proven exact for n < 3.3e24; beyond that GMP's probabilistic test with
/// 50 rounds is used.
bool is_prime(BigInt const & n);

/// is_composite[i] style sieve; returns the list of primes <= n.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

/// Number of primes <= n.
std::uint64_t prime_pi(std::uint32_t n);

/// Trial-division factorisation of n >= 1 as ascending (prime, exponent)
/// pairs. Stops early once the cofactor is prime.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Largest square-free divisor d of |n| with |n| = d * f^2, carrying the
/// sign of n; second member is f.
std::pair<std::int64_t, std::uint64_t> squarefree_decomposition(std::int64_t n);

} // namespace mordell
