#pragma once

#include "mordell/bigint.hpp"
#include "mordell/periods.hpp"
#include "mordell/real.hpp"

#include <array>
#include <cstdint>
#include <vector>

// Quadratic twists y^2 = x^3 + A n^2 x + B n^3 of a curve with three real
// roots, the restricted point count nu_E(n), and binary quartic forms.

namespace mordell::twists {

/// y^2 = x^3 + A x + B with discriminant -16 (4 A^3 + 27 B^2) != 0.
class WeierstrassCurve
{
  public:
    WeierstrassCurve(BigInt A, BigInt B);

    BigInt const & A() const { return A_; }
    BigInt const & B() const { return B_; }
    BigInt const & discriminant() const { return disc_; }

  private:
    BigInt A_;
    BigInt B_;
    BigInt disc_;
};

/// psi(n) = n prod_{p | n} (1 + 1/p).
std::uint64_t psi(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Roots e1 < e2 < e3 of x^3 + A x + B for a curve with positive
/// discriminant, isolated by bisection to below 1e-30 at 50 digits.
periods::BasicRealRootTriple<Mpfr50> real_roots(WeierstrassCurve const & curve);

/// (e2 - e1) / (e3 - e1).
long double legendre_lambda(WeierstrassCurve const & curve);

/// #{(x, y) : y^2 = x^3 + A n^2 x + B n^3, gcd(n, x) = 1, e1 <= x/n <= e2}.
/// Both signs of y count; y = 0 counts once. The interval test is exact.
std::uint64_t nu(WeierstrassCurve const & curve, std::uint64_t n);

/// (1 / sqrt N) sum_{n=1}^{N} nu(n).
long double duke_partial_sum(WeierstrassCurve const & curve, std::uint64_t N);

/// Cumulative sums sum_{n <= m} nu(n) for m = 1..N.
std::vector<std::uint64_t> nu_cumulative(WeierstrassCurve const & curve, std::uint64_t N);

/// 3 D Omega_E / (2 pi^2 psi(D)) h_E, Omega_E the full real period.
long double duke_rhs(WeierstrassCurve const & curve, Rational const & h_E);

/// a x^4 + 4b x^3 y + 6c x^2 y^2 + 4d x y^3 + e y^4.
struct BinaryQuarticForm
{
    BigInt a, b, c, d, e;

    std::array<BigInt, 5> expanded() const;
    BigInt operator()(BigInt const & x, BigInt const & y) const;
    /// gcd(a, 4b, 6c, 4d, e).
    BigInt content() const;

    friend bool operator==(BinaryQuarticForm const &, BinaryQuarticForm const &) = default;
};

struct QuarticInvariants
{
    BigInt I;
    BigInt J;
};

/// I = ae - 4bd + 3c^2, J = ace + 2bcd - ad^2 - b^2 e - c^3.
QuarticInvariants quartic_invariants(BinaryQuarticForm const & f);

/// I^3 - 27 J^2.
BigInt quartic_syzygy_delta(BigInt const & I, BigInt const & J);

/// F(p x + q y, r x + s y); requires ps - qr = +-1.
BinaryQuarticForm act(BinaryQuarticForm const & f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

/// a > 0 and F(x, 1) has no real root (exact Sturm count).
bool is_positive_definite(BinaryQuarticForm const & f);

struct QuarticClass
{
    BinaryQuarticForm representative;
    std::uint64_t automorphisms; ///< SL2 automorphs found in the matrix box
};

struct HurwitzCount
{
    Rational weighted; ///< sum of 2 / #Aut over classes
    std::vector<QuarticClass> classes;
};

/// Experimental weighted class count of positive definite forms with
/// invariants (I0, J0) inside the coefficient box, deduplicated and with
/// automorphisms measured over SL2 matrices with entries in the matrix box.
HurwitzCount hurwitz_quartic_count(BigInt const & I0, BigInt const & J0, std::int64_t coeff_box,
                                   std::int64_t matrix_box);

} // namespace mordell::twists
