#pragma once

#include "mordell/arith.hpp"
#include "mordell/bigint.hpp"
#include "mordell/error.hpp"
#include "mordell/real.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

// Quadratic-field arithmetic: Kronecker characters, class numbers and
// class-group structure, fundamental units, L(1, chi) and the explicit
// bounds used to cut the Mordell search down to |k| <= 119.

namespace mordell::field {

/// Kronecker symbol (a / n).
int kronecker(std::int64_t a, std::int64_t n);

class NotSquarefreeError : public PreconditionError
{
  public:
    NotSquarefreeError(std::int64_t k, std::int64_t squarefree_part);

    std::int64_t squarefree_part() const { return part_; }

  private:
    std::int64_t part_;
};

/// Discriminant of Q(sqrt k) for square-free k != 0, 1.
struct FundamentalDiscriminant
{
    std::int64_t k;
    std::int64_t delta;
};

FundamentalDiscriminant fundamental_discriminant(std::int64_t k);

bool is_fundamental_discriminant(std::int64_t delta);

/// Primitive form A x^2 + B x y + C y^2 with B^2 - 4AC = delta.
struct ReducedQuadraticForm
{
    std::int64_t A, B, C;

    std::int64_t discriminant() const { return B * B - 4 * A * C; }
    friend bool operator==(ReducedQuadraticForm const &, ReducedQuadraticForm const &) = default;
    friend auto operator<=>(ReducedQuadraticForm const &, ReducedQuadraticForm const &) = default;
};

/// Reduces a positive definite form: |B| <= A <= C, B >= 0 when |B| = A or
/// A = C.
ReducedQuadraticForm reduce(ReducedQuadraticForm f);

/// Gauss (Dirichlet) composition of two forms of equal negative
/// discriminant, reduced.
ReducedQuadraticForm compose(ReducedQuadraticForm const & f, ReducedQuadraticForm const & g);

/// The principal form of discriminant delta < 0.
ReducedQuadraticForm principal_form(std::int64_t delta);

/// All reduced primitive forms of discriminant delta < 0, ascending.
std::vector<ReducedQuadraticForm> reduced_forms(std::int64_t delta);

/// Number of automorphisms of forms of discriminant delta < 0 (6, 4 or 2).
int automorphism_count(std::int64_t delta);

/// Invariant factors d1 | d2 | ... (ascending); the trivial group has none.
struct ClassGroupDescription
{
    std::uint64_t order;
    std::vector<std::uint64_t> elementary_divisors;
};

ClassGroupDescription class_group(std::int64_t delta);

/// Minimal unit (x + y sqrt(delta)) / 2 > 1 of the real quadratic order of
/// discriminant delta; x^2 - delta y^2 = 4 * norm_sign.
struct PellUnit
{
    BigInt x;
    BigInt y;
    int norm_sign;
};

PellUnit fundamental_unit(std::int64_t delta);

/// Exact integer sum of chi(n) * n over 1 <= n < |delta| (delta < 0).
std::int64_t weighted_character_sum(std::int64_t delta);

/// L(1, chi_delta) from the finite closed forms:
///   delta < 0:  -pi |delta|^{-3/2} sum chi(n) n
///   delta > 0:  -delta^{-1/2} sum chi(n) log sin(pi n / delta)
template <class Real = DefaultReal>
Real dirichlet_L1(std::int64_t delta)
{
    using std::log;
    using std::sin;
    using std::sqrt;
    require(is_fundamental_discriminant(delta), "delta must be a fundamental discriminant");
    Real const p = pi<Real>();
    if (delta < 0) {
        Real q = static_cast<Real>(-delta);
        Real s = static_cast<Real>(weighted_character_sum(delta));
        return -p * s / (q * sqrt(q));
    }
    // chi is even, so pair n with delta - n.
    Real acc = 0;
    Real q = static_cast<Real>(delta);
    for (std::int64_t n = 1; 2 * n < delta; ++n) {
        int chi = kronecker(delta, n);
        if (chi == 0)
            continue;
        Real term = log(sin(p * static_cast<Real>(n) / q));
        acc += chi > 0 ? term : Real(-term);
    }
    // 2n == delta only when delta is even; chi vanishes there.
    return -2 * acc / sqrt(q);
}

/// Natural log of the fundamental unit.
template <class Real = DefaultReal>
Real log_fundamental_unit(PellUnit const & u)
{
    using std::exp;
    using std::log;
    using std::sqrt;
    // x + y sqrt(delta) = x (1 + sqrt(1 - 4 N / x^2)).
    Real lx = log_big<Real>(u.x);
    Real inv = exp(-2 * lx);
    Real inner = sqrt(Real(1) - 4 * Real(u.norm_sign) * inv);
    return lx + log(Real(1) + inner) - ln2<Real>();
}

/// Class number from the analytic formula, before rounding.
template <class Real = DefaultReal>
Real class_number_formula(std::int64_t delta)
{
    using std::sqrt;
    Real L = dirichlet_L1<Real>(delta);
    if (delta < 0) {
        Real w = static_cast<Real>(automorphism_count(delta));
        return w * sqrt(static_cast<Real>(-delta)) * L / (2 * pi<Real>());
    }
    Real reg = log_fundamental_unit<Real>(fundamental_unit(delta));
    return sqrt(static_cast<Real>(delta)) * L / (2 * reg);
}

/// Rounds class_number_formula, failing loudly when the value is not
/// within 1e-4 of an integer.
template <class Real = DefaultReal>
std::uint64_t class_number_analytic(std::int64_t delta)
{
    using std::abs;
    using std::round;
    Real h = class_number_formula<Real>(delta);
    Real r = round(h);
    if (abs(h - r) > Real(1e-4) || r < 1)
        throw PrecisionError("class number formula gave " + std::to_string(static_cast<double>(h)) +
                             " for delta " + std::to_string(delta));
    return static_cast<std::uint64_t>(static_cast<long double>(r));
}

/// h(delta): reduced-form count for delta < 0, analytic formula for
/// delta > 0.
std::uint64_t class_number(std::int64_t delta);

/// Order of the Sylow 3-subgroup of the class group.
std::uint64_t three_part(std::int64_t delta);

enum class Parity { even, odd };

/// 1/2 log q + c with c = (2 + gamma - log 4 pi)/2 (even) or
/// (2 + gamma - log pi)/2 (odd).
template <class Real = DefaultReal>
Real louboutin_bound(std::int64_t q, Parity parity)
{
    using std::log;
    require(q >= 3, "modulus must be at least 3");
    Real g = euler_gamma<Real>();
    Real c = parity == Parity::even ? Real((2 + g - log(4 * pi<Real>())) / 2) : Real((2 + g - log(pi<Real>())) / 2);
    return log(static_cast<Real>(q)) / 2 + c;
}

/// floor(sqrt(delta) / 2).
std::int64_t le_bound(std::int64_t delta);

enum class ThresholdKind { real, imaginary };

/// Largest |k| with |k| <= 10 (sqrt|k| + 1) (real) or
/// |k| <= 10 (sqrt|k| / pi (0.5 log|k| + 0.716) + 1) (imaginary).
std::int64_t solve_threshold(ThresholdKind kind);

} // namespace mordell::field
