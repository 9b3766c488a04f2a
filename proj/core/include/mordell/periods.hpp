#pragma once

#include "mordell/error.hpp"
#include "mordell/real.hpp"

#include <cmath>
#include <limits>

// Arithmetic-geometric mean, complete elliptic integrals, the Gauss
// hypergeometric value 2F1(1/2, 1/2; 1; lambda), real periods, and the
// twist-count bounds built from them. Every routine is a template over the
// real scalar (long double by default, MpfrReal for extended precision).
//
// Period normalisation: for the Legendre curve y^2 = x(x-1)(x-lambda),
// real_period_lambda returns pi / AGM(1, sqrt(1-lambda)), the integral of
// dx/y over [1, inf) with y > 0. For a monic cubic with roots e1 < e2 < e3,
// real_period_roots returns 2 pi / AGM(sqrt(e3-e1), sqrt(e3-e2)), the full
// real period (both branches). Hence
//     real_period_roots(0, lambda, 1) == 2 * real_period_lambda(lambda).

namespace mordell::periods {

template <class Real>
Real default_agm_tolerance()
{
    using std::sqrt;
    return sqrt(std::numeric_limits<Real>::epsilon());
}

/// Common limit of a_{n+1} = (a_n + b_n)/2, b_{n+1} = sqrt(a_n b_n). Stops
/// once |a_n - b_n| <= rel_tol * a_n and then takes one more step.
template <class Real = DefaultReal>
Real agm(Real a, Real b, Real rel_tol = default_agm_tolerance<Real>())
{
    using std::abs;
    using std::sqrt;
    require(a > 0 && b > 0, "AGM arguments must be positive");
    require(rel_tol > 0 && rel_tol <= Real(1e-4), "AGM tolerance must lie in (0, 1e-4]");
    for (int i = 0; i < 200; ++i) {
        bool close = abs(a - b) <= rel_tol * a;
        Real next_a = (a + b) / 2;
        Real next_b = sqrt(a * b);
        a = next_a;
        b = next_b;
        if (close)
            break;
    }
    return a;
}

/// Parameter of the Legendre curve y^2 = x(x-1)(x-lambda), 0 < lambda < 1.
template <class Real = DefaultReal>
class BasicLegendreLambda
{
  public:
    explicit BasicLegendreLambda(Real lambda) : lambda_(lambda)
    {
        require(lambda > 0 && lambda < 1, "lambda must lie in (0, 1)");
    }

    Real const & value() const { return lambda_; }

  private:
    Real lambda_;
};

using LegendreLambda = BasicLegendreLambda<DefaultReal>;

/// Strictly increasing real roots of a cubic with positive discriminant.
template <class Real = DefaultReal>
struct BasicRealRootTriple
{
    Real e1, e2, e3;

    BasicRealRootTriple(Real a, Real b, Real c) : e1(a), e2(b), e3(c)
    {
        require(e1 < e2 && e2 < e3, "roots must satisfy e1 < e2 < e3");
    }
};

using RealRootTriple = BasicRealRootTriple<DefaultReal>;

/// K(r) = pi / (2 AGM(1, sqrt(1 - r^2))).
template <class Real = DefaultReal>
Real elliptic_K(Real r)
{
    using std::sqrt;
    require(r >= 0 && r < 1, "modulus must lie in [0, 1)");
    return pi<Real>() / (2 * agm<Real>(Real(1), sqrt(Real(1) - r * r)));
}

/// Direct series sum_{n>=0} ((1/2)_n / n!)^2 lambda^n. Summation stops when
/// the geometric tail bound term * lambda / (1 - lambda) drops below
/// machine epsilon relative to the partial sum.
template <class Real = DefaultReal>
Real gauss_2f1_half(BasicLegendreLambda<Real> const & lam)
{
    using std::abs;
    Real const & x = lam.value();
    Real const eps = std::numeric_limits<Real>::epsilon();
    Real sum = 1;
    Real term = 1;
    for (long n = 0; n < 10'000'000; ++n) {
        Real ratio = (Real(n) + Real(0.5)) / Real(n + 1);
        term *= ratio * ratio * x;
        sum += term;
        if (term * x / (1 - x) <= eps * sum)
            break;
    }
    return sum;
}

/// Omega(E_lambda) = pi / AGM(1, sqrt(1 - lambda)).
template <class Real = DefaultReal>
Real real_period_lambda(BasicLegendreLambda<Real> const & lam)
{
    using std::sqrt;
    return pi<Real>() / agm<Real>(Real(1), sqrt(Real(1) - lam.value()));
}

/// Full real period of y^2 = (x-e1)(x-e2)(x-e3).
template <class Real = DefaultReal>
Real real_period_roots(BasicRealRootTriple<Real> const & roots)
{
    using std::sqrt;
    return 2 * pi<Real>() / agm<Real>(sqrt(roots.e3 - roots.e1), sqrt(roots.e3 - roots.e2));
}

/// (b - a) / (ln b - ln a), with the continuous value a at a == b.
template <class Real = DefaultReal>
Real log_mean(Real a, Real b)
{
    using std::log;
    require(a > 0 && b > 0, "logarithmic mean needs positive arguments");
    if (a == b)
        return a;
    return (b - a) / (log(b) - log(a));
}

namespace detail {

template <class Real>
Real louboutin_factor(Real abs_disc)
{
    using std::log;
    using std::sqrt;
    return (sqrt(abs_disc) - 1) * (Real(0.5) * log(abs_disc) + Real(0.716));
}

template <class Real>
Real log_four_over(Real r_prime)
{
    using std::log;
    return log(4 / r_prime);
}

} // namespace detail

/// (|D|^{1/2} - 1)(0.5 ln|D| + 0.716) / (4 L(1, sqrt(1 - lambda))).
template <class Real = DefaultReal>
Real bound_thm32(Real abs_disc, BasicLegendreLambda<Real> const & lam)
{
    using std::sqrt;
    require(abs_disc > 1, "|discriminant| must exceed 1");
    Real L = log_mean<Real>(Real(1), sqrt(Real(1) - lam.value()));
    return detail::louboutin_factor(abs_disc) / (4 * L);
}

/// Alzer-based form: (|D|^{1/2} - 1)(0.5 ln D + 0.716)(5 - lambda)/(8 pi) ln(4 / sqrt(1 - lambda)).
template <class Real = DefaultReal>
Real bound_cor34(Real abs_disc, BasicLegendreLambda<Real> const & lam)
{
    using std::sqrt;
    require(abs_disc > 1, "|discriminant| must exceed 1");
    Real const & x = lam.value();
    return detail::louboutin_factor(abs_disc) * (5 - x) / (8 * pi<Real>()) *
           detail::log_four_over(Real(sqrt(Real(1) - x)));
}

/// Zhang-based form: 3(D^{1/2} - 1)(0.5 ln D + 0.716) / (2 pi (lambda + 3)) ln(4 / sqrt(1 - lambda)).
template <class Real = DefaultReal>
Real bound_cor35(Real abs_disc, BasicLegendreLambda<Real> const & lam)
{
    using std::sqrt;
    require(abs_disc > 1, "|discriminant| must exceed 1");
    Real const & x = lam.value();
    return 3 * detail::louboutin_factor(abs_disc) / (2 * pi<Real>() * (x + 3)) *
           detail::log_four_over(Real(sqrt(Real(1) - x)));
}

/// log(4/r') (1 + r'^2 / 4), r' = sqrt(1 - r^2).
template <class Real = DefaultReal>
Real alzer_rhs(Real r)
{
    using std::sqrt;
    require(r > 0 && r < 1, "r must lie in (0, 1)");
    Real rp = sqrt(Real(1) - r * r);
    return detail::log_four_over(rp) * (1 + rp * rp / 4);
}

/// 3 / (3 + r^2) log(4/r').
template <class Real = DefaultReal>
Real zhang_rhs(Real r)
{
    using std::sqrt;
    require(r > 0 && r < 1, "r must lie in (0, 1)");
    Real rp = sqrt(Real(1) - r * r);
    return 3 / (3 + r * r) * detail::log_four_over(rp);
}

} // namespace mordell::periods
