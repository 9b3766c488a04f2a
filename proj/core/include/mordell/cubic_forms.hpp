#pragma once

#include "mordell/bigint.hpp"
#include "mordell/binary_poly.hpp"
#include "mordell/error.hpp"

#include <array>
#include <cstdint>
#include <vector>

// Binary cubic forms a x^3 + 3b x^2 y + 3c x y^2 + d y^3 (binomial shape),
// their covariants, and the correspondence with Mordell curves.
//
// Coefficients are stored in binomial convention; the ordinary polynomial
// coefficients are (a, 3b, 3c, d). The templates work over BigInt and over
// Rational (the latter is needed for forms built from rational points).

namespace mordell::cubic {

template <class T>
struct BasicCubicForm
{
    T a, b, c, d;

    /// (a, 3b, 3c, d).
    BinaryPoly<T> expanded() const { return {{a, T(3 * b), T(3 * c), d}}; }

    T operator()(T const & x, T const & y) const { return expanded()(x, y); }

    friend bool operator==(BasicCubicForm const &, BasicCubicForm const &) = default;
};

/// H/9 = p x^2 + q x y + r y^2.
template <class T>
struct BasicQuadraticCovariant
{
    T p, q, r;

    BinaryPoly<T> poly() const { return {{p, q, r}}; }
    friend bool operator==(BasicQuadraticCovariant const &, BasicQuadraticCovariant const &) = default;
};

/// G/27 = a1 x^3 + 3 b1 x^2 y + 3 c1 x y^2 + d1 y^3.
template <class T>
struct BasicCubicCovariant
{
    T a1, b1, c1, d1;

    BinaryPoly<T> poly() const { return {{a1, T(3 * b1), T(3 * c1), d1}}; }
    friend bool operator==(BasicCubicCovariant const &, BasicCubicCovariant const &) = default;
};

using BinaryCubicForm = BasicCubicForm<BigInt>;
using RationalCubicForm = BasicCubicForm<Rational>;
using QuadraticCovariant = BasicQuadraticCovariant<BigInt>;
using CubicCovariant = BasicCubicCovariant<BigInt>;

/// D_F = -27 (a^2 d^2 - 6abcd - 3 b^2 c^2 + 4 a c^3 + 4 b^3 d).
template <class T>
T discriminant(BasicCubicForm<T> const & f)
{
    T const & a = f.a;
    T const & b = f.b;
    T const & c = f.c;
    T const & d = f.d;
    T inner = a * a * d * d - 6 * a * b * c * d - 3 * b * b * c * c + 4 * a * c * c * c + 4 * b * b * b * d;
    T out = -27 * inner;
    return out;
}

template <class T>
BasicQuadraticCovariant<T> hessian(BasicCubicForm<T> const & f)
{
    return {T(f.b * f.b - f.a * f.c), T(f.b * f.c - f.a * f.d), T(f.c * f.c - f.b * f.d)};
}

template <class T>
BasicCubicCovariant<T> covariant_g(BasicCubicForm<T> const & f)
{
    T const & a = f.a;
    T const & b = f.b;
    T const & c = f.c;
    T const & d = f.d;
    T a1 = -a * a * d + 3 * a * b * c - 2 * b * b * b;
    T b1 = -b * b * c - a * b * d + 2 * a * c * c;
    T c1 = b * c * c - 2 * b * b * d + a * c * d;
    T d1 = -3 * b * c * d + 2 * c * c * c + a * d * d;
    return {a1, b1, c1, d1};
}

/// 4H^3 == G^2 + 27 D F^2 as polynomials, where H = 9*(H/9), G = 27*(G/27).
template <class T>
bool check_syzygy(BasicCubicForm<T> const & f)
{
    BinaryPoly<T> F = f.expanded();
    BinaryPoly<T> H = scale(hessian(f).poly(), 9);
    BinaryPoly<T> G = scale(covariant_g(f).poly(), 27);
    T D = discriminant(f);
    BinaryPoly<T> lhs = scale(power(H, 3), 4);
    BinaryPoly<T> rhs = G * G + scale(F * F, T(27 * D));
    return lhs == rhs;
}

/// Integer matrix (p q; r s) acting by F(p x + q y, r x + s y).
struct UnimodularMatrix
{
    std::int64_t p, q, r, s;

    UnimodularMatrix(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

    std::int64_t det() const { return p * s - q * r; }

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
};

/// Every matrix with entries in [-bound, bound] and determinant +-1
/// (or exactly +1 when sl2_only is set), in a fixed order.
std::vector<UnimodularMatrix> unimodular_matrices(std::int64_t bound, bool sl2_only = false);

namespace detail {

/// Coefficients of the expanded polynomial F(p x + q y, r x + s y), where
/// `coeffs` are the expanded coefficients of F (any degree).
template <class T>
std::vector<T> substitute(std::vector<T> const & coeffs, std::int64_t p, std::int64_t q, std::int64_t r,
                          std::int64_t s)
{
    std::size_t n = coeffs.size() - 1;
    BinaryPoly<T> lx{{T(p), T(q)}};
    BinaryPoly<T> ly{{T(r), T(s)}};
    BinaryPoly<T> total{std::vector<T>(n + 1, T(0))};
    for (std::size_t i = 0; i <= n; ++i) {
        BinaryPoly<T> term = power(lx, static_cast<unsigned>(n - i)) * power(ly, static_cast<unsigned>(i));
        total = total + scale(term, coeffs[i]);
    }
    return total.coeffs;
}

BigInt exact_third(BigInt const & v);
inline Rational exact_third(Rational const & v)
{
    Rational r = v / 3;
    return r;
}

} // namespace detail

/// The transformed form F(p x + q y, r x + s y), again in binomial shape.
template <class T>
BasicCubicForm<T> act(BasicCubicForm<T> const & f, UnimodularMatrix const & m)
{
    auto e = detail::substitute(f.expanded().coeffs, m.p, m.q, m.r, m.s);
    return {e[0], detail::exact_third(e[1]), detail::exact_third(e[2]), e[3]};
}

/// Result of mapping a unit value of a cubic form to a Mordell point.
struct MordellImage
{
    BigInt X;
    BigInt Y;
    BigInt k;
};

class NonIntegralKError : public PreconditionError
{
  public:
    using PreconditionError::PreconditionError;
};

class NonUnitValueError : public PreconditionError
{
  public:
    using PreconditionError::PreconditionError;
};

/// X = H1(x0, y0), Y = G1(x0, y0) / 2, k = -D / 108, satisfying
/// Y^2 = X^3 + k. Requires 108 | D and F(x0, y0) = 1.
MordellImage to_mordell(BinaryCubicForm const & f, BigInt const & x0, BigInt const & y0);

/// The reverse direction: (1, 0, -X, -2Y) has discriminant -108 k,
/// represents 1 at (1, 0), and maps back to (X, Y).
BinaryCubicForm from_mordell(BigInt const & X, BigInt const & Y);

/// Classes of forms with |a|,|b|,|c|,|d| <= coeff_box and discriminant
/// -108 k, identified when a matrix with entries bounded by matrix_box maps
/// one onto the other. Each class is represented by its lexicographically
/// smallest member. This is a lower approximation of h3(-108 k).
std::vector<BinaryCubicForm> cubic_classes(BigInt const & k, std::int64_t coeff_box, std::int64_t matrix_box);

/// Experimental: number of classes found by cubic_classes.
std::uint64_t count_h3(BigInt const & k, std::int64_t coeff_box, std::int64_t matrix_box);

/// Upper bound 10 * h3 on the number of integral points (Bennett).
BigInt bennett_point_bound(BigInt const & h3);

} // namespace mordell::cubic
