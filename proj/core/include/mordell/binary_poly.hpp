#pragma once

#include <cstddef>
#include <vector>

namespace mordell {

/// Homogeneous polynomial in (x, y): coeffs[i] multiplies x^(n-i) y^i,
/// where n = coeffs.size() - 1 is the degree.
template <class T>
struct BinaryPoly
{
    std::vector<T> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    T operator()(T const & x, T const & y) const
    {
        // Horner in x with y powers accumulated from the tail.
        T acc = 0;
        T ypow = 1;
        std::vector<T> ypows(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            ypows[i] = ypow;
            ypow *= y;
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            acc *= x;
            T term = coeffs[i] * ypows[i];
            acc += term;
        }
        return acc;
    }

    friend bool operator==(BinaryPoly const & a, BinaryPoly const & b) { return a.coeffs == b.coeffs; }
};

template <class T>
BinaryPoly<T> operator*(BinaryPoly<T> const & a, BinaryPoly<T> const & b)
{
    BinaryPoly<T> r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return r;
}

template <class T>
BinaryPoly<T> operator+(BinaryPoly<T> const & a, BinaryPoly<T> const & b)
{
    BinaryPoly<T> r = a;
    if (b.coeffs.size() > r.coeffs.size())
        r.coeffs.resize(b.coeffs.size(), T(0));
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
        r.coeffs[i] += b.coeffs[i];
    return r;
}

template <class T, class S>
BinaryPoly<T> scale(BinaryPoly<T> const & a, S const & s)
{
    BinaryPoly<T> r = a;
    for (auto & c : r.coeffs)
        c *= s;
    return r;
}

template <class T>
BinaryPoly<T> power(BinaryPoly<T> const & a, unsigned e)
{
    BinaryPoly<T> r{{T(1)}};
    for (unsigned i = 0; i < e; ++i)
        r = r * a;
    return r;
}

} // namespace mordell
