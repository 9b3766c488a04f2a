#pragma once

#include "mordell/arith.hpp"
#include "mordell/bigint.hpp"

#include <compare>
#include <cstdint>
#include <vector>

// Exhaustive enumeration of integral points on y^2 = x^3 + k.

namespace mordell::search {

using mordell::is_perfect_square;

/// The curve y^2 = x^3 + k, k != 0.
class MordellCurve
{
  public:
    explicit MordellCurve(BigInt k);

    BigInt const & k() const { return k_; }

    /// -432 k^2.
    BigInt discriminant() const;

    bool contains(BigInt const & x, BigInt const & y) const;

  private:
    BigInt k_;
};

struct IntegralPoint
{
    BigInt x;
    BigInt y;

    friend bool operator==(IntegralPoint const &, IntegralPoint const &) = default;
    friend std::strong_ordering operator<=>(IntegralPoint const & a, IntegralPoint const & b)
    {
        if (int c = cmp(a.x, b.x); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp(a.y, b.y);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
};

/// Closed x-interval [x_min, x_max].
class SearchWindow
{
  public:
    SearchWindow(std::int64_t x_min, std::int64_t x_max);

    static SearchWindow symmetric(std::int64_t half_width) { return {-half_width, half_width}; }
    static SearchWindow standard() { return symmetric(1'000'000); }

    std::int64_t x_min() const { return x_min_; }
    std::int64_t x_max() const { return x_max_; }

  private:
    std::int64_t x_min_;
    std::int64_t x_max_;
};

struct SearchOptions
{
    /// Worker threads used to partition the window; 0 picks the hardware
    /// concurrency. Output never depends on this value.
    unsigned threads = 1;
};

/// All (x, y) with x in the window and y^2 = x^3 + k, sorted by (x, y).
/// Both signs of y are listed; y = 0 appears once.
std::vector<IntegralPoint> integral_points(MordellCurve const & curve, SearchWindow const & window,
                                           SearchOptions const & opts = {});

/// Number of integral points in the window, plus one for the point at
/// infinity when requested.
std::uint64_t count_points(MordellCurve const & curve, SearchWindow const & window, bool include_infinity,
                           SearchOptions const & opts = {});

struct KRange
{
    std::int64_t lo;
    std::int64_t hi;
};

/// Every k != 0 in the range whose point count equals m * |k|, ascending.
std::vector<std::int64_t> classify_multiples(std::uint64_t m, KRange range, bool include_infinity,
                                             SearchWindow const & window, SearchOptions const & opts = {});

/// Both variants of classify_multiples from a single enumeration pass.
struct Classification
{
    std::vector<std::int64_t> including_infinity;
    std::vector<std::int64_t> excluding_infinity;
};

Classification classify_both(std::uint64_t m, KRange range, SearchWindow const & window,
                             SearchOptions const & opts = {});

} // namespace mordell::search
