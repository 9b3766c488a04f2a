#include "mordell/mordell_search.hpp"

#include "mordell/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace mordell::search {

namespace {

// |x| below this keeps x^3 + k inside a signed 128-bit integer for any
// 64-bit k.
constexpr std::int64_t kNativeLimit = 5'000'000'000'000LL;

unsigned resolve_threads(SearchOptions const & opts)
{
    unsigned n = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
    return std::max(1u, n);
}

// Smallest x for which x^3 + k can be nonnegative, clamped to the window.
std::int64_t effective_lower_bound(std::int64_t k, std::int64_t x_min)
{
    // x^3 >= -k  <=>  x >= cbrt(-k)
    long double root = std::cbrt(static_cast<long double>(-k));
    auto guess = static_cast<std::int64_t>(std::floor(root)) - 1;
    while (static_cast<i128>(guess) * guess * guess + k < 0)
        ++guess;
    return std::max(x_min, guess);
}

template <class Visit>
void scan_native(std::int64_t k, std::int64_t lo, std::int64_t hi, Visit && visit)
{
    for (std::int64_t x = lo; x <= hi; ++x) {
        i128 v = static_cast<i128>(x) * x * x + k;
        if (v < 0)
            continue;
        if (auto r = is_perfect_square(static_cast<u128>(v)))
            visit(x, *r);
    }
}

// Runs scan_native over [lo, hi] split into contiguous chunks, one per
// worker, and returns per-chunk results in ascending-x order.
template <class Result, class Visit>
std::vector<Result> partitioned_scan(std::int64_t k, std::int64_t lo, std::int64_t hi, unsigned threads,
                                     Visit const & visit)
{
    std::vector<Result> results;
    if (lo > hi)
        return results;
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, span / 4096 + 1));
    results.resize(workers);
    if (workers == 1) {
        scan_native(k, lo, hi, [&](std::int64_t x, std::uint64_t r) { visit(results[0], x, r); });
        return results;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = span / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::int64_t a = lo + static_cast<std::int64_t>(chunk * w);
        std::int64_t b = (w + 1 == workers) ? hi : a + static_cast<std::int64_t>(chunk) - 1;
        pool.emplace_back([&, w, a, b] {
            scan_native(k, a, b, [&](std::int64_t x, std::uint64_t r) { visit(results[w], x, r); });
        });
    }
    for (auto & t : pool)
        t.join();
    return results;
}

bool native_ok(MordellCurve const & curve, SearchWindow const & window)
{
    return fits_int64(curve.k()) && window.x_min() > -kNativeLimit && window.x_max() < kNativeLimit;
}

void append_point(std::vector<IntegralPoint> & out, BigInt const & x, BigInt const & r)
{
    if (r == 0) {
        out.push_back({x, BigInt(0)});
    } else {
        out.push_back({x, BigInt(-r)});
        out.push_back({x, r});
    }
}

std::uint64_t point_count_native(std::int64_t k, SearchWindow const & window, unsigned threads)
{
    std::int64_t lo = effective_lower_bound(k, window.x_min());
    auto parts = partitioned_scan<std::uint64_t>(k, lo, window.x_max(), threads,
                                                 [](std::uint64_t & acc, std::int64_t, std::uint64_t r) {
                                                     acc += (r == 0) ? 1 : 2;
                                                 });
    std::uint64_t total = 0;
    for (auto v : parts)
        total += v;
    return total;
}

} // namespace

MordellCurve::MordellCurve(BigInt k) : k_(std::move(k))
{
    require(sign(k_) != 0, "k must be nonzero");
}

BigInt MordellCurve::discriminant() const
{
    BigInt d = -432 * k_ * k_;
    return d;
}

bool MordellCurve::contains(BigInt const & x, BigInt const & y) const
{
    BigInt lhs = y * y;
    BigInt rhs = x * x * x + k_;
    return lhs == rhs;
}

SearchWindow::SearchWindow(std::int64_t x_min, std::int64_t x_max) : x_min_(x_min), x_max_(x_max)
{
    require(x_min <= x_max, "search window must satisfy x_min <= x_max");
}

std::vector<IntegralPoint> integral_points(MordellCurve const & curve, SearchWindow const & window,
                                           SearchOptions const & opts)
{
    std::vector<IntegralPoint> out;
    if (native_ok(curve, window)) {
        std::int64_t k = to_int64(curve.k());
        std::int64_t lo = effective_lower_bound(k, window.x_min());
        using Hits = std::vector<std::pair<std::int64_t, std::uint64_t>>;
        auto parts = partitioned_scan<Hits>(k, lo, window.x_max(), resolve_threads(opts),
                                            [](Hits & h, std::int64_t x, std::uint64_t r) { h.emplace_back(x, r); });
        for (auto const & part : parts) {
            for (auto const & [x, r] : part) {
                BigInt bx = big(x);
                BigInt br;
                mpz_set_ui(br.get_mpz_t(), static_cast<unsigned long>(r));
                append_point(out, bx, br);
            }
        }
        return out;
    }

    for (std::int64_t x = window.x_min();; ++x) {
        BigInt bx = big(x);
        BigInt v = bx * bx * bx + curve.k();
        if (auto r = is_perfect_square(v))
            append_point(out, bx, *r);
        if (x == window.x_max())
            break;
    }
    return out;
}

std::uint64_t count_points(MordellCurve const & curve, SearchWindow const & window, bool include_infinity,
                           SearchOptions const & opts)
{
    std::uint64_t n = native_ok(curve, window)
                          ? point_count_native(to_int64(curve.k()), window, resolve_threads(opts))
                          : integral_points(curve, window, opts).size();
    return n + (include_infinity ? 1 : 0);
}

Classification classify_both(std::uint64_t m, KRange range, SearchWindow const & window, SearchOptions const & opts)
{
    require(m >= 1, "m must be positive");
    require(range.lo <= range.hi, "k range must satisfy lo <= hi");
    Classification out;
    for (std::int64_t k = range.lo; k <= range.hi; ++k) {
        if (k == 0)
            continue;
        MordellCurve curve(big(k));
        std::uint64_t n = count_points(curve, window, false, opts);
        auto target = m * static_cast<std::uint64_t>(k < 0 ? -k : k);
        if (n + 1 == target)
            out.including_infinity.push_back(k);
        if (n == target)
            out.excluding_infinity.push_back(k);
    }
    return out;
}

std::vector<std::int64_t> classify_multiples(std::uint64_t m, KRange range, bool include_infinity,
                                             SearchWindow const & window, SearchOptions const & opts)
{
    auto both = classify_both(m, range, window, opts);
    return include_infinity ? both.including_infinity : both.excluding_infinity;
}

} // namespace mordell::search
