#include "mordell/twists.hpp"

#include "mordell/arith.hpp"
#include "mordell/cubic_forms.hpp"
#include "mordell/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mordell::twists {

WeierstrassCurve::WeierstrassCurve(BigInt A, BigInt B) : A_(std::move(A)), B_(std::move(B))
{
    disc_ = -16 * (4 * A_ * A_ * A_ + 27 * B_ * B_);
    require(disc_ != 0, "curve is singular (discriminant 0)");
}

std::uint64_t psi(std::uint64_t n)
{
    require(n >= 1, "psi needs n >= 1");
    std::uint64_t r = n;
    for (auto [p, e] : factor_u64(n))
        r = r / p * (p + 1);
    return r;
}

std::uint64_t euler_phi(std::uint64_t n)
{
    require(n >= 1, "phi needs n >= 1");
    std::uint64_t r = n;
    for (auto [p, e] : factor_u64(n))
        r = r / p * (p - 1);
    return r;
}

namespace {

void require_three_real_roots(WeierstrassCurve const & curve)
{
    require(curve.discriminant() > 0, "twist counting needs a curve with positive discriminant");
}

Mpfr50 cubic_at(Mpfr50 const & t, Mpfr50 const & A, Mpfr50 const & B)
{
    return (t * t + A) * t + B;
}

// Root of the cubic in [lo, hi] where it changes sign monotonically.
Mpfr50 bisect(Mpfr50 lo, Mpfr50 hi, Mpfr50 const & A, Mpfr50 const & B)
{
    bool rising = cubic_at(lo, A, B) < 0;
    for (int i = 0; i < 400; ++i) {
        Mpfr50 mid = (lo + hi) / 2;
        if (mid == lo || mid == hi)
            break;
        Mpfr50 v = cubic_at(mid, A, B);
        if ((v < 0) == rising)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

std::int64_t floor_to_int64(Mpfr50 const & v)
{
    Mpfr50 f = floor(v);
    require(abs(f) < Mpfr50(4e18), "scan bound exceeds 64-bit range");
    return static_cast<std::int64_t>(f.convert_to<long double>());
}

// x/n lies in [e1, e2] given f(x/n) >= 0: the local minimum of the cubic,
// at sqrt(-A/3), separates [e1, e2] from [e3, inf).
template <class T>
bool below_local_min(T const & x, T const & A, T const & n)
{
    return x <= 0 || 3 * x * x < -A * n * n;
}

} // namespace

periods::BasicRealRootTriple<Mpfr50> real_roots(WeierstrassCurve const & curve)
{
    require_three_real_roots(curve);
    Mpfr50 A(curve.A().get_str());
    Mpfr50 B(curve.B().get_str());
    Mpfr50 c = sqrt(-A / 3);
    BigInt bound = 1 + std::max(abs(curve.A()), abs(curve.B()));
    Mpfr50 R(bound.get_str());
    return {bisect(-R, -c, A, B), bisect(-c, c, A, B), bisect(c, R, A, B)};
}

long double legendre_lambda(WeierstrassCurve const & curve)
{
    auto r = real_roots(curve);
    Mpfr50 lam = (r.e2 - r.e1) / (r.e3 - r.e1);
    return lam.convert_to<long double>();
}

std::uint64_t nu(WeierstrassCurve const & curve, std::uint64_t n)
{
    require_three_real_roots(curve);
    require(n >= 1, "nu needs n >= 1");
    auto roots = real_roots(curve);
    Mpfr50 nn(static_cast<double>(n));
    std::int64_t lo = floor_to_int64(nn * roots.e1) - 1;
    std::int64_t hi = floor_to_int64(nn * roots.e2) + 2;

    std::uint64_t count = 0;
    BigInt Rb = 1 + std::max(abs(curve.A()), abs(curve.B()));
    bool native = fits_int64(Rb) && Rb < (BigInt(1) << 40) && BigInt(n) * Rb < (BigInt(1) << 40);
    if (native) {
        i128 A = to_int64(curve.A());
        i128 B = to_int64(curve.B());
        i128 N = static_cast<i128>(n);
        i128 An2 = A * N * N;
        i128 Bn3 = B * N * N * N;
        for (std::int64_t x = lo; x <= hi; ++x) {
            if (gcd_u64(static_cast<std::uint64_t>(x < 0 ? -x : x), n) != 1)
                continue;
            i128 X = x;
            if (!below_local_min<i128>(X, A, N))
                continue;
            i128 rhs = X * X * X + An2 * X + Bn3;
            if (rhs < 0)
                continue;
            if (is_perfect_square(static_cast<u128>(rhs)))
                count += rhs == 0 ? 1 : 2;
        }
        return count;
    }
    BigInt N(static_cast<unsigned long>(n));
    BigInt An2 = curve.A() * N * N;
    BigInt Bn3 = curve.B() * N * N * N;
    for (std::int64_t x = lo; x <= hi; ++x) {
        if (gcd_u64(static_cast<std::uint64_t>(x < 0 ? -x : x), n) != 1)
            continue;
        BigInt X = big(x);
        if (!below_local_min<BigInt>(X, curve.A(), N))
            continue;
        BigInt rhs = X * X * X + An2 * X + Bn3;
        if (sign(rhs) < 0)
            continue;
        if (is_perfect_square(rhs))
            count += rhs == 0 ? 1 : 2;
    }
    return count;
}

std::vector<std::uint64_t> nu_cumulative(WeierstrassCurve const & curve, std::uint64_t N)
{
    require(N >= 1, "N must be at least 1");
    std::vector<std::uint64_t> out;
    out.reserve(N);
    std::uint64_t total = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        total += nu(curve, n);
        out.push_back(total);
    }
    return out;
}

long double duke_partial_sum(WeierstrassCurve const & curve, std::uint64_t N)
{
    auto cum = nu_cumulative(curve, N);
    return static_cast<long double>(cum.back()) / std::sqrt(static_cast<long double>(N));
}

long double duke_rhs(WeierstrassCurve const & curve, Rational const & h_E)
{
    require_three_real_roots(curve);
    require(sign(h_E) >= 0, "h_E must be nonnegative");
    require(mpz_fits_ulong_p(curve.discriminant().get_mpz_t()) != 0, "discriminant too large for psi");
    auto r = real_roots(curve);
    Mpfr50 omega = periods::real_period_roots<Mpfr50>(r);
    auto D = static_cast<std::uint64_t>(mpz_get_ui(curve.discriminant().get_mpz_t()));
    long double p = pi<long double>();
    long double value = 3.0L * static_cast<long double>(D) * omega.convert_to<long double>() /
                        (2.0L * p * p * static_cast<long double>(psi(D)));
    return value * to_real<long double>(h_E);
}

std::array<BigInt, 5> BinaryQuarticForm::expanded() const
{
    return {a, 4 * b, 6 * c, 4 * d, e};
}

BigInt BinaryQuarticForm::operator()(BigInt const & x, BigInt const & y) const
{
    auto E = expanded();
    BinaryPoly<BigInt> p{{E.begin(), E.end()}};
    return p(x, y);
}

BigInt BinaryQuarticForm::content() const
{
    BigInt g = 0;
    for (auto const & v : expanded())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

QuarticInvariants quartic_invariants(BinaryQuarticForm const & f)
{
    auto const & [a, b, c, d, e] = f;
    BigInt I = a * e - 4 * b * d + 3 * c * c;
    BigInt J = a * c * e + 2 * b * c * d - a * d * d - b * b * e - c * c * c;
    return {I, J};
}

BigInt quartic_syzygy_delta(BigInt const & I, BigInt const & J)
{
    return I * I * I - 27 * J * J;
}

BinaryQuarticForm act(BinaryQuarticForm const & f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s)
{
    std::int64_t det = p * s - q * r;
    require(det == 1 || det == -1, "matrix must be unimodular");
    auto E = f.expanded();
    auto t = cubic::detail::substitute(std::vector<BigInt>(E.begin(), E.end()), p, q, r, s);
    return {t[0], BigInt(t[1] / 4), BigInt(t[2] / 6), BigInt(t[3] / 4), t[4]};
}

namespace {

using RPoly = std::vector<Rational>; // highest degree first

void trim(RPoly & p)
{
    auto it = std::find_if(p.begin(), p.end(), [](Rational const & c) { return sign(c) != 0; });
    p.erase(p.begin(), it);
}

RPoly derivative(RPoly const & p)
{
    RPoly d;
    std::size_t n = p.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(p[i] * static_cast<long>(n - i));
    return d;
}

// Remainder of a divided by b (b nonzero).
RPoly remainder(RPoly a, RPoly const & b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a[0] / b[0];
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i] -= f * b[i];
        a.erase(a.begin());
        trim(a);
    }
    return a;
}

int sign_changes(std::vector<int> const & signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// Distinct real roots via the Sturm chain p, p', -rem, ...
int count_real_roots(RPoly p)
{
    trim(p);
    if (p.size() <= 1)
        return 0;
    std::vector<RPoly> chain{p, derivative(p)};
    while (chain.back().size() > 1) {
        RPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break;
        for (auto & c : r)
            c = -c;
        chain.push_back(r);
    }
    std::vector<int> at_neg, at_pos;
    for (auto const & q : chain) {
        int lead = sign(q[0]);
        int deg = static_cast<int>(q.size()) - 1;
        at_pos.push_back(lead);
        at_neg.push_back(deg % 2 == 0 ? lead : -lead);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

struct SmallQuartic
{
    std::int64_t a, b, c, d, e;
    auto operator<=>(SmallQuartic const &) const = default;
};

SmallQuartic small_act(SmallQuartic const & f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s)
{
    std::vector<i128> E{f.a, 4 * static_cast<i128>(f.b), 6 * static_cast<i128>(f.c), 4 * static_cast<i128>(f.d), f.e};
    auto t = cubic::detail::substitute(E, p, q, r, s);
    return {static_cast<std::int64_t>(t[0]), static_cast<std::int64_t>(t[1] / 4), static_cast<std::int64_t>(t[2] / 6),
            static_cast<std::int64_t>(t[3] / 4), static_cast<std::int64_t>(t[4])};
}

BinaryQuarticForm to_big(SmallQuartic const & f)
{
    return {big(f.a), big(f.b), big(f.c), big(f.d), big(f.e)};
}

} // namespace

bool is_positive_definite(BinaryQuarticForm const & f)
{
    if (sign(f.a) <= 0 || sign(f.e) <= 0)
        return false;
    auto E = f.expanded();
    RPoly p(E.begin(), E.end());
    return count_real_roots(p) == 0;
}

HurwitzCount hurwitz_quartic_count(BigInt const & I0, BigInt const & J0, std::int64_t coeff_box, std::int64_t matrix_box)
{
    require(coeff_box >= 1 && matrix_box >= 1, "boxes must be at least 1");
    require(coeff_box <= 40 && matrix_box <= 12, "boxes too large for desk-scale enumeration");

    std::vector<SmallQuartic> found;
    std::int64_t B = coeff_box;
    // |I| <= 7 B^2 inside the box.
    if (!fits_int64(I0))
        return {Rational(0), {}};
    std::int64_t i0 = to_int64(I0);
    for (std::int64_t a = 1; a <= B; ++a)
        for (std::int64_t b = -B; b <= B; ++b)
            for (std::int64_t c = -B; c <= B; ++c)
                for (std::int64_t d = -B; d <= B; ++d)
                    for (std::int64_t e = 1; e <= B; ++e) {
                        if (a * e - 4 * b * d + 3 * c * c != i0)
                            continue;
                        SmallQuartic f{a, b, c, d, e};
                        auto inv = quartic_invariants(to_big(f));
                        if (inv.J != J0 || !is_positive_definite(to_big(f)))
                            continue;
                        found.push_back(f);
                    }

    std::vector<std::array<std::int64_t, 4>> sl2;
    for (std::int64_t p = -matrix_box; p <= matrix_box; ++p)
        for (std::int64_t q = -matrix_box; q <= matrix_box; ++q)
            for (std::int64_t r = -matrix_box; r <= matrix_box; ++r)
                for (std::int64_t s = -matrix_box; s <= matrix_box; ++s)
                    if (p * s - q * r == 1)
                        sl2.push_back({p, q, r, s});

    std::map<SmallQuartic, std::size_t> index;
    for (std::size_t i = 0; i < found.size(); ++i)
        index[found[i]] = i;
    std::vector<std::size_t> parent(found.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    std::vector<std::uint64_t> aut(found.size(), 0);
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (auto const & m : sl2) {
            SmallQuartic g = small_act(found[i], m[0], m[1], m[2], m[3]);
            if (g == found[i])
                ++aut[i];
            auto it = index.find(g);
            if (it != index.end()) {
                std::size_t x = root(i), y = root(it->second);
                if (x != y)
                    parent[std::max(x, y)] = std::min(x, y);
            }
        }
    }

    HurwitzCount out{Rational(0), {}};
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (root(i) != i)
            continue;
        // found is in lexicographic order, so the class root is its smallest member.
        out.classes.push_back({to_big(found[i]), aut[i]});
        out.weighted += Rational(2, static_cast<unsigned long>(aut[i]));
    }
    out.weighted.canonicalize();
    return out;
}

} // namespace mordell::twists
