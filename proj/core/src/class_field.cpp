#include "mordell/class_field.hpp"

#include <algorithm>
#include <tuple>

namespace mordell::field {

namespace {

constexpr int kKroneckerTwo[8] = {0, 1, 0, -1, 0, -1, 0, 1};

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// u a + v b = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> xgcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
        std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
    }
    if (old_r < 0)
        return {-old_s, -old_t, -old_r};
    return {old_s, old_t, old_r};
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c)
{
    auto g = gcd_u64(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b));
    g = gcd_u64(g, static_cast<std::uint64_t>(c < 0 ? -c : c));
    return static_cast<std::int64_t>(g);
}

void require_negative_fundamental(std::int64_t delta)
{
    require(delta < 0 && is_fundamental_discriminant(delta), "delta must be a negative fundamental discriminant");
}

} // namespace

NotSquarefreeError::NotSquarefreeError(std::int64_t k, std::int64_t squarefree_part)
    : PreconditionError("k = " + std::to_string(k) + " is not square-free (square-free part " +
                        std::to_string(squarefree_part) + ")"),
      part_(squarefree_part)
{
}

int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    if (((a | n) & 1) == 0)
        return 0;
    int k = 1;
    int v = 0;
    while ((n & 1) == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1)
        k = kKroneckerTwo[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0)
            k = -k;
    }
    a = mod_nonneg(a, n);
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1)
            k *= kKroneckerTwo[n & 7];
        if (a & n & 2)
            k = -k;
        std::int64_t r = n % a;
        n = a;
        a = r;
    }
    return n == 1 ? k : 0;
}

FundamentalDiscriminant fundamental_discriminant(std::int64_t k)
{
    require(k != 0, "k must be nonzero");
    auto [core, f] = squarefree_decomposition(k);
    if (f != 1)
        throw NotSquarefreeError(k, core);
    require(k != 1, "k = 1 does not define a quadratic field");
    return {k, mod_nonneg(k, 4) == 1 ? k : 4 * k};
}

bool is_fundamental_discriminant(std::int64_t delta)
{
    if (delta == 0 || delta == 1)
        return false;
    std::int64_t r = mod_nonneg(delta, 4);
    if (r == 1)
        return squarefree_decomposition(delta).second == 1;
    if (r != 0)
        return false;
    std::int64_t m = delta / 4;
    std::int64_t rm = mod_nonneg(m, 4);
    return (rm == 2 || rm == 3) && squarefree_decomposition(m).second == 1;
}

ReducedQuadraticForm reduce(ReducedQuadraticForm f)
{
    require(f.A > 0 && f.discriminant() < 0, "reduce expects a positive definite form");
    auto normalize = [](ReducedQuadraticForm & g) {
        // x -> x + q y moves B into (-A, A].
        std::int64_t q = floor_div(g.A - g.B, 2 * g.A);
        g.C = static_cast<std::int64_t>(static_cast<i128>(g.A) * q * q + static_cast<i128>(g.B) * q + g.C);
        g.B += 2 * g.A * q;
    };
    normalize(f);
    while (f.A > f.C) {
        std::swap(f.A, f.C);
        f.B = -f.B;
        normalize(f);
    }
    if (f.A == f.C && f.B < 0)
        f.B = -f.B;
    return f;
}

ReducedQuadraticForm compose(ReducedQuadraticForm const & f, ReducedQuadraticForm const & g)
{
    std::int64_t delta = f.discriminant();
    require(delta == g.discriminant(), "composition needs equal discriminants");
    ReducedQuadraticForm f1 = f, f2 = g;
    if (f1.A > f2.A)
        std::swap(f1, f2);
    std::int64_t s = (f1.B + f2.B) / 2;
    std::int64_t n = f2.B - s;

    std::int64_t y1 = 0;
    std::int64_t d = f1.A;
    if (f2.A % f1.A != 0) {
        auto [u, v, g0] = xgcd(f2.A, f1.A);
        (void)v;
        y1 = u;
        d = g0;
    }
    std::int64_t x2 = 0;
    std::int64_t y2 = -1;
    std::int64_t d1 = d;
    if (s % d != 0) {
        auto [a, b, g1] = xgcd(s, d);
        x2 = a;
        y2 = -b;
        d1 = g1;
    }
    std::int64_t v1 = f1.A / d1;
    std::int64_t v2 = f2.A / d1;
    i128 rr = (static_cast<i128>(y1) * y2 % v1) * n - static_cast<i128>(x2) * f2.C;
    rr %= v1;
    if (rr < 0)
        rr += v1;
    auto r = static_cast<std::int64_t>(rr);

    ReducedQuadraticForm out;
    out.A = v1 * v2;
    out.B = f2.B + 2 * v2 * r;
    i128 num = static_cast<i128>(out.B) * out.B - delta;
    out.C = static_cast<std::int64_t>(num / (4 * static_cast<i128>(out.A)));
    return reduce(out);
}

ReducedQuadraticForm principal_form(std::int64_t delta)
{
    std::int64_t b = mod_nonneg(delta, 2);
    return {1, b, (b * b - delta) / 4};
}

std::vector<ReducedQuadraticForm> reduced_forms(std::int64_t delta)
{
    require(delta < 0 && mod_nonneg(delta, 4) <= 1, "delta must be negative and congruent to 0 or 1 mod 4");
    std::vector<ReducedQuadraticForm> out;
    std::int64_t q = -delta;
    for (std::int64_t a = 1; 3 * a * a <= q; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (mod_nonneg(b - delta, 2) != 0)
                continue;
            std::int64_t num = b * b - delta;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            if (gcd3(a, b, c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int automorphism_count(std::int64_t delta)
{
    require(delta < 0, "automorphism count is defined for negative discriminants");
    if (delta == -3)
        return 6;
    if (delta == -4)
        return 4;
    return 2;
}

ClassGroupDescription class_group(std::int64_t delta)
{
    require_negative_fundamental(delta);
    require(delta >= -1'000'000, "class_group is limited to |delta| <= 10^6");

    auto forms = reduced_forms(delta);
    ReducedQuadraticForm const id = principal_form(delta);

    std::uint64_t h = forms.size();
    std::vector<std::uint64_t> order(h, 0);
    for (std::size_t i = 0; i < h; ++i) {
        ReducedQuadraticForm acc = forms[i];
        std::uint64_t k = 1;
        while (!(acc == id)) {
            acc = compose(acc, forms[i]);
            ++k;
            require(k <= h, "composition failed to close up (internal error)");
        }
        order[i] = k;
    }

    // Per prime p | h: n_i = #{g : g^(p^i) = 1}; log_p(n_i / n_{i-1}) counts
    // cyclic factors of exponent >= i.
    std::vector<std::vector<std::uint64_t>> p_parts;
    for (auto const & [p, e] : factor_u64(h)) {
        std::vector<unsigned> at_least;
        std::uint64_t prev = 1;
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            std::uint64_t cnt = 0;
            for (auto o : order)
                if (pk % o == 0)
                    ++cnt;
            unsigned r = 0;
            for (std::uint64_t ratio = cnt / prev; ratio > 1; ratio /= p)
                ++r;
            at_least.push_back(r);
            prev = cnt;
        }
        std::vector<std::uint64_t> cyclic; // descending sizes
        for (std::size_t i = 0; i < at_least.size(); ++i) {
            unsigned exactly = at_least[i] - (i + 1 < at_least.size() ? at_least[i + 1] : 0);
            std::uint64_t size = 1;
            for (std::size_t j = 0; j <= i; ++j)
                size *= p;
            for (unsigned j = 0; j < exactly; ++j)
                cyclic.push_back(size);
        }
        std::sort(cyclic.rbegin(), cyclic.rend());
        p_parts.push_back(std::move(cyclic));
    }

    std::size_t rank = 0;
    for (auto const & part : p_parts)
        rank = std::max(rank, part.size());
    std::vector<std::uint64_t> invariants(rank, 1);
    for (auto const & part : p_parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            invariants[i] *= part[i];
    std::reverse(invariants.begin(), invariants.end());
    return {h, invariants};
}

PellUnit fundamental_unit(std::int64_t delta)
{
    require(delta > 0 && is_fundamental_discriminant(delta), "delta must be a positive fundamental discriminant");
    // Continued fraction of omega = (b + sqrt(delta)) / 2, b = delta mod 2,
    // tracking alpha_n = (P + sqrt(delta)) / Q. The first convergent p/q
    // with N(p - q omega) = +-1 yields the fundamental unit p - q omega-bar.
    std::int64_t const b = delta % 2;
    BigInt const D = big(delta);
    BigInt const s = isqrt(D);
    BigInt const omega_norm = big((b * b - delta) / 4); // omega * omega-bar

    BigInt P = big(b);
    BigInt Q = 2;
    BigInt pm2 = 0, pm1 = 1, qm2 = 1, qm1 = 0;
    for (int guard = 0; guard < 10'000'000; ++guard) {
        BigInt a;
        if (sign(Q) > 0)
            mpz_fdiv_q(a.get_mpz_t(), BigInt(P + s).get_mpz_t(), Q.get_mpz_t());
        else
            mpz_fdiv_q(a.get_mpz_t(), BigInt(P + s + 1).get_mpz_t(), Q.get_mpz_t());
        BigInt pn = a * pm1 + pm2;
        BigInt qn = a * qm1 + qm2;
        BigInt norm = pn * pn - big(b) * pn * qn + omega_norm * qn * qn;
        if (norm == 1 || norm == -1) {
            BigInt x = 2 * pn - big(b) * qn;
            return {x, qn, norm == 1 ? 1 : -1};
        }
        pm2 = pm1;
        pm1 = pn;
        qm2 = qm1;
        qm1 = qn;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw PrecisionError("continued fraction did not reach a unit");
}

std::int64_t weighted_character_sum(std::int64_t delta)
{
    std::int64_t q = delta < 0 ? -delta : delta;
    std::int64_t acc = 0;
    for (std::int64_t n = 1; n < q; ++n)
        acc += kronecker(delta, n) * n;
    return acc;
}

std::uint64_t class_number(std::int64_t delta)
{
    require(is_fundamental_discriminant(delta), "delta must be a fundamental discriminant");
    if (delta < 0)
        return reduced_forms(delta).size();
    return class_number_analytic<DefaultReal>(delta);
}

std::uint64_t three_part(std::int64_t delta)
{
    std::uint64_t h = class_number(delta);
    std::uint64_t part = 1;
    while (h % 3 == 0) {
        h /= 3;
        part *= 3;
    }
    return part;
}

std::int64_t le_bound(std::int64_t delta)
{
    require(delta > 0, "Le's bound is stated for real quadratic fields");
    return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(delta)) / 2);
}

std::int64_t solve_threshold(ThresholdKind kind)
{
    auto holds = [kind](std::int64_t k) {
        long double x = static_cast<long double>(k);
        long double rhs = kind == ThresholdKind::real
                              ? 10.0L * (std::sqrt(x) + 1.0L)
                              : 10.0L * (std::sqrt(x) / pi<long double>() * (0.5L * std::log(x) + 0.716L) + 1.0L);
        return x <= rhs;
    };
    for (std::int64_t k = 1'000'000; k >= 1; --k) {
        if (holds(k))
            return k;
    }
    return 0;
}

} // namespace mordell::field
