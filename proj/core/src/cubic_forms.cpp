#include "mordell/cubic_forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace mordell::cubic {

namespace {

using Key = std::array<std::int64_t, 4>;

struct DisjointSets
{
    std::vector<std::size_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t i)
    {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

std::int64_t small_discriminant(Key const & f)
{
    auto [a, b, c, d] = f;
    return -27 * (a * a * d * d - 6 * a * b * c * d - 3 * b * b * c * c + 4 * a * c * c * c + 4 * b * b * b * d);
}

// Action on small binomial coefficient vectors. Returns false when the
// image leaves the binomial lattice (never happens for integral forms).
bool small_act(Key const & f, UnimodularMatrix const & m, Key & out)
{
    std::vector<std::int64_t> e{f[0], 3 * f[1], 3 * f[2], f[3]};
    auto img = detail::substitute(e, m.p, m.q, m.r, m.s);
    if (img[1] % 3 != 0 || img[2] % 3 != 0)
        return false;
    out = {img[0], img[1] / 3, img[2] / 3, img[3]};
    return true;
}

} // namespace

UnimodularMatrix::UnimodularMatrix(std::int64_t p_, std::int64_t q_, std::int64_t r_, std::int64_t s_)
    : p(p_), q(q_), r(r_), s(s_)
{
    std::int64_t dt = p * s - q * r;
    require(dt == 1 || dt == -1, "matrix must have determinant +1 or -1");
}

std::vector<UnimodularMatrix> unimodular_matrices(std::int64_t bound, bool sl2_only)
{
    std::vector<UnimodularMatrix> out;
    for (std::int64_t p = -bound; p <= bound; ++p)
        for (std::int64_t q = -bound; q <= bound; ++q)
            for (std::int64_t r = -bound; r <= bound; ++r)
                for (std::int64_t s = -bound; s <= bound; ++s) {
                    std::int64_t dt = p * s - q * r;
                    if (dt == 1 || (!sl2_only && dt == -1))
                        out.emplace_back(p, q, r, s);
                }
    return out;
}

BigInt detail::exact_third(BigInt const & v)
{
    require(mpz_divisible_ui_p(v.get_mpz_t(), 3) != 0, "transformed form left the binomial lattice");
    BigInt r;
    mpz_divexact_ui(r.get_mpz_t(), v.get_mpz_t(), 3);
    return r;
}

MordellImage to_mordell(BinaryCubicForm const & f, BigInt const & x0, BigInt const & y0)
{
    BigInt D = discriminant(f);
    if (D == 0 || mpz_divisible_ui_p(D.get_mpz_t(), 108) == 0)
        throw NonIntegralKError("discriminant " + to_string(D) + " is not a nonzero multiple of 108");
    BigInt value = f(x0, y0);
    if (value != 1)
        throw NonUnitValueError("F(x0, y0) = " + to_string(value) + ", expected 1");

    BigInt X = hessian(f).poly()(x0, y0);
    BigInt G1 = covariant_g(f).poly()(x0, y0);
    // F(x0, y0) = 1 and 4 | D/27 force G1 to be even.
    require(mpz_even_p(G1.get_mpz_t()) != 0, "G1(x0, y0) is odd");
    BigInt Y = G1 / 2;
    BigInt k = -D / 108;
    return {X, Y, k};
}

BinaryCubicForm from_mordell(BigInt const & X, BigInt const & Y)
{
    return {BigInt(1), BigInt(0), BigInt(-X), BigInt(-2 * Y)};
}

std::vector<BinaryCubicForm> cubic_classes(BigInt const & k, std::int64_t coeff_box, std::int64_t matrix_box)
{
    require(coeff_box >= 1, "coefficient box must be at least 1");
    require(matrix_box >= 1, "matrix box must be at least 1");
    require(sign(k) != 0, "k must be nonzero");

    BigInt target_big = -108 * k;
    if (!fits_int64(target_big))
        return {};
    std::int64_t target = to_int64(target_big);

    std::vector<Key> forms;
    std::map<Key, std::size_t> index;
    for (std::int64_t a = -coeff_box; a <= coeff_box; ++a)
        for (std::int64_t b = -coeff_box; b <= coeff_box; ++b)
            for (std::int64_t c = -coeff_box; c <= coeff_box; ++c)
                for (std::int64_t d = -coeff_box; d <= coeff_box; ++d) {
                    Key f{a, b, c, d};
                    if (small_discriminant(f) == target) {
                        index.emplace(f, forms.size());
                        forms.push_back(f);
                    }
                }

    DisjointSets sets(forms.size());
    auto matrices = unimodular_matrices(matrix_box);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        for (auto const & m : matrices) {
            Key img;
            if (!small_act(forms[i], m, img))
                continue;
            if (auto it = index.find(img); it != index.end())
                sets.unite(i, it->second);
        }
    }

    // forms is in lexicographic order, and unite keeps the smaller index as
    // root, so each root is its class's smallest member.
    std::vector<BinaryCubicForm> reps;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (sets.find(i) == i)
            reps.push_back({big(forms[i][0]), big(forms[i][1]), big(forms[i][2]), big(forms[i][3])});
    }
    return reps;
}

std::uint64_t count_h3(BigInt const & k, std::int64_t coeff_box, std::int64_t matrix_box)
{
    return cubic_classes(k, coeff_box, matrix_box).size();
}

BigInt bennett_point_bound(BigInt const & h3)
{
    require(sign(h3) >= 0, "h3 must be nonnegative");
    BigInt r = 10 * h3;
    return r;
}

} // namespace mordell::cubic
