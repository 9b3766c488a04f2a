// One line per acceptance criterion; nonzero exit if any fails.

#include "mordell/bound_evals.hpp"
#include "mordell/class_field.hpp"
#include "mordell/cubic_forms.hpp"
#include "mordell/lucas_quartic.hpp"
#include "mordell/mordell_search.hpp"
#include "mordell/periods.hpp"
#include "mordell/silverman.hpp"
#include "mordell/twists.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mordell;

namespace {

struct Outcome
{
    bool pass;
    std::string detail;
};

using Criterion = std::function<Outcome()>;

search::SearchOptions all_threads()
{
    search::SearchOptions o;
    o.threads = 0;
    return o;
}

Outcome classification_m1()
{
    auto start = std::chrono::steady_clock::now();
    auto c = search::classify_both(1, {-119, 119}, search::SearchWindow::symmetric(1'000'000), all_threads());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = c.including_infinity == std::vector<std::int64_t>{3, 8, 17} &&
              c.excluding_infinity == std::vector<std::int64_t>{-4, -2, -1, 2} && secs < 300;
    std::ostringstream os;
    os << "incl=" << c.including_infinity.size() << " excl=" << c.excluding_infinity.size() << " in " << secs << "s";
    return {ok, os.str()};
}

Outcome classification_m2()
{
    auto w = search::SearchWindow::symmetric(1'000'000);
    auto incl = search::classify_multiples(2, {-119, 119}, true, w, all_threads());
    auto excl = search::classify_multiples(2, {-119, 119}, false, w, all_threads());
    bool ok = incl == std::vector<std::int64_t>{-1} && excl.empty();
    return {ok, "incl=" + std::to_string(incl.size()) + " excl=" + std::to_string(excl.size())};
}

Outcome thresholds()
{
    auto r = field::solve_threshold(field::ThresholdKind::real);
    auto i = field::solve_threshold(field::ThresholdKind::imaginary);
    return {r == 119 && i == 116, "real=" + std::to_string(r) + " imaginary=" + std::to_string(i)};
}

Outcome cubic_syzygy()
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> u(-50, 50);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        cubic::BinaryCubicForm f{BigInt(u(rng)), BigInt(u(rng)), BigInt(u(rng)), BigInt(u(rng))};
        failures += !cubic::check_syzygy(f);
    }
    return {failures == 0, std::to_string(failures) + " failures of 1000"};
}

Outcome correspondence()
{
    // Forms with leading coefficient 1 satisfy F(1, 0) = 1.
    int images = 0, bad = 0;
    for (long b = -6; b <= 6; ++b)
        for (long c = -6; c <= 6; ++c)
            for (long d = -6; d <= 6; ++d) {
                cubic::BinaryCubicForm f{BigInt(1), BigInt(b), BigInt(c), BigInt(d)};
                BigInt D = cubic::discriminant(f);
                if (D == 0 || D % 108 != 0)
                    continue;
                auto img = cubic::to_mordell(f, BigInt(1), BigInt(0));
                ++images;
                if (img.Y * img.Y != img.X * img.X * img.X + img.k) {
                    ++bad;
                    continue;
                }
                if (!fits_int64(img.X)) {
                    ++bad;
                    continue;
                }
                auto x = to_int64(img.X);
                auto pts = search::integral_points(search::MordellCurve(img.k), search::SearchWindow(x, x));
                bool found = false;
                for (auto const & p : pts)
                    found = found || (p.x == img.X && p.y == img.Y);
                bad += !found;
            }
    return {bad == 0 && images > 0, std::to_string(images) + " images, " + std::to_string(bad) + " bad"};
}

Outcome class_numbers()
{
    int bad = 0, tested = 0;
    for (std::int64_t d = -3; d > -10'000; --d) {
        if (!field::is_fundamental_discriminant(d))
            continue;
        ++tested;
        bad += field::class_number_analytic(d) != field::class_number(d);
    }
    bad += field::class_number(-4) != 1;
    bad += field::class_number(-23) != 3;
    bad += field::class_number(5) != 1;
    int louboutin_bad = 0;
    for (std::int64_t d = -1000; d <= 1000; ++d) {
        if (!field::is_fundamental_discriminant(d))
            continue;
        auto parity = d > 0 ? field::Parity::even : field::Parity::odd;
        louboutin_bad += std::fabs(field::dirichlet_L1(d)) > field::louboutin_bound(std::abs(d), parity);
    }
    int le_bad = 0;
    for (std::int64_t d = 5; d <= 10'000; ++d)
        if (field::is_fundamental_discriminant(d))
            le_bad += static_cast<std::int64_t>(field::class_number(d)) > field::le_bound(d);
    std::ostringstream os;
    os << tested << " imaginary discriminants, mismatches=" << bad << " louboutin=" << louboutin_bad
       << " le=" << le_bad;
    return {bad == 0 && louboutin_bad == 0 && le_bad == 0, os.str()};
}

Outcome period_identities()
{
    using boost::math::quadrature::gauss_kronrod;
    long double const pi_ = pi<long double>();
    long double worst_f = 0, worst_k = 0;
    double worst_q = 0;
    for (int i = 1; i <= 99; ++i) {
        long double lam = i / 100.0L;
        periods::LegendreLambda L(lam);
        long double a = pi_ * periods::gauss_2f1_half(L);
        long double b = pi_ / periods::agm(1.0L, std::sqrt(1 - lam));
        worst_f = std::max(worst_f, std::fabs(a - b));
        long double om = periods::real_period_lambda(L);
        worst_k = std::max(worst_k, std::fabs(2 * periods::elliptic_K(std::sqrt(lam)) - om));
        double l = static_cast<double>(lam);
        auto f = [l](double t) { return 2.0 / std::sqrt(1.0 - l * std::cos(t) * std::cos(t)); };
        double q = gauss_kronrod<double, 61>::integrate(f, 0.0, M_PI / 2, 15, 1e-14);
        worst_q = std::max(worst_q, std::fabs(q - static_cast<double>(om)));
    }
    std::ostringstream os;
    os << "2F1 " << static_cast<double>(worst_f) << ", 2K-Omega " << static_cast<double>(worst_k) << ", quadrature "
       << worst_q;
    return {worst_f <= 1e-10L && worst_k <= 1e-10L && worst_q <= 1e-9, os.str()};
}

Outcome bound_inequalities()
{
    int alzer_bad = 0, zhang_bad = 0;
    for (int i = 1; i <= 99; ++i) {
        long double r = i / 100.0L;
        long double K = periods::elliptic_K(r);
        alzer_bad += !(K < periods::alzer_rhs(r));
        zhang_bad += !(K < periods::zhang_rhs(r));
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1e-3, 1e3);
    int agm_bad = 0;
    for (int i = 0; i < 10'000; ++i) {
        long double a = u(rng), b = u(rng);
        agm_bad += periods::agm(a, b) < periods::log_mean(a, b);
    }
    twists::WeierstrassCurve E(BigInt(-1), BigInt(0));
    long double lhs = twists::duke_partial_sum(E, 10'000);
    long double rhs = periods::bound_thm32(64.0L, periods::LegendreLambda(0.5L));
    std::ostringstream os;
    os << "alzer violations=" << alzer_bad << " zhang violations=" << zhang_bad << "/99 agm violations=" << agm_bad
       << " duke " << static_cast<double>(lhs) << " <= " << static_cast<double>(rhs);
    return {alzer_bad == 0 && zhang_bad == 0 && agm_bad == 0 && lhs <= rhs, os.str()};
}

Outcome lucas_quartic()
{
    using namespace lucas;
    bool ok = find_square_u(LucasContext(1), 200) == std::vector<std::int64_t>{1};
    ok = ok && find_square_u(LucasContext(2), 200) == std::vector<std::int64_t>{1, 7};
    for (std::int64_t t : {1, 3, 5, 6})
        ok = ok && quartic_points(QuarticCurve(t, 1), 100'000).size() == 1;
    ok = ok && quartic_points(QuarticCurve(2, 1), 100'000).size() == 2;
    int identity_bad = 0;
    for (std::int64_t t = 1; t <= 50; ++t) {
        BigInt disc = BigInt(t) * t + 4;
        auto tab = lucas_table(LucasContext(t), 60);
        for (std::size_t j = 0; j < tab.size(); ++j) {
            auto const & [uj, vj] = tab[j];
            identity_bad += vj * vj - disc * uj * uj != (j % 2 == 0 ? 4 : -4);
        }
    }
    auto dens = lucas_prime_density(100);
    ok = ok && identity_bad == 0 && dens.rho == 2 && dens.pi == 25;
    return {ok, "identity failures=" + std::to_string(identity_bad) + " rho(100)=" + std::to_string(dens.rho) +
                    " pi(100)=" + std::to_string(dens.pi)};
}

Outcome silverman_suite()
{
    using namespace silverman;
    int fixtures = 0, bad = 0;
    for (auto const & f : rational_point_fixtures(-50, 50, 400)) {
        auto sf = build_form(f.D, f.P);
        ++fixtures;
        bad += cubic::discriminant(sf.form) != -432 * Rational(f.D) * f.P.t * f.P.t;
        bad += !check_modified_syzygy(sf);
        auto o = origin_preimage(sf);
        bad += !on_projective_mordell(lambda_map(sf, o[0], o[1], o[2]), f.D);
        for (auto const & q : points_on_c(sf, 10))
            bad += !on_projective_mordell(lambda_map(sf, q[0], q[1], q[2]), f.D);
    }
    bool exps = lower_bound_exponent(17) == Rational(17, 19) && lower_bound_exponent(11) == Rational(11, 13);
    return {fixtures >= 50 && bad == 0 && exps,
            std::to_string(fixtures) + " fixtures, " + std::to_string(bad) + " failures"};
}

Outcome bound_evaluators()
{
    using namespace bounds;
    int bennett_bad = 0;
    std::vector<std::array<std::int64_t, 4>> corpus{{1, 0, 0, 1}, {1, 0, 0, 2}, {1, -1, 0, -12}, {1, 0, -3, 1}};
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> u(-9, 9);
    while (corpus.size() < 20) {
        std::array<std::int64_t, 4> F{u(rng), u(rng), u(rng), u(rng)};
        BigInt A = F[0], B = F[1], C = F[2], D = F[3];
        if (B * B * C * C - 4 * A * C * C * C - 4 * B * B * B * D - 27 * A * A * D * D + 18 * A * B * C * D != 0)
            corpus.push_back(F);
    }
    for (auto const & F : corpus)
        for (auto [m, n] : coprime_representation_counts(F, 100, 300))
            bennett_bad += BigInt(static_cast<unsigned long>(n)) > bennett_cubic_bound(BigInt(m));

    set_mpfr_precision_bits(160);
    long double worst = 0;
    for (auto [a, b] : std::vector<std::pair<long, long>>{{-1, 0}, {1, 1}, {-7, 6}, {0, 17}, {-2, 1}}) {
        MpfrReal A(a), B(b);
        MpfrReal delta = abs(-4 * A * A * A - 27 * B * B);
        MpfrReal c1 = 32 * sqrt(delta) * pow(8 + log(delta) / 2, 4) / 3;
        MpfrReal t1 = 16 * A * A, t2 = 256 * pow(delta, MpfrReal(2) / 3);
        MpfrReal c2 = 10000 * (t1 > t2 ? t1 : t2);
        MpfrReal lb = MpfrReal("5e64") * c1 * log(c1 + log(c2));
        auto got = hajdu_herendi<long double>(BigInt(a), BigInt(b));
        worst = std::max(worst, std::fabs(got.log_bound / lb.convert_to<long double>() - 1));
    }
    for (unsigned rank : {0u, 1u, 3u})
        for (unsigned S : {0u, 2u}) {
            MpfrReal ref = rank * log(MpfrReal(2)) + (2 * S + 1) * 128 * log(MpfrReal(7)) + log(MpfrReal(5));
            long double got = alpoge_ho_S_bound<long double>(rank, S, BigInt(5));
            worst = std::max(worst, std::fabs(got / ref.convert_to<long double>() - 1));
        }
    bool j = j_invariant(BigInt(0), BigInt(7)) == 0 && j_invariant(BigInt(-3), BigInt(0)) == 1728;
    std::ostringstream os;
    os << "bennett violations=" << bennett_bad << " worst relative error=" << static_cast<double>(worst);
    return {bennett_bad == 0 && worst < 1e-9L && j, os.str()};
}

} // namespace

int main()
{
    std::vector<Criterion> criteria{classification_m1, classification_m2, thresholds,         cubic_syzygy,
                                    correspondence,    class_numbers,     period_identities,  bound_inequalities,
                                    lucas_quartic,     silverman_suite,   bound_evaluators};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (std::exception const & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
