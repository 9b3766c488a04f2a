#include "commands.hpp"

#include "mordell/bound_evals.hpp"
#include "mordell/class_field.hpp"
#include "mordell/cubic_forms.hpp"
#include "mordell/lucas_quartic.hpp"
#include "mordell/mordell_search.hpp"
#include "mordell/periods.hpp"
#include "mordell/silverman.hpp"
#include "mordell/twists.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

namespace mordell::cli {

namespace {

std::string const & text(Params const & p, std::string const & name)
{
    auto it = p.find(name);
    if (it == p.end())
        throw UsageError("missing --" + name);
    return it->second;
}

bool has(Params const & p, std::string const & name)
{
    return p.count(name) != 0;
}

BigInt big_arg(Params const & p, std::string const & name)
{
    static std::regex const integer(R"([+-]?[0-9]+)");
    auto const & s = text(p, name);
    if (!std::regex_match(s, integer))
        throw UsageError("--" + name + " expects an integer, got '" + s + "'");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

std::int64_t int_arg(Params const & p, std::string const & name)
{
    BigInt v = big_arg(p, name);
    if (!fits_int64(v))
        throw UsageError("--" + name + " does not fit in 64 bits");
    return to_int64(v);
}

std::uint64_t uint_arg(Params const & p, std::string const & name)
{
    auto v = int_arg(p, name);
    if (v < 0)
        throw UsageError("--" + name + " must be nonnegative");
    return static_cast<std::uint64_t>(v);
}

bool flag_arg(Params const & p, std::string const & name)
{
    return has(p, name) && text(p, name) == "true";
}

Rational rational_text(std::string const & s, std::string const & name)
{
    auto q = parse_rational(s);
    if (!q)
        throw UsageError("--" + name + " expects a rational p or p/q, got '" + s + "'");
    return *q;
}

std::vector<std::string> split(std::string const & s)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        out.push_back(cur);
    return out;
}

std::vector<BigInt> big_list(Params const & p, std::string const & name, std::size_t n)
{
    auto parts = split(text(p, name));
    if (parts.size() != n)
        throw UsageError("--" + name + " expects " + std::to_string(n) + " comma separated integers");
    std::vector<BigInt> out;
    for (auto const & s : parts) {
        Params one{{name, s}};
        out.push_back(big_arg(one, name));
    }
    return out;
}

template <class Real>
Real real_arg(Params const & p, std::string const & name)
{
    static std::regex const decimal(R"([+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)");
    auto const & s = text(p, name);
    if (!std::regex_match(s, decimal))
        throw UsageError("--" + name + " expects a decimal number, got '" + s + "'");
    if constexpr (std::is_same_v<Real, long double>)
        return std::stold(s);
    else
        return Real(s);
}

std::string real_text(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", x);
    return buf;
}

template <class Real>
std::string real_text(Real const & x)
{
    if constexpr (std::is_same_v<Real, long double>)
        return real_text(static_cast<long double>(x));
    else
        return x.str(0, std::ios_base::scientific);
}

template <class Real>
Json jr(Real const & x)
{
    return json_real(real_text(x));
}

Json point_json(BigInt const & x, BigInt const & y)
{
    Json j = Json::object();
    j["x"] = json_int(x);
    j["y"] = json_int(y);
    return j;
}

template <class F>
Json with_real(Context const & ctx, F && f)
{
    if (ctx.precision_bits == 0)
        return f(static_cast<long double>(0));
    return f(MpfrReal(0));
}

search::SearchOptions search_options(Context const & ctx)
{
    search::SearchOptions o;
    o.threads = ctx.threads;
    return o;
}

Json cmd_points(Params const & p, Context const & ctx)
{
    search::MordellCurve curve(big_arg(p, "k"));
    auto half = int_arg(p, "xmax");
    require(half >= 0, "--xmax must be nonnegative");
    Json out = Json::array();
    for (auto const & pt : search::integral_points(curve, search::SearchWindow::symmetric(half), search_options(ctx)))
        out.push_back(point_json(pt.x, pt.y));
    return out;
}

Json cmd_classify(Params const & p, Context const & ctx)
{
    auto m = int_arg(p, "m");
    require(m >= 1, "m must be positive");
    auto hi = int_arg(p, "kmax");
    auto lo = has(p, "kmin") ? int_arg(p, "kmin") : -hi;
    require(lo <= hi, "kmin must not exceed kmax");
    auto half = int_arg(p, "xmax");
    require(half >= 0, "--xmax must be nonnegative");
    auto ks = search::classify_multiples(static_cast<std::uint64_t>(m), {lo, hi}, flag_arg(p, "include-infinity"),
                                         search::SearchWindow::symmetric(half), search_options(ctx));
    Json out = Json::array();
    for (auto k : ks)
        out.push_back(k);
    return out;
}

Json cmd_cubic(Params const & p, Context const &)
{
    if (has(p, "form") == has(p, "k"))
        throw UsageError("cubic needs exactly one of --form or --k");
    Json out = Json::object();
    if (has(p, "k")) {
        BigInt k = big_arg(p, "k");
        auto classes = cubic::cubic_classes(k, int_arg(p, "coeff-box"), int_arg(p, "matrix-box"));
        Json reps = Json::array();
        for (auto const & f : classes)
            reps.push_back(Json::array({json_int(f.a), json_int(f.b), json_int(f.c), json_int(f.d)}));
        out["k"] = json_int(k);
        out["h3_lower"] = classes.size();
        out["classes"] = reps;
        out["bennett_bound"] = json_int(cubic::bennett_point_bound(BigInt(static_cast<unsigned long>(classes.size()))));
        return out;
    }
    auto c = big_list(p, "form", 4);
    cubic::BinaryCubicForm f{c[0], c[1], c[2], c[3]};
    auto h = cubic::hessian(f);
    auto g = cubic::covariant_g(f);
    out["form"] = Json::array({json_int(f.a), json_int(f.b), json_int(f.c), json_int(f.d)});
    out["discriminant"] = json_int(cubic::discriminant(f));
    out["hessian"] = Json::array({json_int(h.p), json_int(h.q), json_int(h.r)});
    out["covariant_g"] = Json::array({json_int(g.a1), json_int(g.b1), json_int(g.c1), json_int(g.d1)});
    out["syzygy"] = cubic::check_syzygy(f);
    if (has(p, "point")) {
        auto xy = big_list(p, "point", 2);
        auto img = cubic::to_mordell(f, xy[0], xy[1]);
        Json m = Json::object();
        m["X"] = json_int(img.X);
        m["Y"] = json_int(img.Y);
        m["k"] = json_int(img.k);
        out["mordell"] = m;
    }
    return out;
}

Json cmd_classnum(Params const & p, Context const & ctx)
{
    auto d = int_arg(p, "d");
    std::int64_t delta = field::is_fundamental_discriminant(d) ? d : field::fundamental_discriminant(d).delta;
    return with_real(ctx, [&](auto zero) {
        using Real = decltype(zero);
        Json out = Json::object();
        out["delta"] = delta;
        out["h"] = field::class_number(delta);
        out["h_analytic"] = field::class_number_analytic<Real>(delta);
        if (delta < 0)
            out["structure"] = field::class_group(delta).elementary_divisors;
        out["three_part"] = field::three_part(delta);
        Real L = field::dirichlet_L1<Real>(delta);
        out["L1"] = jr(L);
        auto q = delta < 0 ? -delta : delta;
        if (q >= 3)
            out["louboutin_bound"] =
                jr(field::louboutin_bound<Real>(q, delta > 0 ? field::Parity::even : field::Parity::odd));
        if (delta > 0) {
            auto u = field::fundamental_unit(delta);
            Json unit = Json::object();
            unit["x"] = json_int(u.x);
            unit["y"] = json_int(u.y);
            unit["norm"] = u.norm_sign;
            out["unit"] = unit;
            out["le_bound"] = field::le_bound(delta);
        }
        return out;
    });
}

Json cmd_threshold(Params const &, Context const &)
{
    Json out = Json::object();
    out["real"] = field::solve_threshold(field::ThresholdKind::real);
    out["imaginary"] = field::solve_threshold(field::ThresholdKind::imaginary);
    return out;
}

Json cmd_period(Params const & p, Context const & ctx)
{
    if (has(p, "lambda") == has(p, "curve"))
        throw UsageError("period needs exactly one of --lambda or --curve");
    return with_real(ctx, [&](auto zero) {
        using Real = decltype(zero);
        Json out = Json::object();
        if (has(p, "curve")) {
            auto ab = big_list(p, "curve", 2);
            twists::WeierstrassCurve E(ab[0], ab[1]);
            auto r = twists::real_roots(E);
            auto cv = [](Mpfr50 const & x) {
                if constexpr (std::is_same_v<Real, long double>)
                    return x.template convert_to<long double>();
                else
                    return Real(x);
            };
            periods::BasicRealRootTriple<Real> roots(cv(r.e1), cv(r.e2), cv(r.e3));
            out["roots"] = Json::array({jr(roots.e1), jr(roots.e2), jr(roots.e3)});
            out["lambda"] = jr(Real((roots.e2 - roots.e1) / (roots.e3 - roots.e1)));
            out["omega"] = jr(periods::real_period_roots(roots));
            return out;
        }
        periods::BasicLegendreLambda<Real> lam(real_arg<Real>(p, "lambda"));
        using std::sqrt;
        out["lambda"] = jr(lam.value());
        out["omega"] = jr(periods::real_period_lambda(lam));
        out["two_f1"] = jr(periods::gauss_2f1_half(lam));
        out["K"] = jr(periods::elliptic_K<Real>(sqrt(lam.value())));
        return out;
    });
}

Json cmd_bounds3(Params const & p, Context const & ctx)
{
    return with_real(ctx, [&](auto zero) {
        using Real = decltype(zero);
        using std::sqrt;
        Real D = real_arg<Real>(p, "disc");
        periods::BasicLegendreLambda<Real> lam(real_arg<Real>(p, "lambda"));
        Real r = sqrt(lam.value());
        Json out = Json::object();
        out["thm32"] = jr(periods::bound_thm32(D, lam));
        out["cor34"] = jr(periods::bound_cor34(D, lam));
        out["cor35"] = jr(periods::bound_cor35(D, lam));
        out["K"] = jr(periods::elliptic_K<Real>(r));
        out["alzer_rhs"] = jr(periods::alzer_rhs<Real>(r));
        out["zhang_rhs"] = jr(periods::zhang_rhs<Real>(r));
        return out;
    });
}

Json cmd_twists(Params const & p, Context const &)
{
    Json out = Json::object();
    if (has(p, "curve")) {
        auto ab = big_list(p, "curve", 2);
        twists::WeierstrassCurve E(ab[0], ab[1]);
        auto N = uint_arg(p, "n");
        require(N >= 1, "N must be positive");
        long double lhs = twists::duke_partial_sum(E, N);
        long double disc = to_real<long double>(BigInt(abs(E.discriminant())));
        long double rhs = periods::bound_thm32(disc, periods::LegendreLambda(twists::legendre_lambda(E)));
        out["discriminant"] = json_int(E.discriminant());
        out["lambda"] = jr(twists::legendre_lambda(E));
        out["partial_sum"] = jr(lhs);
        out["bound"] = jr(rhs);
        out["holds"] = lhs <= rhs;
        if (has(p, "h-e"))
            out["duke_rhs"] = jr(twists::duke_rhs(E, rational_text(text(p, "h-e"), "h-e")));
    }
    if (has(p, "quartic")) {
        auto ij = big_list(p, "quartic", 2);
        auto h = twists::hurwitz_quartic_count(ij[0], ij[1], int_arg(p, "coeff-box"), int_arg(p, "matrix-box"));
        Json classes = Json::array();
        for (auto const & c : h.classes) {
            auto const & f = c.representative;
            Json row = Json::object();
            row["form"] = Json::array({json_int(f.a), json_int(f.b), json_int(f.c), json_int(f.d), json_int(f.e)});
            row["automorphisms"] = c.automorphisms;
            classes.push_back(row);
        }
        out["weighted_count"] = json_rational(h.weighted);
        out["classes"] = classes;
    }
    if (out.empty())
        throw UsageError("twists needs --curve or --quartic");
    return out;
}

Json cmd_lucas(Params const & p, Context const &)
{
    auto t = int_arg(p, "t");
    auto d = int_arg(p, "d");
    auto jmax = int_arg(p, "jmax");
    auto xmax = int_arg(p, "xmax");
    lucas::LucasContext ctx(t);
    Json out = Json::object();
    out["t"] = t;
    out["d"] = d;
    out["square_indices"] = lucas::find_square_u(ctx, jmax);
    Json pts = Json::array();
    for (auto const & q : lucas::quartic_points(lucas::QuarticCurve(t, d), xmax))
        pts.push_back(point_json(q.x, q.y));
    out["points"] = pts;
    if (d == 1)
        out["bijection"] = lucas::check_bijection(ctx, jmax, xmax);
    out["premise"] = lucas::quartic_premise(t, d);
    out["unit_hypothesis"] = lucas::unit_hypothesis_holds(t);
    return out;
}

Json cmd_density(Params const & p, Context const &)
{
    auto n = uint_arg(p, "n");
    if (n > 0xffffffffu)
        throw PreconditionError("N must fit in 32 bits");
    auto N = static_cast<std::uint32_t>(n);
    auto dens = lucas::lucas_prime_density(N);
    Json out = Json::object();
    out["N"] = N;
    out["rho"] = dens.rho;
    out["pi"] = dens.pi;
    out["rho_bound"] = lucas::lucas_rho_bound(N);
    return out;
}

Json projective_json(silverman::ProjectivePoint const & q)
{
    return Json::array({json_rational(q.X), json_rational(q.Y), json_rational(q.Z)});
}

Json cmd_silverman(Params const & p, Context const &)
{
    Json out = Json::object();
    if (has(p, "point")) {
        BigInt D = big_arg(p, "D");
        auto parts = split(text(p, "point"));
        if (parts.size() != 2)
            throw UsageError("--point expects s,t");
        silverman::RationalPoint P{rational_text(parts[0], "point"), rational_text(parts[1], "point")};
        auto sf = silverman::build_form(D, P);
        out["form"] = Json::array(
            {json_rational(sf.form.a), json_rational(sf.form.b), json_rational(sf.form.c), json_rational(sf.form.d)});
        out["discriminant"] = json_rational(cubic::discriminant(sf.form));
        out["modified_syzygy"] = silverman::check_modified_syzygy(sf);
        auto o = silverman::origin_preimage(sf);
        out["origin_image"] = projective_json(silverman::lambda_map(sf, o[0], o[1], o[2]));
        Json on_c = Json::array();
        for (auto const & q : silverman::points_on_c(sf, int_arg(p, "height"))) {
            Json row = Json::object();
            row["x"] = json_rational(q[0]);
            row["y"] = json_rational(q[1]);
            row["z"] = json_rational(q[2]);
            auto img = silverman::lambda_map(sf, q[0], q[1], q[2]);
            row["image"] = projective_json(img);
            row["on_curve"] = silverman::on_projective_mordell(img, D);
            on_c.push_back(row);
        }
        out["points_on_c"] = on_c;
        auto sc = silverman::scaled_form(D, P);
        Json scaled = Json::object();
        scaled["b"] = json_int(sc.b);
        scaled["coefficients"] = Json::array(
            {json_int(sc.expanded[0]), json_int(sc.expanded[1]), json_int(sc.expanded[2]), json_int(sc.expanded[3])});
        scaled["discriminant"] = json_int(sc.disc);
        out["scaled"] = scaled;
    }
    if (has(p, "exponent"))
        out["lower_bound_exponent"] = json_rational(silverman::lower_bound_exponent(int_arg(p, "exponent")));
    if (flag_arg(p, "elkies")) {
        auto e = silverman::elkies_pair();
        Json j = Json::object();
        j["b"] = json_int(e.b);
        j["k1"] = json_int(e.k1);
        j["k2"] = json_int(e.k2);
        j["disc1"] = json_int(e.disc1);
        j["disc2"] = json_int(e.disc2);
        out["elkies"] = j;
    }
    if (out.empty())
        throw UsageError("silverman needs --point, --exponent or --elkies");
    return out;
}

Json cmd_bounds(Params const & p, Context const & ctx)
{
    Json out = Json::object();
    if (has(p, "curve")) {
        auto ab = big_list(p, "curve", 2);
        auto rank = static_cast<unsigned>(uint_arg(p, "rank"));
        out["j_invariant"] = json_rational(bounds::j_invariant(ab[0], ab[1]));
        Json s1 = Json::object();
        s1["applies"] = bounds::silverman_rank1_applies(rank, ab[0], ab[1]);
        s1["bound"] = json_int(bounds::silverman_rank1_bound());
        out["silverman_rank1"] = s1;
        Json hh = with_real(ctx, [&](auto zero) {
            using Real = decltype(zero);
            auto v = bounds::hajdu_herendi<Real>(ab[0], ab[1]);
            Json j = Json::object();
            j["c1"] = jr(v.c1);
            j["c2"] = jr(v.c2);
            j["log_bound"] = jr(v.log_bound);
            return j;
        });
        out["hajdu_herendi"] = hh;
        BigInt disc = -16 * (4 * ab[0] * ab[0] * ab[0] + 27 * ab[1] * ab[1]);
        out["discriminant"] = json_int(disc);
        if (abs(disc) < (BigInt(1) << 64)) {
            auto f = bounds::factorize(disc);
            out["alpoge_ho_product"] = json_int(bounds::alpoge_ho_product(rank, f));
            if (has(p, "hv-c"))
                out["helfgott_venkatesh"] =
                    jr(bounds::helfgott_venkatesh_shape(rank, f, real_arg<long double>(p, "hv-c")));
        }
        out["alpoge_ho_log_S_bound"] = with_real(ctx, [&](auto zero) {
            using Real = decltype(zero);
            return jr(bounds::alpoge_ho_S_bound<Real>(rank, static_cast<unsigned>(uint_arg(p, "s-size")),
                                                      big_arg(p, "cl2")));
        });
    }
    if (has(p, "bennett-m"))
        out["bennett_cubic_bound"] = json_int(bounds::bennett_cubic_bound(big_arg(p, "bennett-m")));
    if (has(p, "gate-c")) {
        auto r = bounds::bhargava_constant_report(real_arg<long double>(p, "gate-c"), int_arg(p, "gate-kmax"));
        Json g = Json::object();
        g["holds"] = r.holds;
        g["first_failure"] = r.first_failure;
        g["tail_min_ratio"] = jr(r.tail_min_ratio);
        out["constant_gate"] = g;
    }
    if (out.empty())
        throw UsageError("bounds needs --curve, --bennett-m or --gate-c");
    return out;
}

Json cmd_cache_audit(Params const &, Context const &)
{
    // Handled by dispatch, which owns the cache.
    throw std::logic_error("cache-audit is dispatched directly");
}

} // namespace

std::vector<CommandSpec> const & command_specs()
{
    static std::vector<CommandSpec> const specs{
        {"points",
         "integral points on y^2 = x^3 + k",
         {{"k", "nonzero integer k", std::nullopt, false, true},
          {"xmax", "search |x| <= xmax", "1000000"}},
         cmd_points},
        {"classify",
         "k in [kmin, kmax] with exactly m |k| integral points",
         {{"m", "multiplier", std::nullopt, false, true},
          {"kmax", "upper end of the k range", std::nullopt, false, true},
          {"kmin", "lower end (default -kmax)"},
          {"xmax", "search |x| <= xmax", "1000000"},
          {"include-infinity", "count the point at infinity", std::nullopt, true}},
         cmd_classify},
        {"cubic",
         "binary cubic form invariants or a class count",
         {{"form", "a,b,c,d of a x^3 + 3b x^2 y + 3c x y^2 + d y^3"},
          {"point", "x0,y0 with F(x0, y0) = 1, mapped to the Mordell curve"},
          {"k", "count classes of discriminant -108 k"},
          {"coeff-box", "coefficient box for --k", "6"},
          {"matrix-box", "matrix entry box for --k", "4"}},
         cmd_cubic},
        {"classnum",
         "class group and L(1, chi) of a quadratic field",
         {{"d", "fundamental discriminant or square-free integer", std::nullopt, false, true}},
         cmd_classnum},
        {"threshold", "real and imaginary solution thresholds", {}, cmd_threshold},
        {"period",
         "real period of a Legendre curve or of y^2 = x^3 + A x + B",
         {{"lambda", "Legendre parameter in (0, 1)"}, {"curve", "A,B with three real roots"}},
         cmd_period},
        {"bounds3",
         "period-based bounds for twist counts",
         {{"disc", "|discriminant| > 1", std::nullopt, false, true},
          {"lambda", "Legendre parameter in (0, 1)", std::nullopt, false, true}},
         cmd_bounds3},
        {"twists",
         "twist counts nu(n) and weighted quartic classes",
         {{"curve", "A,B with three real roots"},
          {"n", "partial sum length", "10000"},
          {"h-e", "rational h_E for the limit constant"},
          {"quartic", "I,J invariants for the weighted class count"},
          {"coeff-box", "coefficient box for --quartic", "3"},
          {"matrix-box", "matrix entry box for --quartic", "3"}},
         cmd_twists},
        {"lucas",
         "Lucas sequence squares and quartic points",
         {{"t", "nonzero sequence parameter", std::nullopt, false, true},
          {"d", "quartic scale d >= 1", "1"},
          {"jmax", "largest index", "60"},
          {"xmax", "largest x", "100000"}},
         cmd_lucas},
        {"density",
         "primes among odd-index Lucas numbers up to N",
         {{"n", "upper bound N", std::nullopt, false, true}},
         cmd_density},
        {"silverman",
         "cubic form of a rational point and related constants",
         {{"D", "curve y^2 = x^3 + D"},
          {"point", "s,t rational point"},
          {"height", "height bound for points on C", "10"},
          {"exponent", "rank r for r / (r + 2)"},
          {"elkies", "print the Elkies pair", std::nullopt, true}},
         cmd_silverman},
        {"bounds",
         "explicit bounds on integral points",
         {{"curve", "A,B of y^2 = x^3 + A x + B"},
          {"rank", "Mordell-Weil rank", "0"},
          {"s-size", "size of S", "0"},
          {"cl2", "2-torsion class number", "1"},
          {"hv-c", "constant c for the Helfgott-Venkatesh shape"},
          {"bennett-m", "m for the cubic Thue bound"},
          {"gate-c", "constant C for the gate check"},
          {"gate-kmax", "scan limit for the gate check", "100000"}},
         cmd_bounds},
        {"cache-audit", "recompute every cached record and compare", {}, cmd_cache_audit, false},
    };
    return specs;
}

std::vector<std::string> const & subcommand_names()
{
    static std::vector<std::string> const names = [] {
        std::vector<std::string> n;
        for (auto const & s : command_specs())
            n.push_back(s.name);
        return n;
    }();
    return names;
}

Json run_command(std::string const & name, Params const & params, Context const & ctx)
{
    for (auto const & s : command_specs())
        if (s.name == name) {
            if (ctx.precision_bits > 0)
                set_mpfr_precision_bits(ctx.precision_bits);
            return s.run(params, ctx);
        }
    throw UsageError("unknown subcommand '" + name + "'");
}

} // namespace mordell::cli
