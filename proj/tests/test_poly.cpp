#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "unirat/json_io.hpp"
#include "unirat/poly.hpp"
#include "unirat/poly_gcd.hpp"
#include "unirat/ratfunc.hpp"
#include "unirat/rng.hpp"

using namespace unirat;

namespace {

using GPoly = Poly<GaussRat>;
using GFun = RatFunc<GaussRat>;

VarSetPtr bb() {
    static VarSetPtr v = VarSet::make({"b", "beta"});
    return v;
}

VarSetPtr habv() {
    static VarSetPtr v = VarSet::make({"a", "alpha", "b", "beta"});
    return v;
}

GPoly var(const VarSetPtr& vs, const char* n, int e = 1) { return GPoly::variable(vs, n, e); }

// Test-only multiplier, independent of the map-accumulation production path:
// distributes one term at a time through canonical additions.
GPoly naive_mul(const GPoly& f, const GPoly& g) {
    GPoly acc(f.vars());
    for (const auto& tf : f.terms()) {
        for (const auto& tg : g.terms()) {
            acc += GPoly::monomial(f.vars(), tf.m * tg.m, tf.c * tg.c);
        }
    }
    return acc;
}

GPoly random_poly(SplitMix64& rng, const VarSetPtr& vs, int max_deg, int max_terms) {
    std::vector<GPoly::Term> terms;
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int k = 0; k < n; ++k) {
        Mono m(vs->size());
        int budget = max_deg;
        for (std::size_t i = 0; i < vs->size(); ++i) {
            int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1)));
            m.e[i] = e;
            budget -= e;
        }
        terms.push_back({m, GaussRat(rng.range(-9, 9))});
    }
    return GPoly::from_terms(vs, std::move(terms));
}

// The expanded difference of the two cross-multiplied quadratic forms,
// frozen term by term.
GPoly frozen_cross_difference() {
    VarSetPtr v = habv();
    auto mono = [&](int ea, int eal, int eb, int ebe, long c) {
        return GPoly::monomial(v, Mono(std::vector<int>{ea, eal, eb, ebe}), GaussRat(c));
    };
    return mono(2, 0, 0, 3, -1) + mono(0, 2, 1, 0, -1) + mono(0, 0, 1, 3, 1) +
           mono(0, 2, 3, 0, 1) + mono(2, 0, 0, 1, 1) + mono(0, 0, 3, 1, -1);
}

}  // namespace

TEST_CASE("difference of squares") {
    GPoly b = var(bb(), "b"), be = var(bb(), "beta");
    CHECK((b + be) * (b - be) == b * b - be * be);
}

TEST_CASE("zeroth power is one") {
    SplitMix64 rng(3);
    GPoly f = random_poly(rng, bb(), 3, 4);
    CHECK(f.pow(0) == GPoly::one(bb()));
    CHECK(GPoly::zero(bb()).pow(0) == GPoly::one(bb()));
}

TEST_CASE("cross-multiplied difference expands to the frozen form") {
    VarSetPtr v = habv();
    GPoly a = var(v, "a"), al = var(v, "alpha"), b = var(v, "b"), be = var(v, "beta");
    GPoly lhs = (a * a - b) * (al * al - be.pow(3));
    GPoly rhs = (al * al - be) * (a * a - b.pow(3));
    GPoly diff = lhs - rhs;
    CHECK(diff == frozen_cross_difference());

    // Second, naive multiplication route agrees.
    GPoly lhs2 = naive_mul(a * a - b, al * al - be.pow(3));
    GPoly rhs2 = naive_mul(al * al - be, a * a - b.pow(3));
    CHECK(lhs2 - rhs2 == diff);

    // No a^2*alpha^2 term survives.
    for (const auto& t : diff.terms()) CHECK((t.m.e[0] < 2 || t.m.e[1] < 2));
}

TEST_CASE("varset mismatch is a structural error") {
    GPoly f = var(bb(), "b");
    GPoly g = var(habv(), "b");
    CHECK_THROWS_AS(f + g, varset_mismatch);
}

TEST_CASE("substitute: base change of the H polynomial") {
    VarSetPtr v = habv();
    GPoly a = var(v, "a"), al = var(v, "alpha"), b = var(v, "b"), be = var(v, "beta");
    GPoly one = GPoly::one(v);
    GPoly h = a * a * be * (one - be * be) - al * al * b * (one - b * b) - b * be * (b * b - be * be);

    VarSetPtr w = VarSet::make({"a", "alpha", "s", "t"});
    std::map<std::string, GFun> sub;
    sub.emplace("a", GFun::variable(w, "a"));
    sub.emplace("alpha", GFun::variable(w, "alpha"));
    sub.emplace("b", GFun::variable(w, "s", 2));
    sub.emplace("beta", GFun::variable(w, "t", 2));
    GFun q = substitute(h, sub, w);

    GPoly A = var(w, "a"), AL = var(w, "alpha"), S = var(w, "s"), T = var(w, "t");
    GPoly onew = GPoly::one(w);
    GPoly expect = A * A * T.pow(2) * (onew - T.pow(4)) - AL * AL * S.pow(2) * (onew - S.pow(4)) -
                   S.pow(2) * T.pow(2) * (S.pow(4) - T.pow(4));
    CHECK(q == GFun(expect));
}

TEST_CASE("substitute: identity assignment returns f") {
    SplitMix64 rng(17);
    GPoly f = random_poly(rng, habv(), 4, 6);
    std::map<std::string, GFun> sub;
    for (const auto& n : habv()->names()) sub.emplace(n, GFun::variable(habv(), n));
    CHECK(substitute(f, sub, habv()) == GFun(f));
}

TEST_CASE("substitute: b -> 0 in the cleared fibre identity") {
    // P^2*beta*(1-beta^2) - R^2*b*(1-b^2) - Q^2*b*beta*(b^2-beta^2) with
    // symbolic P, Q, R replaced by concrete polynomials collapses to the
    // P-part when b = 0.
    VarSetPtr v = bb();
    GPoly b = var(v, "b"), be = var(v, "beta");
    GPoly one = GPoly::one(v);
    GPoly P = b + be + one;  // any P with P(0,beta) != 0
    GPoly lhs = P * P * be * (one - be * be) - (b + one) * (b + one) * b * (one - b * b) -
                be * be * b * be * (b * b - be * be);
    std::map<std::string, GFun> sub;
    sub.emplace("b", GFun::zero(v));
    sub.emplace("beta", GFun::variable(v, "beta"));
    GFun at0 = substitute(lhs, sub, v);
    GPoly p0 = be + one;
    CHECK(at0 == GFun(p0 * p0 * be * (one - be * be)));
}

TEST_CASE("substitute requires every occurring variable") {
    GPoly f = var(bb(), "b") + var(bb(), "beta");
    std::map<std::string, GFun> sub;
    sub.emplace("b", GFun::one(bb()));
    CHECK_THROWS_AS(substitute(f, sub, bb()), varset_mismatch);
}

TEST_CASE("gcd examples") {
    GPoly b = var(bb(), "b"), be = var(bb(), "beta");
    CHECK(poly_gcd(b * b - be * be, b - be) == b - be);

    SplitMix64 rng(23);
    GPoly f = random_poly(rng, bb(), 3, 4);
    if (!f.is_zero()) CHECK(poly_gcd(f, GPoly::zero(bb())) == f.monic());

    // Planted common factor b*beta between two coprime linear cofactors.
    GPoly u = b + be + GPoly::one(bb());
    GPoly w = b - be + GPoly::constant(bb(), GaussRat(2));
    GPoly g = poly_gcd(b * be * u, b * be * w);
    CHECK(g == (b * be).monic());
    // Verified by exact division both ways.
    CHECK((b * be * u).divide_exact(g) == u);
    CHECK((b * be * w).divide_exact(g) == w);
}

TEST_CASE("gcd scales with a common factor") {
    SplitMix64 rng(29);
    VarSetPtr v = bb();
    for (int it = 0; it < 20; ++it) {
        GPoly f = random_poly(rng, v, 2, 3);
        GPoly g = random_poly(rng, v, 2, 3);
        GPoly h = random_poly(rng, v, 2, 2);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        GPoly lhs = poly_gcd(f * h, g * h);
        GPoly rhs = (poly_gcd(f, g) * h).monic();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("valuation") {
    GPoly b = var(bb(), "b"), be = var(bb(), "beta");
    GPoly one = GPoly::one(bb());
    CHECK((b.pow(3) * be - b * be.pow(3)).valuation(0) == 1);
    CHECK((be * be * (one + b)).valuation(1) == 2);
    CHECK_THROWS_AS(GPoly::zero(bb()).valuation(0), undefined_valuation);
}

TEST_CASE("partial derivative basics") {
    GPoly b = var(bb(), "b"), be = var(bb(), "beta");
    CHECK((b * b * be).derivative(0) == GPoly::constant(bb(), GaussRat(2)) * b * be);
    CHECK(GPoly::constant(bb(), GaussRat(5)).derivative(0) == GPoly::zero(bb()));
}

TEST_CASE("derivative of the pulled-back polynomial matches finite differences") {
    VarSetPtr w = VarSet::make({"a", "alpha", "s", "t"});
    GPoly A = var(w, "a"), AL = var(w, "alpha"), S = var(w, "s"), T = var(w, "t");
    GPoly onew = GPoly::one(w);
    GPoly q = A * A * T.pow(2) * (onew - T.pow(4)) - AL * AL * S.pow(2) * (onew - S.pow(4)) -
              S.pow(2) * T.pow(2) * (S.pow(4) - T.pow(4));
    GPoly dq = q.derivative(2);  // d/ds

    std::vector<GaussRat> pt{GaussRat(1), GaussRat(1), GaussRat(2), GaussRat(3)};
    GaussRat exact = dq.eval(std::span<const GaussRat>(pt.data(), pt.size()));
    CHECK(exact == GaussRat(1376));

    // Independent central finite-difference oracle in long double.
    auto eval_ld = [&](long double s) {
        long double a = 1, al = 1, t = 3;
        auto p2 = [](long double x) { return x * x; };
        auto p4 = [](long double x) { return x * x * x * x; };
        return p2(a) * p2(t) * (1 - p4(t)) - p2(al) * p2(s) * (1 - p4(s)) -
               p2(s) * p2(t) * (p4(s) - p4(t));
    };
    const long double h = 1e-6L;
    long double fd = (eval_ld(2 + h) - eval_ld(2 - h)) / (2 * h);
    CHECK(std::abs(static_cast<double>(fd) - 1376.0) / 1376.0 < 1e-8);
}

TEST_CASE("ring axioms on random samples") {
    SplitMix64 rng(31);
    VarSetPtr v = VarSet::make({"u", "w", "z", "p", "q", "r"});
    for (int it = 0; it < 500; ++it) {
        GPoly f = random_poly(rng, v, 4, 3);
        GPoly g = random_poly(rng, v, 4, 3);
        GPoly h = random_poly(rng, v, 4, 3);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("exact division undoes multiplication") {
    SplitMix64 rng(37);
    for (int it = 0; it < 100; ++it) {
        GPoly f = random_poly(rng, bb(), 3, 4);
        GPoly g = random_poly(rng, bb(), 3, 3);
        if (g.is_zero()) continue;
        CHECK((f * g).divide_exact(g) == f);
    }
}

TEST_CASE("derivative satisfies the product rule") {
    SplitMix64 rng(41);
    for (int it = 0; it < 100; ++it) {
        GPoly f = random_poly(rng, bb(), 4, 4);
        GPoly g = random_poly(rng, bb(), 4, 4);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
}

TEST_CASE("substitution respects composition") {
    SplitMix64 rng(43);
    VarSetPtr v = bb();
    GPoly f = random_poly(rng, v, 3, 4);

    // sigma: b -> b+beta, beta -> b*beta ; tau: b -> b^2, beta -> beta+1.
    std::map<std::string, GFun> sigma;
    sigma.emplace("b", GFun(var(v, "b") + var(v, "beta")));
    sigma.emplace("beta", GFun(var(v, "b") * var(v, "beta")));
    std::map<std::string, GFun> tau;
    tau.emplace("b", GFun(var(v, "b").pow(2)));
    tau.emplace("beta", GFun(var(v, "beta") + GPoly::one(v)));

    GFun lhs = substitute(substitute(f, sigma, v), tau, v);
    std::map<std::string, GFun> composed;
    for (const auto& [name, val] : sigma) composed.emplace(name, substitute(val, tau, v));
    GFun rhs = substitute(f, composed, v);
    CHECK(lhs == rhs);
}

TEST_CASE("rational function reduction is canonical") {
    GPoly b = var(bb(), "b"), be = var(bb(), "beta");
    GFun f(b * b - be * be, b - be);
    CHECK(f == GFun(b + be));
    CHECK_THROWS_AS(GFun(b, GPoly::zero(bb())), division_by_zero);
    CHECK((GFun(b) / GFun(b)).num() == GPoly::one(bb()));
}

TEST_CASE("poly JSON round-trip is bit-exact") {
    SplitMix64 rng(47);
    auto parse = [](std::string_view s) { return GaussRat::from_string(s); };
    for (int it = 0; it < 50; ++it) {
        GPoly f = random_poly(rng, habv(), 5, 6);
        Json j = poly_to_json(f);
        GPoly back = poly_from_json<GaussRat>(j, parse);
        CHECK(back == f);
        CHECK(poly_to_json(back).dump() == j.dump());
    }
    // Canonical-order violations are rejected.
    Json bad = {{"vars", {"b", "beta"}},
                {"terms", {{{"exps", {0, 1}}, {"coef", "1"}}, {{"exps", {1, 0}}, {"coef", "1"}}}}};
    CHECK_THROWS_AS(poly_from_json<GaussRat>(bad, parse), parse_error);
}
