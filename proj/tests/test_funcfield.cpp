#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unirat/funcfield.hpp"
#include "unirat/json_io.hpp"
#include "unirat/rng.hpp"

using namespace unirat;
using namespace unirat::funcfield;

namespace {

GPoly var(const char* n, int e = 1) { return GPoly::variable(curve_vars(), n, e); }

GPoly random_raw(SplitMix64& rng, int max_y_exp) {
    std::vector<GPoly::Term> terms;
    int n = 1 + static_cast<int>(rng.below(4));
    for (int k = 0; k < n; ++k) {
        Mono m(6);
        for (int i = 0; i < 3; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(3));
        for (int i = 3; i < 6; ++i)
            m.e[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_y_exp + 1)));
        terms.push_back({m, GaussRat(rng.range(-5, 5), 1, rng.range(-2, 2), 1)});
    }
    return GPoly::from_terms(curve_vars(), std::move(terms));
}

FieldElem random_field_elem(SplitMix64& rng) {
    CurveElem num(random_raw(rng, 2));
    CurveElem den;
    do {
        den = CurveElem(random_raw(rng, 2));
    } while (den.is_zero());
    return FieldElem(num, den);
}

}  // namespace

TEST_CASE("normal form rewrites") {
    CHECK(CurveElem::normal_form(var("y1", 2)) == var("x1", 3) - var("x1"));
    CHECK(CurveElem::normal_form(var("y1", 3)) == (var("x1", 3) - var("x1")) * var("y1"));
    // y1^4 = x1^2 (x1^2 - 1)^2 = x1^6 - 2 x1^4 + x1^2
    GPoly w1 = var("x1", 6) - GPoly::constant(curve_vars(), GaussRat(2)) * var("x1", 4) + var("x1", 2);
    CHECK(CurveElem::normal_form(var("y1", 4)) == w1);
    // The defining relations normalize to zero.
    for (int i = 1; i <= 3; ++i) CHECK(CurveElem(curve_relation(i)).is_zero());
}

TEST_CASE("normal form is idempotent and a ring homomorphism") {
    SplitMix64 rng(51);
    for (int it = 0; it < 500; ++it) {
        GPoly f = random_raw(rng, 4);
        GPoly g = random_raw(rng, 4);
        GPoly nf = CurveElem::normal_form(f);
        CHECK(CurveElem::normal_form(nf) == nf);
        CHECK(CurveElem::normal_form(f + g) == CurveElem::normal_form(f) + CurveElem::normal_form(g));
        CHECK(CurveElem(f * g) == CurveElem(f) * CurveElem(g));
    }
}

TEST_CASE("the coordinate ring is a domain") {
    SplitMix64 rng(53);
    int nonzero_pairs = 0;
    while (nonzero_pairs < 100) {
        CurveElem a(random_raw(rng, 3));
        CurveElem b(random_raw(rng, 3));
        if (a.is_zero() || b.is_zero()) continue;
        ++nonzero_pairs;
        CHECK_FALSE((a * b).is_zero());
    }
}

TEST_CASE("field arithmetic examples") {
    const GenSet& g = generators();
    CHECK_FALSE((g.a2 * g.a2 - g.b2).is_zero());

    SplitMix64 rng(57);
    FieldElem f = random_field_elem(rng);
    if (!f.is_zero()) CHECK(f / f == FieldElem::from_int(1));

    // (y2/y1)^2 = (x2^3 - x2)/(x1^3 - x1), checked by cross-multiplication.
    FieldElem lhs = g.a2 * g.a2;
    FieldElem rhs(CurveElem(var("x2", 3) - var("x2")), CurveElem(var("x1", 3) - var("x1")));
    CHECK(lhs == rhs);
    CHECK((lhs.num() * rhs.den()) == (rhs.num() * lhs.den()));

    CHECK_THROWS_AS(f / FieldElem(), division_by_zero);
}

TEST_CASE("automorphism action") {
    FieldElem x1 = coord("x1"), y1 = coord("y1");
    const GenSet& g = generators();

    CHECK(x1.apply_g() == -x1);
    CHECK(y1.apply_g() == FieldElem(CurveElem(GPoly::constant(curve_vars(), GaussRat::i()))) * y1);
    CHECK(g.u1.apply_g() == g.u1);

    FieldElem img = y1;
    for (int k = 0; k < 4; ++k) img = img.apply_g();
    CHECK(img == y1);
}

TEST_CASE("the automorphism has order exactly 4") {
    const char* names[] = {"x1", "x2", "x3", "y1", "y2", "y3"};
    for (const char* n : names) {
        FieldElem f = coord(n);
        CHECK(f.apply_g().apply_g().apply_g().apply_g() == f);
    }
    FieldElem y1 = coord("y1");
    CHECK_FALSE(y1.apply_g().apply_g() == y1);

    SplitMix64 rng(59);
    for (int it = 0; it < 100; ++it) {
        FieldElem f = random_field_elem(rng);
        CHECK(f.apply_g().apply_g().apply_g().apply_g() == f);
    }
}

TEST_CASE("g-invariance") {
    const GenSet& g = generators();
    CHECK(g.b2.is_g_invariant());
    CHECK(g.b3.is_g_invariant());
    CHECK(g.a2.is_g_invariant());
    CHECK(g.a3.is_g_invariant());
    CHECK(g.u1.is_g_invariant());
    CHECK(g.w1.is_g_invariant());
    CHECK(g.lam1.is_g_invariant());

    FieldElem x1 = coord("x1"), y1 = coord("y1"), y2 = coord("y2");
    CHECK_FALSE(x1.is_g_invariant());
    CHECK_FALSE((y1 * y2).is_g_invariant());
    CHECK((y1 * y1 * y2 * y2).is_g_invariant());
}

TEST_CASE("degree bound witness: y1 is a root of T^4 - w1") {
    const GenSet& g = generators();
    FieldElem y1 = coord("y1");
    CHECK((y1.pow(4) - g.w1).is_zero());
}

TEST_CASE("FieldElem JSON round-trip") {
    SplitMix64 rng(61);
    for (int it = 0; it < 20; ++it) {
        FieldElem f = random_field_elem(rng);
        Json j = fieldelem_to_json(f);
        FieldElem back = fieldelem_from_json(j);
        CHECK(back == f);
        CHECK(fieldelem_to_json(back).dump() == j.dump());
    }
}
