#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unirat/numlift.hpp"
#include "unirat/pipeline.hpp"
#include "unirat/rng.hpp"

using namespace unirat;
using namespace unirat::pipeline;

namespace {

std::array<GaussRat, 3> pt231() { return {GaussRat(2), GaussRat(3), GaussRat(1)}; }

}  // namespace

TEST_CASE("the map lands on the frozen test point") {
    UnirationalMap phi = build_phi();
    auto img = eval_map(phi, pt231());
    CHECK(img[0] == GaussRat(Rat(-20, 11)));
    CHECK(img[1] == GaussRat(Rat(-9, 11)));
    CHECK(img[2] == GaussRat(4));
    CHECK(img[3] == GaussRat(9));

    // Independent oracle: plug the image into the defining polynomial.
    GPoly h = conic::h_poly();
    CHECK(h.eval(std::span<const GaussRat>(img.data(), img.size())).is_zero());
}

TEST_CASE("the map satisfies the H equation symbolically") {
    UnirationalMap phi = build_phi();
    CheckReport rep = verify_on_H(phi);
    CHECK(rep.ok);
    CHECK(rep.witness == "0");
}

TEST_CASE("mutated maps are detected") {
    UnirationalMap phi = build_phi();
    UnirationalMap bad = phi;
    bad.alpha = phi.alpha + GFun::variable(stv_vars(), "v");
    CHECK_FALSE(verify_on_H(bad).ok);
    CHECK_FALSE(recover_v(bad).ok);
}

TEST_CASE("the sign-flipped parameters still land on H") {
    UnirationalMap phi = build_phi();
    VarSetPtr stv = stv_vars();
    std::map<std::string, GFun> flip;
    flip.emplace("s", -GFun::variable(stv, "s"));
    flip.emplace("t", -GFun::variable(stv, "t"));
    flip.emplace("v", GFun::variable(stv, "v"));
    UnirationalMap phi2{substitute(phi.a, flip, stv), substitute(phi.alpha, flip, stv),
                        substitute(phi.b, flip, stv), substitute(phi.beta, flip, stv)};
    CHECK(verify_on_H(phi2).ok);
}

TEST_CASE("slope variable is recovered: the parametrization is birational") {
    CheckReport rep = recover_v(build_phi());
    CHECK(rep.ok);
}

TEST_CASE("pencil at slope zero mirrors the base point") {
    UnirationalMap phi = build_phi();
    VarSetPtr stv = stv_vars();
    std::map<std::string, GFun> at0;
    at0.emplace("s", GFun::variable(stv, "s"));
    at0.emplace("t", GFun::variable(stv, "t"));
    at0.emplace("v", GFun::zero(stv));
    CHECK(substitute(phi.a, at0, stv) == -GFun::variable(stv, "s"));
    CHECK(substitute(phi.alpha, at0, stv) == GFun::variable(stv, "t"));
}

TEST_CASE("Jacobian at the frozen point has rank 3") {
    UnirationalMap phi = build_phi();
    JacobianReport rep = jacobian_rank(phi, pt231());
    CHECK(rep.rank == 3);
    // The b = s^2 row is exactly (2s, 0, 0).
    CHECK(rep.matrix[2][0] == GaussRat(4));
    CHECK(rep.matrix[2][1] == GaussRat(0));
    CHECK(rep.matrix[2][2] == GaussRat(0));
}

TEST_CASE("Jacobian at s = t is rejected as a bad sample") {
    UnirationalMap phi = build_phi();
    std::array<GaussRat, 3> degenerate{GaussRat(2), GaussRat(2), GaussRat(1)};
    CHECK_THROWS_AS(jacobian_rank(phi, degenerate), bad_sample);
}

TEST_CASE("Jacobian rank 3 at seeded random points") {
    UnirationalMap phi = build_phi();
    SplitMix64 rng(79);
    int done = 0;
    while (done < 5) {
        std::array<GaussRat, 3> pt{GaussRat(Rat(rng.range(-9, 9), rng.range(1, 9))),
                                   GaussRat(Rat(rng.range(-9, 9), rng.range(1, 9))),
                                   GaussRat(Rat(rng.range(-9, 9), rng.range(1, 9)))};
        try {
            JacobianReport rep = jacobian_rank(phi, pt);
            CHECK(rep.rank == 3);
            ++done;
        } catch (const bad_sample&) {
            continue;  // retry, as the contract prescribes
        }
    }
}

TEST_CASE("quartic fibre check at the frozen point") {
    UnirationalMap phi = build_phi();
    CHECK(quartic_fiber_check(phi, pt231()));
}

TEST_CASE("numeric lift of the frozen point") {
    UnirationalMap phi = build_phi();
    auto img = eval_map(phi, pt231());
    LiftReport rep = numeric_lift(img, 128);

    // u1 = 7/612 via both quotient expressions.
    set_precision_bits(128);
    Real expect_u1 = Real(7) / Real(612);
    Real tiny = boost::multiprecision::ldexp(Real(1), -100);
    CHECK(boost::multiprecision::abs(rep.u1_left.re - expect_u1) < tiny);
    CHECK(boost::multiprecision::abs(rep.u1_left.im) < tiny);
    CHECK(rep.u1_agree_bits >= 128 - 16);

    Real bound = boost::multiprecision::ldexp(Real(1), -96);
    for (int j = 0; j < 3; ++j) CHECK(rep.residuals[j] <= bound);
    CHECK(rep.orbit_exact);
}

TEST_CASE("numeric lift rejects points off H") {
    std::array<GaussRat, 4> off{GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(2)};
    CHECK_THROWS_AS(numeric_lift(off, 128), bad_sample);
}

TEST_CASE("residuals shrink with precision") {
    UnirationalMap phi = build_phi();
    auto img = eval_map(phi, pt231());
    long prev_bits = 0;
    unsigned prev_prec = 0;
    for (unsigned prec : {64u, 128u, 256u}) {
        LiftReport rep = numeric_lift(img, prec);
        Real bound = boost::multiprecision::ldexp(Real(1), 16 - static_cast<int>(prec));
        long worst = 1 << 20;
        for (int j = 0; j < 3; ++j) {
            CHECK(rep.residuals[j] <= bound);
            worst = std::min(worst, neg_log2_floor(rep.residuals[j]));
        }
        if (prev_prec) {
            // Doubling the precision must buy (almost) the full extra bits.
            long step = static_cast<long>(prec - prev_prec);
            CHECK(worst >= prev_bits + step - 8);
        }
        prev_bits = worst;
        prev_prec = prec;
    }
}

TEST_CASE("sampling is deterministic and well conditioned") {
    auto a = sample_points(5, 42, 128);
    auto b = sample_points(5, 42, 128);
    REQUIRE(a.size() == 5);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].s == b[i].s);
        CHECK(a[i].t == b[i].t);
        CHECK(a[i].v == b[i].v);
        CHECK(a[i].lift.u1_agree_bits == b[i].lift.u1_agree_bits);
        CHECK(a[i].lift.residuals[0] == b[i].lift.residuals[0]);
        CHECK(a[i].lift.orbit_exact);
        CHECK(a[i].quartic_fiber_ok);
        CHECK(a[i].h_point == b[i].h_point);
    }
}
