#include "unirat/numlift.hpp"

#include <cmath>

#include "unirat/rng.hpp"

namespace unirat::pipeline {

unsigned set_precision_bits(unsigned bits) {
    if (bits < 24) bits = 24;
    unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 4;
    Real::default_precision(digits10);
    return digits10;
}

namespace {

Real rat_to_real(const Rat& q) {
    Real n(boost::multiprecision::numerator(q).str());
    Real d(boost::multiprecision::denominator(q).str());
    return n / d;
}

}  // namespace

Cx Cx::from_gauss(const GaussRat& g) { return Cx(rat_to_real(g.re), rat_to_real(g.im)); }

Real Cx::abs() const {
    using boost::multiprecision::sqrt;
    return sqrt(re * re + im * im);
}

Cx Cx::sqrt() const {
    using boost::multiprecision::sqrt;
    if (re == 0 && im == 0) return Cx();
    Real m = abs();
    // Evaluate the numerically safe component first, derive the other from
    // re = (sqrt)^2 difference relation im = 2*u*w.
    if (re >= 0) {
        Real u = sqrt((m + re) / 2);
        Real w = im / (2 * u);
        return Cx(u, w);
    }
    Real w = sqrt((m - re) / 2);
    if (im < 0) w = -w;
    Real u = im / (2 * w);
    if (im == 0) u = Real(0);  // negative real axis: principal value is i*sqrt(-re)
    return Cx(u, w);
}

std::string real_to_string(const Real& x, unsigned digits) {
    if (digits == 0) digits = static_cast<unsigned>(Real::default_precision());
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

std::string Cx::to_string(unsigned digits) const {
    return real_to_string(re, digits) + (im < 0 ? "" : "+") + real_to_string(im, digits) + "*i";
}

long neg_log2_floor(const Real& x) {
    if (x == 0) return 1 << 20;
    Real mant;
    long e = 0;
    mant = boost::multiprecision::frexp(x, &e);
    return -e;  // x < 2^e, so -log2(x) > -e
}

LiftReport numeric_lift(const std::array<GaussRat, 4>& pt, unsigned precision_bits) {
    // Exact membership first: H(pt) == 0 in Q(i).
    GPoly h = conic::h_poly();
    if (!h.eval(std::span<const GaussRat>(pt.data(), pt.size())).is_zero())
        throw bad_sample("exact input does not satisfy the H equation");
    set_precision_bits(precision_bits);
    std::array<Cx, 4> z{Cx::from_gauss(pt[0]), Cx::from_gauss(pt[1]), Cx::from_gauss(pt[2]),
                        Cx::from_gauss(pt[3])};
    return numeric_lift_cx(z, precision_bits, &pt);
}

LiftReport numeric_lift_cx(const std::array<Cx, 4>& pt, unsigned precision_bits,
                           const std::array<GaussRat, 4>* exact_input) {
    set_precision_bits(precision_bits);
    const Real cap(kLiftMagnitudeCap);
    const Real floor_(kLiftDenominatorFloor);
    const Cx one(Real(1));

    const Cx &a = pt[0], &al = pt[1], &b = pt[2], &be = pt[3];

    auto check_cap = [&](const Cx& z, const char* what) {
        if (z.abs() > cap)
            throw bad_sample(std::string("conditioning: |") + what + "| exceeds cap " +
                             real_to_string(z.abs(), 8));
    };
    auto check_floor = [&](const Cx& z, const char* what) {
        if (z.abs() < floor_)
            throw bad_sample(std::string("conditioning: |") + what + "| too small " +
                             real_to_string(z.abs(), 8));
    };

    if (!exact_input) {
        // Membership to tolerance for raw complex inputs.
        Cx hval = a * a * be * (one - be * be) - al * al * b * (one - b * b) -
                  b * be * (b * b - be * be);
        if (neg_log2_floor(hval.abs()) < static_cast<long>(precision_bits) / 2)
            throw bad_sample("complex input is not on H to tolerance");
    }

    check_cap(a, "a");
    check_cap(al, "alpha");
    check_cap(b, "b");
    check_cap(be, "beta");

    Cx n_left = a * a - b, d_left = a * a - b * b * b;
    Cx n_right = al * al - be, d_right = al * al - be * be * be;
    check_floor(n_left, "a^2-b");
    check_floor(d_left, "a^2-b^3");
    check_floor(n_right, "alpha^2-beta");
    check_floor(d_right, "alpha^2-beta^3");

    LiftReport rep;
    if (exact_input) rep.input = *exact_input;
    rep.precision_bits = precision_bits;
    rep.u1_left = n_left / d_left;
    rep.u1_right = n_right / d_right;
    Real rel = (rep.u1_left - rep.u1_right).abs() / rep.u1_left.abs();
    rep.u1_agree_bits = neg_log2_floor(rel);

    Cx x1 = rep.u1_left.sqrt();
    Cx y1sq = x1 * (x1 * x1 - one);
    Cx y1 = y1sq.sqrt();
    {
        // Branch pass: keep whichever sign of y1 gives the smaller defining
        // residual, preferring the principal branch on ties (the residual is
        // even in y1, so this is expected to keep the principal branch).
        Cx cand = -y1;
        Real r_plus = (y1 * y1 - y1sq).abs();
        Real r_minus = (cand * cand - y1sq).abs();
        if (r_minus < r_plus) y1 = cand;
    }
    check_floor(x1, "x1");
    check_floor(y1, "y1");

    rep.x[0] = x1;
    rep.x[1] = b * x1;
    rep.x[2] = be * x1;
    rep.y[0] = y1;
    rep.y[1] = a * y1;
    rep.y[2] = al * y1;
    for (int j = 0; j < 3; ++j) {
        check_cap(rep.x[j], "x_j");
        check_cap(rep.y[j], "y_j");
        rep.residuals[j] = (rep.y[j] * rep.y[j] - rep.x[j] * (rep.x[j] * rep.x[j] - one)).abs();
    }

    // Push each g-orbit image (x_i, y_i) -> (-x_i, i*y_i) back down to
    // (a, alpha, b, beta); multiplication by -1 and i is exact and the
    // division formulas are component-symmetric, so all four push-downs must
    // agree bitwise.
    Cx base[4];
    rep.orbit_exact = true;
    for (int m = 0; m < 4; ++m) {
        Cx xs[3], ys[3];
        for (int j = 0; j < 3; ++j) {
            xs[j] = rep.x[j];
            ys[j] = rep.y[j];
            for (int k = 0; k < m; ++k) {
                xs[j] = -xs[j];
                ys[j] = ys[j].times_i();
            }
        }
        Cx down[4] = {ys[1] / ys[0], ys[2] / ys[0], xs[1] / xs[0], xs[2] / xs[0]};
        if (m == 0) {
            for (int k = 0; k < 4; ++k) base[k] = down[k];
        } else {
            for (int k = 0; k < 4; ++k)
                if (!(down[k] == base[k])) rep.orbit_exact = false;
        }
    }
    return rep;
}

std::vector<SampleRecord> sample_points(int count, std::uint64_t seed, unsigned precision_bits) {
    if (count < 1) throw error("sample count must be at least 1");
    UnirationalMap phi = build_phi();
    SplitMix64 rng(seed);

    auto draw_rat = [&rng]() {
        long num = rng.range(-9, 9);
        long den = rng.range(1, 9);
        return Rat(num, den);
    };

    std::vector<SampleRecord> out;
    int rejected = 0;
    const int max_attempts = 10000 * count;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > max_attempts) throw error("sampling failed to find enough good points");
        Rat s = draw_rat(), t = draw_rat(), v = draw_rat();
        // Degeneracy guards, exact: the conic coefficients and the pencil
        // denominator must not vanish.
        if (s == 0 || t == 0 || s == 1 || s == -1 || t == 1 || t == -1 || s == t || s == -t) {
            ++rejected;
            continue;
        }
        std::array<GaussRat, 3> pt{GaussRat(s), GaussRat(t), GaussRat(v)};
        SampleRecord rec;
        try {
            rec.h_point = eval_map(phi, pt);
            rec.lift = numeric_lift(rec.h_point, precision_bits);
            rec.quartic_fiber_ok = quartic_fiber_check(phi, pt);
        } catch (const bad_sample&) {
            ++rejected;
            continue;
        }
        rec.index = static_cast<int>(out.size());
        rec.s = s;
        rec.t = t;
        rec.v = v;
        rec.rejected_draws = rejected;
        rejected = 0;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace unirat::pipeline
