#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "unirat/pipeline.hpp"

namespace unirat::pipeline {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision (thread-local default) to at least `bits`
// binary digits and returns the decimal digit count actually requested.
unsigned set_precision_bits(unsigned bits);

// Minimal complex type over Real. The component formulas are fixed: negation
// and multiplication by i are exact, and division is component-symmetric, so
// the four g-orbit images of a lift push down to bitwise-identical values.
struct Cx {
    Real re, im;

    Cx() : re(0), im(0) {}
    Cx(Real r) : re(std::move(r)), im(0) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Cx from_gauss(const GaussRat& g);

    friend Cx operator+(const Cx& a, const Cx& b) { return Cx(a.re + b.re, a.im + b.im); }
    friend Cx operator-(const Cx& a, const Cx& b) { return Cx(a.re - b.re, a.im - b.im); }
    friend Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return Cx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }

    Cx times_i() const { return Cx(-im, re); }

    Real abs() const;
    // Principal branch (Re >= 0, cut along the negative real axis).
    Cx sqrt() const;

    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }

    std::string to_string(unsigned digits = 0) const;
};

std::string real_to_string(const Real& x, unsigned digits = 0);

// Floor of -log2(x); very large sentinel for x == 0.
long neg_log2_floor(const Real& x);

struct LiftReport {
    std::array<GaussRat, 4> input;  // (a, alpha, b, beta), exact
    unsigned precision_bits = 0;
    Cx u1_left, u1_right;   // the two quotient expressions for u1 = x1^2
    long u1_agree_bits = 0;
    Cx x[3], y[3];          // lifted coordinates (x1,x2,x3), (y1,y2,y3)
    Real residuals[3];      // |y_j^2 - x_j(x_j^2 - 1)|
    bool orbit_exact = false;
};

// Conditioning guards: magnitudes above this are rejected as bad samples...
inline constexpr double kLiftMagnitudeCap = 8.0;
// ...as are u1 numerators/denominators below this.
inline constexpr double kLiftDenominatorFloor = 1.0 / 64.0;

// Lifts a point of H back to the triple product of curves at the given
// working precision. Exact inputs are verified to lie on H before
// conversion. Throws bad_sample on conditioning violations (the caller
// resamples).
LiftReport numeric_lift(const std::array<GaussRat, 4>& pt, unsigned precision_bits);

// Core routine on complex inputs; `on_h_tolerance` bounds |H(pt)|.
LiftReport numeric_lift_cx(const std::array<Cx, 4>& pt, unsigned precision_bits,
                           const std::array<GaussRat, 4>* exact_input = nullptr);

struct SampleRecord {
    int index = 0;
    Rat s, t, v;
    std::array<GaussRat, 4> h_point;
    LiftReport lift;
    bool quartic_fiber_ok = false;
    int rejected_draws = 0;
};

// Deterministic sampling: draws (s,t,v) with numerators and denominators in
// [-9,9] from a SplitMix64 stream, pushes them through the map, and lifts.
// Degenerate or ill-conditioned draws are rejected and redrawn.
std::vector<SampleRecord> sample_points(int count, std::uint64_t seed, unsigned precision_bits);

}  // namespace unirat::pipeline
