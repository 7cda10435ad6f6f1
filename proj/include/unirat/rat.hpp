#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "unirat/errors.hpp"

namespace unirat {

using Int = boost::multiprecision::cpp_int;

// Exact rational with reduced terms and positive denominator; zero is 0/1.
// cpp_rational maintains exactly that canonical form, so equality is structural.
using Rat = boost::multiprecision::cpp_rational;

// Canonical text: "n" for integers, "n/d" otherwise, sign on the numerator.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(std::string_view s);

// Element of Q(i), the base field k. Carries the primitive fourth root of
// unity: i() * i() == -1.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r) {}
    GaussRat(long rn, long rd, long in, long id) : re(Rat(rn, rd)), im(Rat(in, id)) {}

    static GaussRat zero() { return GaussRat(); }
    static GaussRat one() { return GaussRat(1); }
    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    GaussRat inverse() const;

    // Canonical encoding: "p/q" when im == 0, else "p/q+r/s*i" with the
    // imaginary part's sign explicit, e.g. "-3/2+1/4*i", "0-1*i".
    std::string to_string() const;
    static GaussRat from_string(std::string_view s);

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re + b.re, a.im + b.im);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re - b.re, a.im - b.im);
    }
    friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re, -a.im); }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

}  // namespace unirat
