#pragma once

#include "unirat/poly.hpp"
#include "unirat/rat.hpp"

namespace unirat::funcfield {

using GPoly = Poly<GaussRat>;

// The six coordinate functions of the product of three affine curves
// y_i^2 = x_i(x_i^2 - 1), in the fixed order [x1,x2,x3,y1,y2,y3].
VarSetPtr curve_vars();

// Defining relation y_i^2 - x_i^3 + x_i of the i-th factor (i = 1,2,3).
GPoly curve_relation(int i);

// Element of the coordinate ring k[V] in normal form: every y-exponent is 0
// or 1, obtained by rewriting y_i^2 -> x_i^3 - x_i. Normal forms are unique
// representatives (k[V] is a free module of rank 8 over k[x1,x2,x3]), so
// ring equality is structural equality.
class CurveElem {
public:
    CurveElem() : p_(curve_vars()) {}
    explicit CurveElem(const GPoly& raw) : p_(normal_form(raw)) {}

    static GPoly normal_form(const GPoly& raw);

    const GPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }

    friend CurveElem operator+(const CurveElem& a, const CurveElem& b) {
        return already_normal(a.p_ + b.p_);
    }
    friend CurveElem operator-(const CurveElem& a, const CurveElem& b) {
        return already_normal(a.p_ - b.p_);
    }
    friend CurveElem operator-(const CurveElem& a) { return already_normal(-a.p_); }
    friend CurveElem operator*(const CurveElem& a, const CurveElem& b) {
        return CurveElem(a.p_ * b.p_);
    }

    CurveElem pow(unsigned e) const;

    // Image under g: x_i -> -x_i, y_i -> i*y_i, extended multiplicatively.
    CurveElem apply_g() const;

    friend bool operator==(const CurveElem& a, const CurveElem& b) { return a.p_ == b.p_; }
    friend bool operator!=(const CurveElem& a, const CurveElem& b) { return !(a == b); }

    std::string to_string() const { return p_.to_string(); }

private:
    static CurveElem already_normal(GPoly p) {
        CurveElem e;
        e.p_ = std::move(p);
        return e;
    }
    GPoly p_;
};

// Element of the function field k(Z) as a fraction of normal forms. Fractions
// are deliberately not reduced to lowest terms (no gcd theory in the quotient
// ring); equality is cross-multiplication of normal forms, and nonvanishing
// of denominators means "normal form != 0", sound because k[V] is a domain.
// A light normalization (common monomial factors, monic denominator) keeps
// representations small and deterministic.
class FieldElem {
public:
    FieldElem() : num_(), den_(CurveElem(GPoly::one(curve_vars()))) {}
    FieldElem(CurveElem num, CurveElem den);
    explicit FieldElem(CurveElem num) : FieldElem(std::move(num), CurveElem(GPoly::one(curve_vars()))) {}

    static FieldElem from_int(long v);

    const CurveElem& num() const { return num_; }
    const CurveElem& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        return FieldElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FieldElem operator-(const FieldElem& a) { return FieldElem(-a.num_, a.den_); }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
        if (b.is_zero()) throw division_by_zero();
        return FieldElem(a.num_ * b.den_, a.den_ * b.num_);
    }

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem inverse() const {
        if (is_zero()) throw division_by_zero();
        return FieldElem(den_, num_);
    }

    FieldElem pow(int e) const;

    FieldElem apply_g() const { return FieldElem(num_.apply_g(), den_.apply_g()); }
    bool is_g_invariant() const { return apply_g() == *this; }

    // Cross-multiplication equality in the fraction field.
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string to_string() const {
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    CurveElem num_;
    CurveElem den_;
    void normalize_();
};

// Coordinate function x_i or y_i as a field element.
FieldElem coord(std::string_view name);

// The seven generators of the g-invariant subfield:
//   b_j = x_j/x_1, a_j = y_j/y_1 (j = 2,3), u_1 = x_1^2, w_1 = y_1^4,
//   lam_1 = x_1*y_1^2.
struct GenSet {
    FieldElem b2, b3, a2, a3, u1, w1, lam1;
};
const GenSet& generators();

}  // namespace unirat::funcfield
