#pragma once

#include <map>
#include <string>

#include "unirat/poly.hpp"
#include "unirat/poly_gcd.hpp"

namespace unirat {

// Exact rational function num/den over a VarSet, kept in canonical form:
// num and den coprime, den monic, zero stored as 0/1. Equality is structural.
template <CoeffField K>
class RatFunc {
public:
    explicit RatFunc(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::one(num_.vars())) {}

    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        require_same_vars(num_.vars(), den_.vars(), "rational function");
        reduce_();
    }

    static RatFunc zero(VarSetPtr vars) { return RatFunc(Poly<K>::zero(std::move(vars))); }
    static RatFunc one(VarSetPtr vars) { return RatFunc(Poly<K>::one(std::move(vars))); }
    static RatFunc constant(VarSetPtr vars, K c) {
        return RatFunc(Poly<K>::constant(std::move(vars), std::move(c)));
    }
    static RatFunc variable(VarSetPtr vars, std::string_view name, int exp = 1) {
        return RatFunc(Poly<K>::variable(std::move(vars), name, exp));
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero("inverse of the zero rational function");
        return RatFunc(den_, num_);
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw division_by_zero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc r = one(vars());
        RatFunc base = *this;
        unsigned u = static_cast<unsigned>(e);
        while (u) {
            if (u & 1) r = r * base;
            base = base * base;
            u >>= 1;
        }
        return r;
    }

    // Quotient-rule formal derivative.
    RatFunc derivative(std::size_t var) const {
        return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    K eval(std::span<const K> point) const {
        K d = den_.eval(point);
        if (d.is_zero()) throw division_by_zero("denominator vanishes at evaluation point");
        return num_.eval(point) * d.inverse();
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const {
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    void reduce_() {
        if (den_.is_zero()) throw division_by_zero("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>::one(num_.vars());
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        K lc_inv = den_.leading_term().c.inverse();
        num_ = num_.scaled(lc_inv);
        den_ = den_.scaled(lc_inv);
    }

    Poly<K> num_;
    Poly<K> den_;
};

template <CoeffField K>
RatFunc<K> embed(const RatFunc<K>& f, const VarSetPtr& target) {
    return RatFunc<K>(embed(f.num(), target), embed(f.den(), target));
}

// Composes f with the assignment, which must cover every variable occurring
// in f; the values live over `target`.
template <CoeffField K>
RatFunc<K> substitute(const Poly<K>& f, const std::map<std::string, RatFunc<K>>& assignment,
                      const VarSetPtr& target) {
    for (const auto& [name, value] : assignment)
        require_same_vars(value.vars(), target, "substitution value");

    const std::size_t n = f.vars()->size();
    std::vector<const RatFunc<K>*> assigned(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = assignment.find(f.vars()->name(i));
        if (it != assignment.end()) {
            assigned[i] = &it->second;
        } else if (f.degree_in(i) > 0) {
            throw varset_mismatch("substitute: variable '" + f.vars()->name(i) + "' unassigned");
        }
    }

    // Power tables per variable, built once up to the needed exponent.
    std::vector<std::vector<RatFunc<K>>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!assigned[i]) continue;
        int d = f.degree_in(i);
        powers[i].reserve(static_cast<std::size_t>(d) + 1);
        powers[i].push_back(RatFunc<K>::one(target));
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * *assigned[i]);
    }

    RatFunc<K> acc = RatFunc<K>::zero(target);
    for (const auto& t : f.terms()) {
        RatFunc<K> prod = RatFunc<K>::constant(target, t.c);
        for (std::size_t i = 0; i < n; ++i)
            if (t.m.e[i] > 0) prod = prod * powers[i][static_cast<std::size_t>(t.m.e[i])];
        acc = acc + prod;
    }
    return acc;
}

// Substitution into a rational function; the composed denominator must not
// collapse to the zero rational function.
template <CoeffField K>
RatFunc<K> substitute(const RatFunc<K>& f, const std::map<std::string, RatFunc<K>>& assignment,
                      const VarSetPtr& target) {
    RatFunc<K> d = substitute(f.den(), assignment, target);
    if (d.is_zero())
        throw division_by_zero("substitution sends the denominator to the zero rational function");
    return substitute(f.num(), assignment, target) / d;
}

}  // namespace unirat
