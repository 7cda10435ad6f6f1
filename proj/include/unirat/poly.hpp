#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unirat/varset.hpp"

namespace unirat {

// What Poly and everything above it require of a coefficient field.
template <class K>
concept CoeffField = std::regular<K> && requires(const K a, const K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
    { K::zero() } -> std::convertible_to<K>;
    { K::one() } -> std::convertible_to<K>;
};

// Sparse multivariate polynomial over K. Terms are kept in descending
// graded-lexicographic order with no zero coefficients and no duplicate
// monomials, so equal polynomials have identical representations.
template <CoeffField K>
class Poly {
public:
    struct Term {
        Mono m;
        K c;
    };

    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Poly zero(VarSetPtr vars) { return Poly(std::move(vars)); }

    static Poly constant(VarSetPtr vars, K c) {
        Poly p(std::move(vars));
        if (!c.is_zero()) p.terms_.push_back(Term{Mono(p.vars_->size()), std::move(c)});
        return p;
    }

    static Poly one(VarSetPtr vars) { return constant(std::move(vars), K::one()); }

    static Poly variable(VarSetPtr vars, std::string_view name, int exp = 1) {
        int idx = vars->index_of(name);
        if (idx < 0) throw varset_mismatch("variable '" + std::string(name) + "' not in VarSet");
        Poly p(std::move(vars));
        Mono m(p.vars_->size());
        m.e[static_cast<std::size_t>(idx)] = exp;
        p.terms_.push_back(Term{std::move(m), K::one()});
        return p;
    }

    static Poly monomial(VarSetPtr vars, Mono m, K c) {
        Poly p(std::move(vars));
        if (m.e.size() != p.vars_->size()) throw varset_mismatch("exponent vector length mismatch");
        if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
        return p;
    }

    // Accepts terms in any order, merging duplicates and dropping zeros.
    static Poly from_terms(VarSetPtr vars, std::vector<Term> terms) {
        std::map<Mono, K, GrlexGreater> acc;
        for (auto& t : terms) {
            if (t.m.e.size() != vars->size()) throw varset_mismatch("exponent vector length mismatch");
            auto [it, fresh] = acc.emplace(std::move(t.m), t.c);
            if (!fresh) it->second = it->second + t.c;
        }
        return from_map(std::move(vars), acc);
    }

    const VarSetPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_constant());
    }

    // Constant term (zero when absent).
    K constant_value() const {
        if (!terms_.empty() && terms_.back().m.is_constant()) return terms_.back().c;
        return K::zero();
    }

    int total_degree() const { return terms_.empty() ? -1 : terms_[0].m.degree(); }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.e[var]);
        return d;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw error("zero polynomial has no leading term");
        return terms_[0];
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_vars(a.vars_, b.vars_, "poly add");
        Poly r(a.vars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = grlex_cmp(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K s = a.terms_[i].c + b.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back(Term{a.terms_[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Poly operator-(const Poly& a) {
        Poly r(a.vars_);
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.push_back(Term{t.m, -t.c});
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_vars(a.vars_, b.vars_, "poly mul");
        std::map<Mono, K, GrlexGreater> acc;
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Mono m = ta.m * tb.m;
                K c = ta.c * tb.c;
                auto [it, fresh] = acc.emplace(std::move(m), c);
                if (!fresh) it->second = it->second + c;
            }
        }
        return from_map(a.vars_, acc);
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(vars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{t.m, t.c * c});
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = one(vars_);
        Poly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative(std::size_t var) const {
        Poly r(vars_);
        for (const auto& t : terms_) {
            int e = t.m.e[var];
            if (e == 0) continue;
            Mono m = t.m;
            m.e[var] = e - 1;
            K c = t.c;
            for (int k = 1; k < e; ++k) c = c + t.c;  // c * e without an int injection
            r.terms_.push_back(Term{std::move(m), std::move(c)});
        }
        // Differentiation preserves grlex order only within equal degrees;
        // re-sort to restore the canonical form.
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
        r.terms_.erase(std::remove_if(r.terms_.begin(), r.terms_.end(),
                                      [](const Term& t) { return t.c.is_zero(); }),
                       r.terms_.end());
        return r;
    }

    // Largest e with var^e dividing *this.
    int valuation(std::size_t var) const {
        if (terms_.empty()) throw undefined_valuation();
        int v = terms_[0].m.e[var];
        for (const auto& t : terms_) v = std::min(v, t.m.e[var]);
        return v;
    }

    // Coefficient of var^k as a polynomial over the same VarSet (with the
    // var-exponent removed).
    Poly coeff_of(std::size_t var, int k) const {
        Poly r(vars_);
        for (const auto& t : terms_) {
            if (t.m.e[var] != k) continue;
            Mono m = t.m;
            m.e[var] = 0;
            r.terms_.push_back(Term{std::move(m), t.c});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_cmp(x.m, y.m) > 0; });
        return r;
    }

    K eval(std::span<const K> point) const {
        if (point.size() != vars_->size()) throw varset_mismatch("evaluation point arity mismatch");
        K acc = K::zero();
        for (const auto& t : terms_) {
            K prod = t.c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (int k = 0; k < t.m.e[i]; ++k) prod = prod * point[i];
            acc = acc + prod;
        }
        return acc;
    }

    // Exact multidegree division; returns false when g does not divide *this.
    bool try_divide_exact(const Poly& g, Poly& quotient) const {
        require_same_vars(vars_, g.vars_, "poly divide");
        if (g.is_zero()) throw division_by_zero();
        Poly rem = *this;
        Poly q(vars_);
        const Term& lg = g.leading_term();
        K lg_inv = lg.c.inverse();
        while (!rem.is_zero()) {
            const Term& lr = rem.leading_term();
            if (!lg.m.divides(lr.m)) return false;
            Poly t = monomial(vars_, lg.m.quotient_of(lr.m), lr.c * lg_inv);
            q += t;
            rem -= t * g;
        }
        quotient = std::move(q);
        return true;
    }

    Poly divide_exact(const Poly& g) const {
        Poly q(vars_);
        if (!try_divide_exact(g, q)) throw error("inexact polynomial division");
        return q;
    }

    // Leading coefficient scaled to one.
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading_term().c.inverse());
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!same_vars(a.vars_, b.vars_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c)) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += "(" + terms_[i].c.to_string() + ")";
            for (std::size_t v = 0; v < vars_->size(); ++v) {
                int e = terms_[i].m.e[v];
                if (e == 0) continue;
                s += "*" + vars_->name(v);
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    static Poly from_map(VarSetPtr vars, const std::map<Mono, K, GrlexGreater>& acc) {
        Poly p(std::move(vars));
        p.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.push_back(Term{m, c});
        return p;
    }

    VarSetPtr vars_;
    std::vector<Term> terms_;
};

// Re-expresses f over a VarSet containing (at least) all of f's variables.
template <CoeffField K>
Poly<K> embed(const Poly<K>& f, const VarSetPtr& target) {
    if (same_vars(f.vars(), target)) return f;
    std::vector<int> where(f.vars()->size());
    for (std::size_t i = 0; i < f.vars()->size(); ++i) {
        where[i] = target->index_of(f.vars()->name(i));
        if (where[i] < 0)
            throw varset_mismatch("variable '" + f.vars()->name(i) + "' missing from target VarSet");
    }
    std::vector<typename Poly<K>::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Mono m(target->size());
        for (std::size_t i = 0; i < where.size(); ++i) m.e[static_cast<std::size_t>(where[i])] = t.m.e[i];
        terms.push_back({std::move(m), t.c});
    }
    return Poly<K>::from_terms(target, std::move(terms));
}

}  // namespace unirat
