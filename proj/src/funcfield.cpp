#include "unirat/funcfield.hpp"

#include <map>

namespace unirat::funcfield {

VarSetPtr curve_vars() {
    static const VarSetPtr vars = VarSet::make({"x1", "x2", "x3", "y1", "y2", "y3"});
    return vars;
}

GPoly curve_relation(int i) {
    if (i < 1 || i > 3) throw error("curve index must be 1, 2 or 3");
    VarSetPtr v = curve_vars();
    std::string xi = "x" + std::to_string(i);
    std::string yi = "y" + std::to_string(i);
    return GPoly::variable(v, yi, 2) - GPoly::variable(v, xi, 3) + GPoly::variable(v, xi);
}

GPoly CurveElem::normal_form(const GPoly& raw) {
    VarSetPtr v = curve_vars();
    require_same_vars(raw.vars(), v, "curve ring normal form");

    // x_i^3 - x_i, the right-hand side of the rewrite y_i^2 -> x_i(x_i^2-1).
    GPoly rhs[3] = {
        GPoly::variable(v, "x1", 3) - GPoly::variable(v, "x1"),
        GPoly::variable(v, "x2", 3) - GPoly::variable(v, "x2"),
        GPoly::variable(v, "x3", 3) - GPoly::variable(v, "x3"),
    };
    std::map<std::pair<int, int>, GPoly> pow_cache;  // (i, q) -> rhs[i]^q

    GPoly out(v);
    for (const auto& t : raw.terms()) {
        Mono m = t.m;
        GPoly factor = GPoly::constant(v, t.c);
        bool scaled = false;
        for (int i = 0; i < 3; ++i) {
            int ey = m.e[static_cast<std::size_t>(3 + i)];
            int q = ey / 2;
            m.e[static_cast<std::size_t>(3 + i)] = ey % 2;
            if (q == 0) continue;
            auto key = std::make_pair(i, q);
            auto it = pow_cache.find(key);
            if (it == pow_cache.end()) it = pow_cache.emplace(key, rhs[i].pow(static_cast<unsigned>(q))).first;
            factor = factor * it->second;
            scaled = true;
        }
        GPoly shifted(v);
        if (scaled) {
            shifted = factor * GPoly::monomial(v, m, GaussRat::one());
        } else {
            shifted = GPoly::monomial(v, std::move(m), t.c);
        }
        out += shifted;
    }
    return out;
}

CurveElem CurveElem::pow(unsigned e) const {
    CurveElem r(GPoly::one(curve_vars()));
    CurveElem base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

CurveElem CurveElem::apply_g() const {
    // Unit scaling per term: (-1)^(sum x-exps) * i^(sum y-exps). Exponent
    // patterns are unchanged, so the image is again a normal form.
    static const GaussRat unit[4] = {GaussRat::one(), GaussRat::i(), GaussRat(-1),
                                     GaussRat(Rat(0), Rat(-1))};
    std::vector<GPoly::Term> terms;
    terms.reserve(p_.terms().size());
    for (const auto& t : p_.terms()) {
        int xs = t.m.e[0] + t.m.e[1] + t.m.e[2];
        int ys = t.m.e[3] + t.m.e[4] + t.m.e[5];
        int k = ((ys + 2 * xs) % 4 + 4) % 4;
        terms.push_back({t.m, t.c * unit[k]});
    }
    return already_normal(GPoly::from_terms(curve_vars(), std::move(terms)));
}

FieldElem::FieldElem(CurveElem num, CurveElem den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("zero denominator in k(Z)");
    normalize_();
}

void FieldElem::normalize_() {
    VarSetPtr v = curve_vars();
    if (num_.is_zero()) {
        den_ = CurveElem(GPoly::one(v));
        return;
    }
    // Strip monomial factors common to every term of both numerator and
    // denominator (x_i, y_i are nonzero in the domain k[V], so this does not
    // change the fraction), then scale the denominator monic.
    const std::size_t n = v->size();
    std::vector<int> common(n, 1 << 30);
    for (const auto& t : num_.poly().terms())
        for (std::size_t i = 0; i < n; ++i) common[i] = std::min(common[i], t.m.e[i]);
    for (const auto& t : den_.poly().terms())
        for (std::size_t i = 0; i < n; ++i) common[i] = std::min(common[i], t.m.e[i]);

    bool any = false;
    for (std::size_t i = 0; i < n; ++i) any = any || common[i] > 0;
    if (any) {
        auto strip = [&](const GPoly& p) {
            std::vector<GPoly::Term> terms;
            terms.reserve(p.terms().size());
            for (const auto& t : p.terms()) {
                Mono m = t.m;
                for (std::size_t i = 0; i < n; ++i) m.e[i] -= common[i];
                terms.push_back({std::move(m), t.c});
            }
            return GPoly::from_terms(v, std::move(terms));
        };
        num_ = CurveElem(strip(num_.poly()));
        den_ = CurveElem(strip(den_.poly()));
    }

    GaussRat lc_inv = den_.poly().leading_term().c.inverse();
    if (!lc_inv.is_one()) {
        num_ = CurveElem(num_.poly().scaled(lc_inv));
        den_ = CurveElem(den_.poly().scaled(lc_inv));
    }
}

FieldElem FieldElem::from_int(long x) {
    return FieldElem(CurveElem(GPoly::constant(curve_vars(), GaussRat(x))));
}

FieldElem FieldElem::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r = from_int(1);
    FieldElem base = *this;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1) r = r * base;
        base = base * base;
        u >>= 1;
    }
    return r;
}

FieldElem coord(std::string_view name) {
    return FieldElem(CurveElem(GPoly::variable(curve_vars(), name)));
}

const GenSet& generators() {
    static const GenSet gens = [] {
        FieldElem x1 = coord("x1"), x2 = coord("x2"), x3 = coord("x3");
        FieldElem y1 = coord("y1"), y2 = coord("y2"), y3 = coord("y3");
        GenSet g;
        g.b2 = x2 / x1;
        g.b3 = x3 / x1;
        g.a2 = y2 / y1;
        g.a3 = y3 / y1;
        g.u1 = x1 * x1;
        g.w1 = y1.pow(4);
        g.lam1 = x1 * y1 * y1;
        return g;
    }();
    return gens;
}

}  // namespace unirat::funcfield
