#include "unirat/conic.hpp"

namespace unirat::conic {

VarSetPtr h_vars() {
    static const VarSetPtr vars = VarSet::make({"a", "alpha", "b", "beta"});
    return vars;
}

VarSetPtr base_vars() {
    static const VarSetPtr vars = VarSet::make({"b", "beta"});
    return vars;
}

VarSetPtr st_vars() {
    static const VarSetPtr vars = VarSet::make({"s", "t"});
    return vars;
}

GPoly h_poly() {
    VarSetPtr v = h_vars();
    GPoly a = GPoly::variable(v, "a");
    GPoly al = GPoly::variable(v, "alpha");
    GPoly b = GPoly::variable(v, "b");
    GPoly be = GPoly::variable(v, "beta");
    GPoly one = GPoly::one(v);
    return a * a * be * (one - be * be) - al * al * b * (one - b * b) -
           b * be * (b * b - be * be);
}

GPoly h_poly_sym() {
    VarSetPtr v = h_vars();
    GPoly a = GPoly::variable(v, "a");
    GPoly al = GPoly::variable(v, "alpha");
    GPoly b = GPoly::variable(v, "b");
    GPoly be = GPoly::variable(v, "beta");
    return (a * a - b) * (al * al - be.pow(3)) - (al * al - be) * (a * a - b.pow(3));
}

ConicDiag::ConicDiag(GFun a, GFun b, GFun c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    require_same_vars(A.vars(), B.vars(), "conic");
    require_same_vars(A.vars(), C.vars(), "conic");
    if (A.is_zero() || B.is_zero()) throw error("conic coefficients A and B must be nonzero");
}

ConicDiag h_conic() {
    VarSetPtr v = base_vars();
    GFun b = GFun::variable(v, "b");
    GFun be = GFun::variable(v, "beta");
    GFun one = GFun::one(v);
    return ConicDiag(be * (one - be * be), b * (one - b * b), b * be * (b * b - be * be));
}

ConicDiag square_base_change(const ConicDiag& c, const std::vector<std::string>& new_names) {
    if (new_names.size() != 2 || c.vars()->size() != 2)
        throw varset_mismatch("square base change needs a 2-variable base");
    VarSetPtr target = VarSet::make({new_names[0], new_names[1]});
    std::map<std::string, GFun> sub;
    sub.emplace(c.vars()->name(0), GFun::variable(target, new_names[0], 2));
    sub.emplace(c.vars()->name(1), GFun::variable(target, new_names[1], 2));
    return ConicDiag(substitute(c.A, sub, target), substitute(c.B, sub, target),
                     substitute(c.C, sub, target));
}

ConicDiag q_conic() { return square_base_change(h_conic(), {"s", "t"}); }

bool on_conic(const ConicDiag& c, const GFun& a0, const GFun& alpha0) {
    return (c.A * a0 * a0 - c.B * alpha0 * alpha0 - c.C).is_zero();
}

ParamMap parametrize(const ConicDiag& c, const GFun& a0, const GFun& alpha0,
                     const std::string& slope_name) {
    if (!on_conic(c, a0, alpha0)) throw error("parametrize: base point is not on the conic");

    std::vector<std::string> names = c.vars()->names();
    names.push_back(slope_name);
    VarSetPtr ext = VarSet::make(std::move(names));

    GFun A = embed(c.A, ext), B = embed(c.B, ext);
    GFun p = embed(a0, ext), q = embed(alpha0, ext);
    GFun v = GFun::variable(ext, slope_name);
    GFun two = GFun::constant(ext, GaussRat(2));

    GFun pencil_den = A - B * v * v;
    if (pencil_den.is_zero()) throw degenerate_pencil("pencil denominator A - B*v^2 vanishes identically");

    // Second intersection of the line (a0 + w, alpha0 + v*w) with the conic;
    // the linear term uses A*a0^2 - B*alpha0^2 - C = 0 to drop the constant.
    GFun w = two * (B * q * v - A * p) / pencil_den;
    ParamMap m{p + w, q + v * w, p, q};
    return m;
}

CandidateTriple::CandidateTriple(GPoly p, GPoly q, GPoly r)
    : P(std::move(p)), Q(std::move(q)), R(std::move(r)) {
    require_same_vars(P.vars(), Q.vars(), "candidate triple");
    require_same_vars(P.vars(), R.vars(), "candidate triple");
    if (P.vars()->size() != 2) throw varset_mismatch("candidate triple lives over a 2-variable base");
}

bool CandidateTriple::coprime() const {
    GPoly g = poly_gcd(poly_gcd(P, Q), R);
    return !g.is_zero() && g.is_constant();
}

namespace {

// Substitution of one base variable by zero, as a polynomial operation.
GPoly at_zero(const GPoly& f, std::size_t var) {
    std::vector<GPoly::Term> terms;
    for (const auto& t : f.terms())
        if (t.m.e[var] == 0) terms.push_back(t);
    return GPoly::from_terms(f.vars(), std::move(terms));
}

}  // namespace

DescentReport forced_divisibility(const CandidateTriple& t) {
    VarSetPtr v = t.P.vars();
    const std::size_t ib = 0, ibe = 1;
    GPoly b = GPoly::variable(v, v->name(ib));
    GPoly be = GPoly::variable(v, v->name(ibe));
    GPoly one = GPoly::one(v);

    GPoly lhs = t.P * t.P * be * (one - be * be);
    GPoly rhs = t.R * t.R * b * (one - b * b) + t.Q * t.Q * b * be * (b * b - be * be);
    if (lhs != rhs)
        throw not_a_solution("triple does not satisfy the cleared conic identity");

    DescentReport rep(v);
    rep.vacuous = t.all_zero();
    rep.coprime_input = !t.all_zero() && t.coprime();

    rep.b_divides_P = at_zero(t.P, ib).is_zero() || t.P.is_zero();
    rep.beta_divides_R = at_zero(t.R, ibe).is_zero() || t.R.is_zero();
    if (rep.b_divides_P && !t.P.is_zero()) rep.P1 = t.P.divide_exact(b);
    if (rep.beta_divides_R && !t.R.is_zero()) rep.R1 = t.R.divide_exact(be);

    if (rep.b_divides_P && rep.beta_divides_R) {
        GPoly red_l = rep.P1 * rep.P1 * b * (one - be * be);
        GPoly red_r = rep.R1 * rep.R1 * be * (one - b * b) + t.Q * t.Q * (b * b - be * be);
        rep.reduced_identity_ok = (red_l == red_r);
    }

    rep.b_divides_R1 = at_zero(rep.R1, ib).is_zero();
    rep.b_divides_Q = at_zero(t.Q, ib).is_zero();
    rep.beta_divides_P1 = at_zero(rep.P1, ibe).is_zero();
    rep.beta_divides_Q = at_zero(t.Q, ibe).is_zero();

    rep.contradiction = rep.coprime_input && rep.b_divides_P && rep.beta_divides_R &&
                        rep.b_divides_R1 && rep.b_divides_Q && rep.beta_divides_P1 &&
                        rep.beta_divides_Q;
    return rep;
}

ForcedVanishingReport forced_vanishing_check(int degree) {
    if (degree < 0 || degree > 4) throw error("forced_vanishing_check supports degrees 0..4");

    // Ring k[beta, r0..rd, q0..qd] with the r_i, q_i as symbolic coefficients.
    std::vector<std::string> names = {"beta"};
    for (int i = 0; i <= degree; ++i) names.push_back("r" + std::to_string(i));
    for (int i = 0; i <= degree; ++i) names.push_back("q" + std::to_string(i));
    VarSetPtr v = VarSet::make(names);

    GPoly be = GPoly::variable(v, "beta");
    GPoly r1 = GPoly::zero(v), q = GPoly::zero(v);
    for (int i = 0; i <= degree; ++i) {
        r1 += GPoly::variable(v, "r" + std::to_string(i)) * be.pow(static_cast<unsigned>(i));
        q += GPoly::variable(v, "q" + std::to_string(i)) * be.pow(static_cast<unsigned>(i));
    }
    GPoly eq = r1 * r1 * be - q * q * be * be;

    ForcedVanishingReport rep;
    rep.degree = degree;

    while (!eq.is_zero()) {
        int k = eq.valuation(0);  // lowest surviving beta-power
        GPoly coeff = eq.coeff_of(0, k);
        // The coefficient must be the square of a single surviving symbol
        // (up to sign); anything else would break the parity argument.
        if (coeff.terms().size() != 1) return rep;
        const auto& term = coeff.terms()[0];
        GaussRat c = term.c;
        if (!(c == GaussRat(1) || c == GaussRat(-1))) return rep;
        int which = -1;
        for (std::size_t i = 1; i < v->size(); ++i) {
            if (term.m.e[i] == 0) continue;
            if (term.m.e[i] != 2 || which != -1) return rep;
            which = static_cast<int>(i);
        }
        if (which < 0) return rep;
        rep.forced_order.push_back(v->name(static_cast<std::size_t>(which)));

        // Substitute the forced coefficient by zero and continue.
        std::vector<GPoly::Term> kept;
        for (const auto& t : eq.terms())
            if (t.m.e[static_cast<std::size_t>(which)] == 0) kept.push_back(t);
        eq = GPoly::from_terms(v, std::move(kept));
    }
    rep.ok = static_cast<int>(rep.forced_order.size()) == 2 * (degree + 1);
    return rep;
}

}  // namespace unirat::conic
