#include "unirat/identities.hpp"

#include "unirat/conic.hpp"

namespace unirat::identities {

using funcfield::CurveElem;
using funcfield::FieldElem;
using funcfield::GPoly;

namespace {

FieldElem f_int(long v) { return FieldElem::from_int(v); }

IdentityReport zero_report(std::string id, const FieldElem& witness, std::string note = "") {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.ok = witness.is_zero();
    rep.witness = rep.ok ? "0" : witness.to_string();
    rep.note = std::move(note);
    return rep;
}

IdentityReport nonzero_report(std::string id, const FieldElem& value, std::string note = "") {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.ok = !value.is_zero();
    rep.witness = rep.ok ? "0" : "unexpected zero: " + value.to_string();
    rep.note = std::move(note);
    return rep;
}

}  // namespace

IdentityReport check_relation(int i) {
    CurveElem nf(funcfield::curve_relation(i));
    IdentityReport rep;
    rep.id = "I(" + std::to_string(i) + ")";
    rep.ok = nf.is_zero();
    rep.witness = rep.ok ? "0" : nf.to_string();
    return rep;
}

std::vector<IdentityReport> check_invariance() {
    const auto& g = funcfield::generators();
    const std::pair<const char*, const FieldElem*> items[] = {
        {"b2", &g.b2}, {"b3", &g.b3}, {"a2", &g.a2},   {"a3", &g.a3},
        {"u1", &g.u1}, {"w1", &g.w1}, {"lam1", &g.lam1}};
    std::vector<IdentityReport> out;
    for (const auto& [name, f] : items)
        out.push_back(zero_report(std::string("II:g-fixes-") + name, f->apply_g() - *f));
    return out;
}

std::vector<IdentityReport> check_VIII_IX() {
    const auto& g = funcfield::generators();
    FieldElem one = f_int(1);
    std::vector<IdentityReport> out;
    out.push_back(zero_report("VIII", g.w1 - g.u1 * (g.u1 - one) * (g.u1 - one)));
    out.push_back(zero_report("IX", g.lam1 - g.u1 * (g.u1 - one)));
    return out;
}

std::vector<IdentityReport> check_X_and_lem3(int j) {
    if (j != 2 && j != 3) throw error("index j must be 2 or 3");
    const auto& g = funcfield::generators();
    const FieldElem& aj = (j == 2) ? g.a2 : g.a3;
    const FieldElem& bj = (j == 2) ? g.b2 : g.b3;
    FieldElem x1 = funcfield::coord("x1");
    FieldElem xj = funcfield::coord("x" + std::to_string(j));
    FieldElem one = f_int(1);

    FieldElem lhs = aj * aj - bj;
    FieldElem rhs = (xj / x1) * ((xj * xj - one) / (x1 * x1 - one) - one);
    std::string sj = std::to_string(j);

    std::vector<IdentityReport> out;
    out.push_back(zero_report("X(" + sj + ")", lhs - rhs));
    out.push_back(nonzero_report("lem3(" + sj + "):a" + sj + "^2-b" + sj,
                                 lhs, "nonzero normal-form numerator"));
    out.push_back(nonzero_report("lem3(" + sj + "):a" + sj + "^2-b" + sj + "^3",
                                 aj * aj - bj.pow(3), "checked directly by normal form"));
    return out;
}

std::vector<IdentityReport> check_XI_star() {
    const auto& g = funcfield::generators();
    std::vector<IdentityReport> out;
    for (int j : {2, 3}) {
        const FieldElem& aj = (j == 2) ? g.a2 : g.a3;
        const FieldElem& bj = (j == 2) ? g.b2 : g.b3;
        std::string sj = std::to_string(j);
        FieldElem num = aj * aj - bj;
        FieldElem den = aj * aj - bj.pow(3);
        out.push_back(zero_report("**(" + sj + ")", g.u1 * den - num));
        out.push_back(zero_report("XI(" + sj + ")", g.u1 - num / den));
    }
    // Cross relation obtained by eliminating u1 between the two fractions.
    FieldElem cross = (g.a2 * g.a2 - g.b2) * (g.a3 * g.a3 - g.b3.pow(3)) -
                      (g.a3 * g.a3 - g.b3) * (g.a2 * g.a2 - g.b2.pow(3));
    out.push_back(zero_report("XII", cross));
    return out;
}

IdentityReport check_H_forms(int* epsilon_out) {
    GPoly f1 = conic::h_poly_sym();
    GPoly f2 = conic::h_poly();

    IdentityReport rep;
    rep.id = "H-equiv";
    GPoly diff = f1 - f2;
    GPoly sum = f1 + f2;
    int eps = 0;
    if (diff.is_zero())
        eps = 1;
    else if (sum.is_zero())
        eps = -1;
    if (epsilon_out) *epsilon_out = eps;

    // The expanded symmetric form must not contain a^2*alpha^2: the two
    // quadratic leading blocks cancel.
    Mono aa(std::vector<int>{2, 2, 0, 0});
    bool has_aa = false;
    for (const auto& t : f1.terms())
        if (t.m == aa) has_aa = true;

    rep.ok = eps != 0 && !has_aa;
    rep.witness = rep.ok ? "0" : (eps == 0 ? diff.to_string() : "a^2*alpha^2 survives");
    rep.note = eps ? ("epsilon=" + std::string(eps == 1 ? "+1" : "-1")) : "no sign matches";
    return rep;
}

std::vector<IdentityReport> check_XIII_XIV() {
    const auto& g = funcfield::generators();
    FieldElem one = f_int(1);
    FieldElem num = g.a3 * g.a3 * g.b2 * (one - g.b2 * g.b2) +
                    g.b2 * g.b3 * (g.b2 * g.b2 - g.b3 * g.b3);
    FieldElem den = g.b3 * (one - g.b3 * g.b3);

    std::vector<IdentityReport> out;
    out.push_back(zero_report("XIII", g.a2 * g.a2 * den - num));
    out.push_back(nonzero_report("XIII:b3(1-b3^2)", den, "denominator nonzero in k(Z)"));
    out.push_back(zero_report("XIV", g.a2 * g.a2 - num / den));
    return out;
}

IdentityReport check_not_square() {
    // Work in the free polynomial ring k[a3, b2, b3].
    VarSetPtr v = VarSet::make({"a3", "b2", "b3"});
    GPoly a3 = GPoly::variable(v, "a3");
    GPoly b2 = GPoly::variable(v, "b2");
    GPoly b3 = GPoly::variable(v, "b3");
    GPoly one = GPoly::one(v);

    GPoly num = a3 * a3 * b2 * (one - b2 * b2) + b2 * b3 * (b2 * b2 - b3 * b3);
    GPoly den = b3 * (one - b3 * b3);
    const std::size_t ib3 = 2;
    int vn = num.valuation(ib3);
    int vd = den.valuation(ib3);

    IdentityReport rep;
    rep.id = "not-square";
    rep.ok = (vn == 0) && (vd == 1);
    rep.note = "val_b3(num)=" + std::to_string(vn) + " val_b3(den)=" + std::to_string(vd) +
               " val_b3(num*den)=" + std::to_string(vn + vd) + " (odd => not a square)";
    rep.witness = rep.ok ? "0" : "unexpected valuations";
    return rep;
}

std::vector<IdentityReport> verify_all() {
    std::vector<IdentityReport> out;
    for (int i = 1; i <= 3; ++i) out.push_back(check_relation(i));
    for (auto& r : check_invariance()) out.push_back(std::move(r));
    for (auto& r : check_VIII_IX()) out.push_back(std::move(r));
    for (int j : {2, 3})
        for (auto& r : check_X_and_lem3(j)) out.push_back(std::move(r));
    for (auto& r : check_XI_star()) out.push_back(std::move(r));
    for (auto& r : check_XIII_XIV()) out.push_back(std::move(r));
    out.push_back(check_H_forms());
    out.push_back(check_not_square());
    return out;
}

std::vector<IdentityReport> mutation_suite() {
    const auto& g = funcfield::generators();
    FieldElem one = f_int(1);
    FieldElem x1 = funcfield::coord("x1");
    FieldElem x2 = funcfield::coord("x2");
    FieldElem y1 = funcfield::coord("y1");
    FieldElem y2 = funcfield::coord("y2");

    auto detected = [](std::string id, const FieldElem& w, std::string note = "") {
        IdentityReport rep;
        rep.id = std::move(id);
        rep.ok = !w.is_zero();
        rep.witness = rep.ok ? "0" : "mutation NOT detected";
        rep.note = std::move(note);
        return rep;
    };

    std::vector<IdentityReport> out;

    {
        VarSetPtr v = funcfield::curve_vars();
        CurveElem mut(GPoly::variable(v, "y1", 2) - GPoly::variable(v, "x1", 3) -
                      GPoly::variable(v, "x1"));
        IdentityReport rep;
        rep.id = "mut:I-sign";
        rep.ok = !mut.is_zero();
        rep.witness = rep.ok ? "0" : "mutation NOT detected";
        out.push_back(rep);
    }
    out.push_back(detected("mut:VIII-lost-square", g.w1 - g.u1 * (g.u1 - one)));
    out.push_back(detected("mut:IX-extra-square", g.lam1 - g.u1 * (g.u1 - one) * (g.u1 - one)));
    out.push_back(detected("mut:X(2)-plus",
                           (g.a2 * g.a2 - g.b2) -
                               (x2 / x1) * ((x2 * x2 + one) / (x1 * x1 - one) - one)));
    out.push_back(detected("mut:X(3)-sign",
                           (g.a3 * g.a3 - g.b3) -
                               (funcfield::coord("x3") / x1) *
                                   ((funcfield::coord("x3").pow(2) - one) / (x1 * x1 - one) + one)));
    out.push_back(detected("mut:XI-shift", g.u1 - ((g.a2 * g.a2 - g.b2) / (g.a2 * g.a2 - g.b2.pow(3)) + one)));
    out.push_back(detected("mut:**-wrong-power", g.u1 * (g.a2 * g.a2 - g.b2 * g.b2) - (g.a2 * g.a2 - g.b2)));
    out.push_back(detected("mut:XII-sign",
                           (g.a2 * g.a2 - g.b2) * (g.a3 * g.a3 - g.b3.pow(3)) +
                               (g.a3 * g.a3 - g.b3) * (g.a2 * g.a2 - g.b2.pow(3))));
    out.push_back(detected("mut:XIII-last-sign",
                           g.a2 * g.a2 * g.b3 * (one - g.b3 * g.b3) -
                               g.a3 * g.a3 * g.b2 * (one - g.b2 * g.b2) +
                               g.b2 * g.b3 * (g.b2 * g.b2 - g.b3 * g.b3)));
    out.push_back(detected("mut:XIV-denominator",
                           g.a2 * g.a2 -
                               (g.a3 * g.a3 * g.b2 * (one - g.b2 * g.b2) +
                                g.b2 * g.b3 * (g.b2 * g.b2 - g.b3 * g.b3)) /
                                   (g.b3 * (one + g.b3 * g.b3))));

    {
        // Sign flip on the last term of the conic-shaped form: neither +1 nor
        // -1 matches the symmetric form any more.
        VarSetPtr v = conic::h_vars();
        GPoly a = GPoly::variable(v, "a");
        GPoly al = GPoly::variable(v, "alpha");
        GPoly b = GPoly::variable(v, "b");
        GPoly be = GPoly::variable(v, "beta");
        GPoly onep = GPoly::one(v);
        GPoly f2_mut = a * a * be * (onep - be * be) - al * al * b * (onep - b * b) +
                       b * be * (b * b - be * be);
        GPoly f1 = conic::h_poly_sym();
        IdentityReport rep;
        rep.id = "mut:H-last-sign";
        rep.ok = !(f1 - f2_mut).is_zero() && !(f1 + f2_mut).is_zero();
        rep.witness = rep.ok ? "0" : "mutation NOT detected";
        out.push_back(rep);
    }
    {
        // Squaring the denominator's b3 factor makes the product valuation
        // even, killing the non-square certificate.
        VarSetPtr v = VarSet::make({"a3", "b2", "b3"});
        GPoly a3 = GPoly::variable(v, "a3");
        GPoly b2 = GPoly::variable(v, "b2");
        GPoly b3 = GPoly::variable(v, "b3");
        GPoly onep = GPoly::one(v);
        GPoly num = a3 * a3 * b2 * (onep - b2 * b2) + b2 * b3 * (b2 * b2 - b3 * b3);
        GPoly den_mut = b3 * b3 * (onep - b3 * b3);
        IdentityReport rep;
        rep.id = "mut:not-square-even-valuation";
        rep.ok = ((num.valuation(2) + den_mut.valuation(2)) % 2) == 0;
        rep.witness = rep.ok ? "0" : "mutation NOT detected";
        rep.note = "certificate degenerates exactly as expected";
        out.push_back(rep);
    }
    out.push_back(detected("mut:invariance-y1y2", (y1 * y2).apply_g() - y1 * y2,
                           "y1*y2 is moved by g"));
    {
        FieldElem g2 = y1.apply_g().apply_g();
        IdentityReport rep;
        rep.id = "mut:g-squared-not-identity";
        rep.ok = !(g2 == y1);
        rep.witness = rep.ok ? "0" : "g^2 unexpectedly fixes y1";
        out.push_back(rep);
    }
    return out;
}

}  // namespace unirat::identities
