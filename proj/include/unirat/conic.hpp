#pragma once

#include <optional>
#include <vector>

#include "unirat/rat.hpp"
#include "unirat/ratfunc.hpp"

namespace unirat::conic {

using GPoly = Poly<GaussRat>;
using GFun = RatFunc<GaussRat>;

// Ambient coordinates [a, alpha, b, beta] of the affine hypersurface H.
VarSetPtr h_vars();

// Defining polynomial of H in conic shape: a^2*beta*(1-beta^2)
// - alpha^2*b*(1-b^2) - b*beta*(b^2-beta^2).
GPoly h_poly();

// The symmetric form (a^2-b)(alpha^2-beta^3) - (alpha^2-beta)(a^2-b^3);
// equal to h_poly() up to a sign the identity suite determines.
GPoly h_poly_sym();

// Base coordinates.
VarSetPtr base_vars();  // [b, beta]
VarSetPtr st_vars();    // [s, t]

// Diagonal conic A*a^2 = B*alpha^2 + C in unknowns (a, alpha), with
// coefficients in the rational function field of a 2-variable base.
struct ConicDiag {
    GFun A, B, C;

    ConicDiag(GFun a, GFun b, GFun c);
    const VarSetPtr& vars() const { return A.vars(); }
};

// Generic fibre of H -> A^2: A = beta(1-beta^2), B = b(1-b^2),
// C = b*beta*(b^2-beta^2) over k(b, beta).
ConicDiag h_conic();

// Pullback along the degree-4 cover (first base variable -> n1^2, second
// -> n2^2). Applying it to h_conic() with names {s,t} gives the conic of Q.
ConicDiag square_base_change(const ConicDiag& c, const std::vector<std::string>& new_names);

ConicDiag q_conic();

bool on_conic(const ConicDiag& c, const GFun& a0, const GFun& alpha0);

// Line pencil through a rational point: a = a0 + w, alpha = alpha0 + v*w with
// w(v) = 2(B*alpha0*v - A*a0)/(A - B*v^2); substituting back into the conic
// gives exactly zero.
struct ParamMap {
    GFun a, alpha;    // over base vars + slope variable
    GFun a0, alpha0;  // base point, embedded in the extended VarSet
};

ParamMap parametrize(const ConicDiag& c, const GFun& a0, const GFun& alpha0,
                     const std::string& slope_name = "v");

// A hypothetical rational point of the generic fibre in cleared form:
// a = P/Q, alpha = R/Q with P, Q, R polynomials in the base variables.
struct CandidateTriple {
    GPoly P, Q, R;

    CandidateTriple(GPoly p, GPoly q, GPoly r);
    bool all_zero() const { return P.is_zero() && Q.is_zero() && R.is_zero(); }
    bool coprime() const;  // gcd of the three is constant
};

// One descent round on the cleared identity
//   P^2*beta*(1-beta^2) = R^2*b*(1-b^2) + Q^2*b*beta*(b^2-beta^2),
// plus the second-round divisibility conclusions that contradict coprimality.
struct DescentReport {
    explicit DescentReport(const VarSetPtr& vars) : P1(vars), R1(vars) {}

    bool vacuous = false;  // the zero triple
    bool b_divides_P = false;
    bool beta_divides_R = false;
    GPoly P1, R1;  // quotients P/b, R/beta
    bool reduced_identity_ok = false;
    bool b_divides_R1 = false, b_divides_Q = false;
    bool beta_divides_P1 = false, beta_divides_Q = false;
    bool coprime_input = false;
    // Every nonzero solution is divisible by b*beta throughout, so a coprime
    // nonzero solution is impossible.
    bool contradiction = false;
};

// Throws not_a_solution when the triple does not satisfy the identity.
DescentReport forced_divisibility(const CandidateTriple& t);

// Mechanized parity argument: for generic R1, Q of degree <= d in beta, the
// relation R1(beta)^2*beta - Q(beta)^2*beta^2 = 0 forces every coefficient to
// vanish, because the lowest surviving term is always the square of a single
// symbolic coefficient (odd beta-powers come from R1, even ones from Q).
struct ForcedVanishingReport {
    int degree = 0;
    bool ok = false;
    std::vector<std::string> forced_order;  // coefficients in the order they are forced to zero
};

ForcedVanishingReport forced_vanishing_check(int degree);

}  // namespace unirat::conic
