#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "unirat/conic.hpp"

namespace unirat::pipeline {

using conic::GFun;
using conic::GPoly;

VarSetPtr stv_vars();  // [s, t, v]

// The dominant rational map A^3 -> H: (s,t,v) |-> (a, alpha, s^2, t^2),
// where (a, alpha) is the line-pencil parametrization of the pulled-back
// conic through its rational point (s, t).
struct UnirationalMap {
    GFun a, alpha, b, beta;
};

UnirationalMap build_phi();

struct CheckReport {
    std::string id;
    bool ok = false;
    std::string witness;
};

// Substitutes the map into the defining polynomial of H; the result must be
// the zero rational function.
CheckReport verify_on_H(const UnirationalMap& phi);

// Verifies (alpha - t) = v * (a - s) exactly, i.e. the slope variable is
// recovered from the map, so the parametrization of Q is birational and
// k(Q) = k(s,t,v).
CheckReport recover_v(const UnirationalMap& phi);

struct JacobianReport {
    std::array<GaussRat, 3> point;
    std::array<std::array<GaussRat, 3>, 4> matrix;  // rows a, alpha, b, beta; cols s, t, v
    int rank = 0;
};

// Exact 4x3 derivative matrix and its rank by fraction-free Gaussian
// elimination; rank 3 at a single point certifies generic rank 3, hence
// dominance onto the threefold H. Throws bad_sample when a denominator
// vanishes at the point.
JacobianReport jacobian_rank(const UnirationalMap& phi, const std::array<GaussRat, 3>& pt);

// Exact image of a point under the map; throws bad_sample on vanishing
// denominators.
std::array<GaussRat, 4> eval_map(const UnirationalMap& phi, const std::array<GaussRat, 3>& pt);

// The four preimages (+-s, +-t, v) must land in the fibre of H over
// (s^2, t^2); mirrors the degree-4 cover Q -> H.
bool quartic_fiber_check(const UnirationalMap& phi, const std::array<GaussRat, 3>& pt);

}  // namespace unirat::pipeline
