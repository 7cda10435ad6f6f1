#pragma once

#include <string>
#include <vector>

#include "unirat/funcfield.hpp"

namespace unirat::identities {

// Outcome of one symbolic check. The witness is the normal-form difference
// (or the offending element, for nonvanishing checks): "0" exactly when the
// verdict is true, so failures localize immediately.
struct IdentityReport {
    std::string id;
    bool ok = false;
    std::string witness;
    std::string note;
};

// Defining relation of the i-th curve factor reduces to zero.
IdentityReport check_relation(int i);

// The seven generators of the invariant subfield are fixed by g.
std::vector<IdentityReport> check_invariance();

// w1 = u1(u1-1)^2 and lam1 = u1(u1-1).
std::vector<IdentityReport> check_VIII_IX();

// a_j^2 - b_j = (x_j/x_1)((x_j^2-1)/(x_1^2-1) - 1), with the nonvanishing of
// a_j^2 - b_j and a_j^2 - b_j^3 (j = 2, 3).
std::vector<IdentityReport> check_X_and_lem3(int j);

// u1*(a_j^2 - b_j^3) = a_j^2 - b_j for j = 2,3; both fractions of the
// quotient expression equal u1; and the cross-multiplied relation between
// the j = 2 and j = 3 data.
std::vector<IdentityReport> check_XI_star();

// The two displayed forms of the defining polynomial of H agree up to a sign
// epsilon, which is computed rather than assumed; also asserts the expanded
// symmetric form has no a^2*alpha^2 term.
IdentityReport check_H_forms(int* epsilon_out = nullptr);

// The solved-for-a^2 forms of the relation inside k(Z), plus the
// nonvanishing of the denominator b_3(1 - b_3^2).
std::vector<IdentityReport> check_XIII_XIV();

// Valuation parity certificate: the right-hand side of the solved relation
// is not a square because numerator and denominator have b3-valuations 0 and
// 1, so their product has odd valuation.
IdentityReport check_not_square();

// The full suite, in display order.
std::vector<IdentityReport> verify_all();

// Deliberately perturbed variants of the checks above; here ok means "the
// mutation was detected", i.e. the perturbed identity has a nonzero witness.
std::vector<IdentityReport> mutation_suite();

}  // namespace unirat::identities
