#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unirat::conic {

// Bounded-degree exhaustive search over F_p[b,beta] for nontrivial solutions
// of P^2*beta*(1-beta^2) = R^2*b*(1-b^2) + Q^2*b*beta*(b^2-beta^2), up to
// common scalar multiples. The empty solution list is the no-rational-section
// evidence; the descent operation explains why it must be empty.

// Candidate coefficient vectors follow `candidate_monomials(dmax)` order:
// total degree ascending, then b-exponent descending within a degree.
std::vector<std::pair<int, int>> candidate_monomials(int dmax);  // (b-exp, beta-exp)

struct SearchSolution {
    std::vector<std::uint32_t> P, Q, R;
};

struct SearchReport {
    std::uint64_t prime = 0;
    int dmax = 0;
    int threads = 1;
    std::uint64_t candidates_pruned = 0;  // P/R prefixes killed by b=0 / beta=0 residue tests
    std::uint64_t candidates_tested = 0;  // full identity evaluations
    std::vector<SearchSolution> solutions;
};

// Throws unsupported_field for bad primes and budget_exceeded when the pruned
// enumeration would exceed ~1e9 identity tests. The report is a deterministic
// aggregate, independent of the thread count.
SearchReport no_solution_search(std::uint64_t p, int dmax, int threads = 1);

// Test seam: the dense-grid evaluation of
//   P^2*beta*(1-beta^2) - R^2*b*(1-b^2) - Q^2*b*beta*(b^2-beta^2)
// as a (2*dmax+5)^2 row-major grid (b-exponent major), so independent
// implementations can cross-check the search's arithmetic.
std::vector<std::uint32_t> identity_residual_grid(std::uint64_t p, int dmax,
                                                  const std::vector<std::uint32_t>& P,
                                                  const std::vector<std::uint32_t>& Q,
                                                  const std::vector<std::uint32_t>& R);

}  // namespace unirat::conic
