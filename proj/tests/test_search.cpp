#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unirat/fp.hpp"
#include "unirat/poly.hpp"
#include "unirat/rng.hpp"
#include "unirat/search.hpp"

using namespace unirat;
using namespace unirat::conic;

TEST_CASE("no nontrivial sections at degree 0: monomial supports are disjoint") {
    SearchReport rep = no_solution_search(5, 0);
    CHECK(rep.solutions.empty());
    CHECK(rep.candidates_tested > 0);
}

TEST_CASE("no nontrivial sections at degree 1 over F_5 and F_13") {
    for (std::uint64_t p : {5ull, 13ull}) {
        SearchReport rep = no_solution_search(p, 1);
        INFO("p = " << p);
        CHECK(rep.solutions.empty());
        CHECK(rep.prime == p);
    }
}

TEST_CASE("reports are identical across thread counts") {
    SearchReport one = no_solution_search(13, 1, 1);
    SearchReport four = no_solution_search(13, 1, 4);
    CHECK(one.candidates_pruned == four.candidates_pruned);
    CHECK(one.candidates_tested == four.candidates_tested);
    CHECK(one.solutions.size() == four.solutions.size());
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(no_solution_search(7, 1), unsupported_field);
    CHECK_THROWS_AS(no_solution_search(21, 1), unsupported_field);
    CHECK_THROWS_AS(no_solution_search(13, 4), budget_exceeded);
}

TEST_CASE("dense grid arithmetic matches the generic polynomial layer") {
    // Cross-check the search's dedicated F_p arithmetic against Poly<FpElem>
    // on random candidate triples: same residual polynomial for the cleared
    // identity.
    const std::uint64_t p = 13;
    const int dmax = 2;
    const auto monos = candidate_monomials(dmax);
    VarSetPtr v = VarSet::make({"b", "beta"});
    SplitMix64 rng(73);

    auto to_poly = [&](const std::vector<std::uint32_t>& coeffs) {
        std::vector<Poly<FpElem>::Term> terms;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (!coeffs[k]) continue;
            Mono m(std::vector<int>{monos[k].first, monos[k].second});
            terms.push_back({m, FpElem(coeffs[k], p)});
        }
        return Poly<FpElem>::from_terms(v, std::move(terms));
    };

    // Coefficients are constructed bound to p: the modulus-free one() that
    // variable() would inject cannot be negated.
    using FPoly = Poly<FpElem>;
    FPoly b = FPoly::monomial(v, Mono(std::vector<int>{1, 0}), FpElem(1, p));
    FPoly be = FPoly::monomial(v, Mono(std::vector<int>{0, 1}), FpElem(1, p));
    FPoly one = FPoly::constant(v, FpElem(1, p));

    for (int it = 0; it < 20; ++it) {
        std::vector<std::uint32_t> P(monos.size()), Q(monos.size()), R(monos.size());
        for (auto* vec : {&P, &Q, &R})
            for (auto& c : *vec) c = static_cast<std::uint32_t>(rng.below(p));

        auto grid = identity_residual_grid(p, dmax, P, Q, R);

        FPoly fp = to_poly(P), fq = to_poly(Q), fr = to_poly(R);
        FPoly residual = fp * fp * be * (one - be * be) - fr * fr * b * (one - b * b) -
                         fq * fq * b * be * (b * b - be * be);

        const int D = 2 * dmax + 4;
        FPoly from_grid = FPoly::zero(v);
        std::vector<Poly<FpElem>::Term> terms;
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D; ++j) {
                std::uint32_t c = grid[static_cast<std::size_t>(i * (D + 1) + j)];
                if (c) terms.push_back({Mono(std::vector<int>{i, j}), FpElem(c, p)});
            }
        from_grid = FPoly::from_terms(v, std::move(terms));
        CHECK(from_grid == residual);
    }
}

TEST_CASE("frozen counts for the degree-1 search over F_5") {
    // 31 canonical P rays, 30 killed by the b=0 residue test; 125 R vectors,
    // 120 killed by the beta=0 test. Survivors: P = b, R in {c*beta}.
    SearchReport rep = no_solution_search(5, 1);
    CHECK(rep.candidates_pruned == 30 + 120);
    // (1 P) x (5 R) x 125 Q + (1 canonical R) x 125 Q + 31 canonical Q = 781.
    CHECK(rep.candidates_tested == 781);
}
