#include "unirat/search.hpp"

#include <algorithm>
#include <thread>

#include "unirat/errors.hpp"
#include "unirat/fp.hpp"

namespace unirat::conic {

namespace {

// Dense bivariate polynomial over F_p on the grid (i,j), 0 <= i,j <= D,
// indexed i*(D+1)+j; i is the b-exponent, j the beta-exponent. Sized for the
// largest product the identity needs, so multiplications never overflow the
// grid.
struct Grid {
    int D;
    std::vector<std::uint32_t> c;

    explicit Grid(int d) : D(d), c(static_cast<std::size_t>((d + 1) * (d + 1)), 0) {}
    std::uint32_t& at(int i, int j) { return c[static_cast<std::size_t>(i * (D + 1) + j)]; }
    std::uint32_t at(int i, int j) const { return c[static_cast<std::size_t>(i * (D + 1) + j)]; }
    void clear() { std::fill(c.begin(), c.end(), 0u); }
};

void mul_into(const Grid& a, const Grid& b, std::uint64_t p, Grid& out) {
    out.clear();
    for (int i = 0; i <= a.D; ++i)
        for (int j = 0; j <= a.D; ++j) {
            std::uint64_t av = a.at(i, j);
            if (!av) continue;
            for (int k = 0; i + k <= b.D; ++k)
                for (int l = 0; j + l <= b.D; ++l) {
                    std::uint64_t bv = b.at(k, l);
                    if (!bv) continue;
                    std::uint32_t& slot = out.at(i + k, j + l);
                    slot = static_cast<std::uint32_t>((slot + av * bv) % p);
                }
        }
}

struct Fixtures {
    std::uint64_t p;
    int D;
    Grid beta_factor;  // beta*(1-beta^2) = beta - beta^3
    Grid b_factor;     // b*(1-b^2) = b - b^3
    Grid mixed;        // b*beta*(b^2-beta^2) = b^3*beta - b*beta^3

    Fixtures(std::uint64_t prime, int grid_deg)
        : p(prime), D(grid_deg), beta_factor(grid_deg), b_factor(grid_deg), mixed(grid_deg) {
        std::uint32_t neg1 = static_cast<std::uint32_t>(p - 1);
        beta_factor.at(0, 1) = 1;
        beta_factor.at(0, 3) = neg1;
        b_factor.at(1, 0) = 1;
        b_factor.at(3, 0) = neg1;
        mixed.at(3, 1) = 1;
        mixed.at(1, 3) = neg1;
    }
};

using Coeffs = std::vector<std::uint32_t>;

Grid to_grid(const Coeffs& v, const std::vector<std::pair<int, int>>& monos, int D) {
    Grid g(D);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) g.at(monos[k].first, monos[k].second) = v[k];
    return g;
}

// One enumeration step over coefficient vectors, odometer style; returns
// false after the last vector.
bool advance(Coeffs& v, std::uint64_t p) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < p) return true;
        v[i] = 0;
    }
    return false;
}

struct Job {
    // Precomputed difference P^2*beta*(1-beta^2) - R^2*b*(1-b^2); the inner
    // loop compares it against Q^2*b*beta*(b^2-beta^2).
    Grid lhs;
    Coeffs P, R;

    Job(Grid g, Coeffs pp, Coeffs rr) : lhs(std::move(g)), P(std::move(pp)), R(std::move(rr)) {}
};

struct JobResult {
    std::uint64_t tested = 0;
    std::vector<SearchSolution> solutions;
};

}  // namespace

std::vector<std::pair<int, int>> candidate_monomials(int dmax) {
    std::vector<std::pair<int, int>> monos;
    for (int d = 0; d <= dmax; ++d)
        for (int i = d; i >= 0; --i) monos.emplace_back(i, d - i);
    return monos;
}

std::vector<std::uint32_t> identity_residual_grid(std::uint64_t p, int dmax,
                                                  const std::vector<std::uint32_t>& P,
                                                  const std::vector<std::uint32_t>& Q,
                                                  const std::vector<std::uint32_t>& R) {
    const auto monos = candidate_monomials(dmax);
    if (P.size() != monos.size() || Q.size() != monos.size() || R.size() != monos.size())
        throw error("coefficient vector arity mismatch");
    const int D = 2 * dmax + 4;
    Fixtures fx(p, D);
    Grid gp = to_grid(P, monos, D), gq = to_grid(Q, monos, D), gr = to_grid(R, monos, D);
    Grid sq(D), term(D), acc(D);
    mul_into(gp, gp, p, sq);
    mul_into(sq, fx.beta_factor, p, acc);
    mul_into(gr, gr, p, sq);
    mul_into(sq, fx.b_factor, p, term);
    for (std::size_t k = 0; k < acc.c.size(); ++k)
        acc.c[k] = static_cast<std::uint32_t>((acc.c[k] + p - term.c[k]) % p);
    mul_into(gq, gq, p, sq);
    mul_into(sq, fx.mixed, p, term);
    for (std::size_t k = 0; k < acc.c.size(); ++k)
        acc.c[k] = static_cast<std::uint32_t>((acc.c[k] + p - term.c[k]) % p);
    return acc.c;
}

SearchReport no_solution_search(std::uint64_t p, int dmax, int threads) {
    unirat::require_search_prime(p);
    if (dmax < 0) throw error("max degree must be non-negative");
    if (threads < 1) threads = 1;

    const auto monos = candidate_monomials(dmax);
    const std::size_t m = monos.size();

    double space = 1;
    for (std::size_t i = 0; i < m; ++i) space *= static_cast<double>(p);
    if (space > 2e7)
        throw budget_exceeded("coefficient space of size ~" + std::to_string(space) +
                              " per polynomial exceeds the enumeration budget");

    const int D = 2 * dmax + 4;
    Fixtures fx(p, D);

    SearchReport report;
    report.prime = p;
    report.dmax = dmax;
    report.threads = threads;

    // Residue prefilters. A solution has P(0,beta) = 0 (set b=0 in the
    // identity; beta*(1-beta^2) is not a zero divisor) and R(b,0) = 0, i.e.
    // b | P and beta | R.
    auto b_divides = [&](const Coeffs& v) {
        for (std::size_t k = 0; k < m; ++k)
            if (v[k] && monos[k].first == 0) return false;
        return true;
    };
    auto beta_divides = [&](const Coeffs& v) {
        for (std::size_t k = 0; k < m; ++k)
            if (v[k] && monos[k].second == 0) return false;
        return true;
    };

    // Canonical representatives up to scalars: the first nonzero coefficient
    // of the concatenated (P, R, Q) vector equals 1. Enumerating P != 0
    // canonical, then P = 0 with R != 0 canonical, then P = R = 0 with Q != 0
    // canonical covers every ray exactly once.
    auto canonical_nonzero = [&](auto&& visit) {
        for (std::size_t f = 0; f < m; ++f) {
            Coeffs v(m, 0);
            v[f] = 1;
            if (m == f + 1) {
                visit(v);
                continue;
            }
            Coeffs tail(m - f - 1, 0);
            while (true) {
                for (std::size_t k = f + 1; k < m; ++k) v[k] = tail[k - f - 1];
                visit(v);
                if (!advance(tail, p)) break;
            }
        }
    };

    std::vector<Coeffs> p_survivors;  // canonical, b | P
    canonical_nonzero([&](const Coeffs& v) {
        if (b_divides(v))
            p_survivors.push_back(v);
        else
            ++report.candidates_pruned;
    });

    std::vector<Coeffs> r_survivors;  // all R (including 0) with beta | R
    {
        Coeffs v(m, 0);
        while (true) {
            if (beta_divides(v))
                r_survivors.push_back(v);
            else
                ++report.candidates_pruned;
            if (!advance(v, p)) break;
        }
    }
    std::vector<Coeffs> r_canonical;  // canonical nonzero R with beta | R (case P = 0)
    canonical_nonzero([&](const Coeffs& v) {
        if (beta_divides(v)) r_canonical.push_back(v);
    });

    const double q_space = space;
    const double estimated = static_cast<double>(p_survivors.size()) * r_survivors.size() * q_space +
                             static_cast<double>(r_canonical.size()) * q_space +
                             (space - 1) / static_cast<double>(p - 1);
    if (estimated > 1e9)
        throw budget_exceeded("estimated " + std::to_string(estimated) +
                              " identity tests exceed the 1e9 budget");

    // Assemble jobs: (P,R) pairs for case A, (0,R) for case B. Case C
    // (P = R = 0) forces Q^2*b*beta*(b^2-beta^2) = 0, handled inline below.
    std::vector<Job> jobs;
    Grid tmp1(D), tmp2(D);
    auto make_lhs = [&](const Coeffs& P, const Coeffs& R) {
        Grid gp = to_grid(P, monos, D);
        Grid gr = to_grid(R, monos, D);
        mul_into(gp, gp, p, tmp1);
        Grid lhs(D);
        mul_into(tmp1, fx.beta_factor, p, lhs);
        mul_into(gr, gr, p, tmp1);
        mul_into(tmp1, fx.b_factor, p, tmp2);
        for (std::size_t k = 0; k < lhs.c.size(); ++k)
            lhs.c[k] = static_cast<std::uint32_t>((lhs.c[k] + p - tmp2.c[k]) % p);
        return lhs;
    };
    const Coeffs zero_vec(m, 0);
    for (const auto& P : p_survivors)
        for (const auto& R : r_survivors) jobs.emplace_back(make_lhs(P, R), P, R);
    for (const auto& R : r_canonical) jobs.emplace_back(make_lhs(zero_vec, R), zero_vec, R);

    // Inner loop: enumerate every Q and compare Q^2*b*beta*(b^2-beta^2)
    // against the job's precomputed difference.
    auto run_job = [&](const Job& job, JobResult& out) {
        Grid gq(D), q2(D), rhs(D);
        Coeffs q(m, 0);
        while (true) {
            ++out.tested;
            gq.clear();
            for (std::size_t k = 0; k < m; ++k)
                if (q[k]) gq.at(monos[k].first, monos[k].second) = q[k];
            mul_into(gq, gq, p, q2);
            mul_into(q2, fx.mixed, p, rhs);
            if (rhs.c == job.lhs.c && !(job.P == zero_vec && job.R == zero_vec && q == zero_vec))
                out.solutions.push_back(SearchSolution{job.P, q, job.R});
            if (!advance(q, p)) break;
        }
    };

    std::vector<JobResult> results(jobs.size());
    if (threads == 1 || jobs.size() <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) run_job(jobs[i], results[i]);
    } else {
        std::vector<std::thread> pool;
        std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), jobs.size());
        for (std::size_t w = 0; w < nthreads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < jobs.size(); i += nthreads) run_job(jobs[i], results[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    // Case C: P = R = 0 and canonical Q. The identity reduces to
    // Q^2*b*beta*(b^2-beta^2) = 0, and F_p[b,beta] is a domain, so only the
    // excluded all-zero triple qualifies; enumerate anyway as evidence.
    JobResult case_c;
    {
        Grid gq(D), q2(D), rhs(D);
        canonical_nonzero([&](const Coeffs& q) {
            ++case_c.tested;
            gq.clear();
            for (std::size_t k = 0; k < m; ++k)
                if (q[k]) gq.at(monos[k].first, monos[k].second) = q[k];
            mul_into(gq, gq, p, q2);
            mul_into(q2, fx.mixed, p, rhs);
            bool zero = std::all_of(rhs.c.begin(), rhs.c.end(), [](std::uint32_t x) { return x == 0; });
            if (zero) case_c.solutions.push_back(SearchSolution{zero_vec, q, zero_vec});
        });
    }

    for (const auto& r : results) {
        report.candidates_tested += r.tested;
        for (const auto& s : r.solutions) report.solutions.push_back(s);
    }
    report.candidates_tested += case_c.tested;
    for (const auto& s : case_c.solutions) report.solutions.push_back(s);

    auto key = [](const SearchSolution& s) { return std::tie(s.P, s.R, s.Q); };
    std::sort(report.solutions.begin(), report.solutions.end(),
              [&](const SearchSolution& a, const SearchSolution& b) { return key(a) < key(b); });
    return report;
}

}  // namespace unirat::conic
