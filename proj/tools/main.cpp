#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "unirat/identities.hpp"
#include "unirat/json_io.hpp"
#include "unirat/numlift.hpp"
#include "unirat/pipeline.hpp"
#include "unirat/search.hpp"

namespace {

using unirat::GaussRat;
using unirat::Json;
using unirat::Rat;

// Exit codes: 0 success, 1 verification failure, 2 usage / unsupported input.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw unirat::error("cannot open output file '" + path + "'");
        os = &file;
    }
    void line(const Json& j) { (*os) << j.dump() << "\n"; }
};

Json identity_json(const unirat::identities::IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    j["ok"] = r.ok;
    j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json ratfunc_json(const unirat::RatFunc<GaussRat>& f) { return unirat::ratfunc_to_json(f); }

Json map_json(const unirat::pipeline::UnirationalMap& phi) {
    Json j;
    j["vars"] = unirat::pipeline::stv_vars()->names();
    j["a"] = ratfunc_json(phi.a);
    j["alpha"] = ratfunc_json(phi.alpha);
    j["b"] = ratfunc_json(phi.b);
    j["beta"] = ratfunc_json(phi.beta);
    return j;
}

Json lift_json(const unirat::pipeline::SampleRecord& rec) {
    using unirat::pipeline::real_to_string;
    Json j;
    j["index"] = rec.index;
    j["point"] = Json{{"s", unirat::rat_to_string(rec.s)},
                      {"t", unirat::rat_to_string(rec.t)},
                      {"v", unirat::rat_to_string(rec.v)}};
    j["H"] = Json{{"a", rec.h_point[0].to_string()},
                  {"alpha", rec.h_point[1].to_string()},
                  {"b", rec.h_point[2].to_string()},
                  {"beta", rec.h_point[3].to_string()}};
    j["u1_left"] = rec.lift.u1_left.to_string();
    j["u1_right"] = rec.lift.u1_right.to_string();
    j["u1_agree_bits"] = rec.lift.u1_agree_bits;
    Json xs = Json::array(), ys = Json::array(), rs = Json::array();
    for (int k = 0; k < 3; ++k) {
        xs.push_back(rec.lift.x[k].to_string());
        ys.push_back(rec.lift.y[k].to_string());
        rs.push_back(real_to_string(rec.lift.residuals[k]));
    }
    j["x"] = std::move(xs);
    j["y"] = std::move(ys);
    j["residuals"] = std::move(rs);
    j["orbit_exact"] = rec.lift.orbit_exact;
    j["quartic_fiber"] = rec.quartic_fiber_ok;
    j["prec"] = rec.lift.precision_bits;
    j["rejected_draws"] = rec.rejected_draws;
    return j;
}

Json conic_json(const char* name, const unirat::conic::ConicDiag& c) {
    Json j;
    j["conic"] = name;
    j["vars"] = c.vars()->names();
    j["A"] = ratfunc_json(c.A);
    j["B"] = ratfunc_json(c.B);
    j["C"] = ratfunc_json(c.C);
    return j;
}

std::array<GaussRat, 3> parse_point(const std::string& text) {
    std::array<GaussRat, 3> pt;
    std::string rest = text;
    for (int k = 0; k < 3; ++k) {
        auto comma = rest.find(',');
        bool last = (k == 2);
        if (last != (comma == std::string::npos))
            throw unirat::parse_error("--point expects exactly three comma-separated rationals");
        std::string piece = last ? rest : rest.substr(0, comma);
        pt[static_cast<std::size_t>(k)] = GaussRat(unirat::rat_from_string(piece));
        if (!last) rest = rest.substr(comma + 1);
    }
    return pt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unirat: exact certificates for a conic-bundle threefold's unirational parametrization"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 0;
    unsigned prec = 128;
    std::uint64_t prime = 13;
    int max_degree = 1;
    int threads = 1;
    int count = 5;
    std::string point_text = "2,3,1";

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* verify = app.add_subcommand(
        "verify-identities", "run the symbolic identity suite; one JSON line per identity");
    add_out(verify);

    CLI::App* param = app.add_subcommand(
        "parametrize", "emit the unirational map A^3 -> H as exact rational functions");
    add_out(param);

    CLI::App* sample = app.add_subcommand(
        "sample", "sample points of H and lift them back to the product of curves");
    sample->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "seed for the deterministic generator");
    sample->add_option("--prec", prec, "working precision in bits");
    sample->add_option("--threads", threads,
                       "accepted for interface symmetry; sampling is sequential");
    add_out(sample);

    CLI::App* jac = app.add_subcommand("jacobian-rank",
                                       "exact Jacobian of the map at a rational point");
    jac->add_option("--point", point_text, "evaluation point s,t,v (rationals)");
    add_out(jac);

    CLI::App* nrp = app.add_subcommand(
        "no-rational-point",
        "exhaustive bounded-degree search over F_p[b,beta] for conic sections");
    nrp->add_option("--prime", prime, "prime modulus, must be 1 mod 4");
    nrp->add_option("--max-degree", max_degree, "degree bound for candidate polynomials");
    nrp->add_option("--threads", threads, "worker threads for the search");
    add_out(nrp);

    CLI::App* cinfo = app.add_subcommand("conic-info", "print the fibre conics of H and Q");
    add_out(cinfo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Output out;
        out.open(out_path);

        if (*verify) {
            bool all_ok = true;
            for (const auto& rep : unirat::identities::verify_all()) {
                all_ok = all_ok && rep.ok;
                out.line(identity_json(rep));
            }
            return all_ok ? kOk : kVerifyFail;
        }
        if (*param) {
            out.line(map_json(unirat::pipeline::build_phi()));
            return kOk;
        }
        if (*sample) {
            auto records = unirat::pipeline::sample_points(count, seed, prec);
            bool all_ok = true;
            for (const auto& rec : records) {
                all_ok = all_ok && rec.lift.orbit_exact && rec.quartic_fiber_ok &&
                         rec.lift.u1_agree_bits >= static_cast<long>(prec) - 16;
                out.line(lift_json(rec));
            }
            return all_ok ? kOk : kVerifyFail;
        }
        if (*jac) {
            auto pt = parse_point(point_text);
            auto rep = unirat::pipeline::jacobian_rank(unirat::pipeline::build_phi(), pt);
            Json j;
            j["point"] = Json::array({pt[0].to_string(), pt[1].to_string(), pt[2].to_string()});
            Json rows = Json::array();
            for (const auto& row : rep.matrix) {
                Json r = Json::array();
                for (const auto& x : row) r.push_back(x.to_string());
                rows.push_back(std::move(r));
            }
            j["matrix"] = std::move(rows);
            j["rank"] = rep.rank;
            out.line(j);
            return rep.rank == 3 ? kOk : kVerifyFail;
        }
        if (*nrp) {
            auto rep = unirat::conic::no_solution_search(prime, max_degree, threads);
            Json j;
            j["prime"] = rep.prime;
            j["dmax"] = rep.dmax;
            j["candidates_pruned"] = rep.candidates_pruned;
            j["candidates_tested"] = rep.candidates_tested;
            Json monos = Json::array();
            for (auto [i, k] : unirat::conic::candidate_monomials(max_degree))
                monos.push_back(Json::array({i, k}));
            j["monomials"] = std::move(monos);
            Json sols = Json::array();
            for (const auto& s : rep.solutions)
                sols.push_back(Json{{"P", s.P}, {"Q", s.Q}, {"R", s.R}});
            j["solutions"] = std::move(sols);
            out.line(j);
            return rep.solutions.empty() ? kOk : kVerifyFail;
        }
        if (*cinfo) {
            out.line(conic_json("H", unirat::conic::h_conic()));
            out.line(conic_json("Q", unirat::conic::q_conic()));
            return kOk;
        }
    } catch (const unirat::unsupported_field& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const unirat::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const unirat::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const unirat::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
    return kUsage;
}
