#include "unirat/pipeline.hpp"

namespace unirat::pipeline {

VarSetPtr stv_vars() {
    static const VarSetPtr vars = VarSet::make({"s", "t", "v"});
    return vars;
}

UnirationalMap build_phi() {
    conic::ConicDiag q = conic::q_conic();
    GFun s = GFun::variable(conic::st_vars(), "s");
    GFun t = GFun::variable(conic::st_vars(), "t");
    conic::ParamMap pm = conic::parametrize(q, s, t, "v");

    VarSetPtr stv = stv_vars();
    return UnirationalMap{embed(pm.a, stv), embed(pm.alpha, stv), GFun::variable(stv, "s", 2),
                          GFun::variable(stv, "t", 2)};
}

CheckReport verify_on_H(const UnirationalMap& phi) {
    std::map<std::string, GFun> sub = {
        {"a", phi.a}, {"alpha", phi.alpha}, {"b", phi.b}, {"beta", phi.beta}};
    GFun image = substitute(RatFunc<GaussRat>(conic::h_poly()), sub, stv_vars());
    CheckReport rep;
    rep.id = "phi-lands-on-H";
    rep.ok = image.is_zero();
    rep.witness = rep.ok ? "0" : image.to_string();
    return rep;
}

CheckReport recover_v(const UnirationalMap& phi) {
    VarSetPtr stv = stv_vars();
    GFun s = GFun::variable(stv, "s");
    GFun t = GFun::variable(stv, "t");
    GFun v = GFun::variable(stv, "v");

    GFun da = phi.a - s;
    GFun residue = (phi.alpha - t) - v * da;
    CheckReport rep;
    rep.id = "slope-recovery";
    rep.ok = residue.is_zero() && !da.is_zero();
    rep.witness = rep.ok ? "0" : residue.to_string();
    return rep;
}

std::array<GaussRat, 4> eval_map(const UnirationalMap& phi, const std::array<GaussRat, 3>& pt) {
    std::span<const GaussRat> sp(pt.data(), pt.size());
    try {
        return {phi.a.eval(sp), phi.alpha.eval(sp), phi.b.eval(sp), phi.beta.eval(sp)};
    } catch (const division_by_zero&) {
        throw bad_sample("map undefined at sample point (denominator vanishes)");
    }
}

JacobianReport jacobian_rank(const UnirationalMap& phi, const std::array<GaussRat, 3>& pt) {
    JacobianReport rep;
    rep.point = pt;
    const GFun* coords[4] = {&phi.a, &phi.alpha, &phi.b, &phi.beta};
    std::span<const GaussRat> sp(pt.data(), pt.size());
    try {
        for (int r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                rep.matrix[static_cast<std::size_t>(r)][c] = coords[r]->derivative(c).eval(sp);
    } catch (const division_by_zero&) {
        throw bad_sample("Jacobian undefined at sample point (denominator vanishes)");
    }

    // Exact Gaussian elimination over Q(i).
    auto mat = rep.matrix;
    int rank = 0;
    for (std::size_t col = 0; col < 3 && rank < 4; ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < 4 && mat[pivot][col].is_zero()) ++pivot;
        if (pivot == 4) continue;
        std::swap(mat[pivot], mat[static_cast<std::size_t>(rank)]);
        const GaussRat inv = mat[static_cast<std::size_t>(rank)][col].inverse();
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < 4; ++r) {
            if (mat[r][col].is_zero()) continue;
            GaussRat factor = mat[r][col] * inv;
            for (std::size_t c = col; c < 3; ++c)
                mat[r][c] = mat[r][c] - factor * mat[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
    }
    rep.rank = rank;
    return rep;
}

bool quartic_fiber_check(const UnirationalMap& phi, const std::array<GaussRat, 3>& pt) {
    GPoly h = conic::h_poly();
    const GaussRat minus_one(-1);
    std::array<GaussRat, 4> base{};
    bool first = true;
    for (int es : {0, 1}) {
        for (int et : {0, 1}) {
            std::array<GaussRat, 3> q = pt;
            if (es) q[0] = minus_one * q[0];
            if (et) q[1] = minus_one * q[1];
            std::array<GaussRat, 4> img = eval_map(phi, q);
            if (!h.eval(std::span<const GaussRat>(img.data(), img.size())).is_zero()) return false;
            if (first) {
                base = img;
                first = false;
            } else if (!(img[2] == base[2]) || !(img[3] == base[3])) {
                return false;  // left the fibre over (s^2, t^2)
            }
        }
    }
    return true;
}

}  // namespace unirat::pipeline
