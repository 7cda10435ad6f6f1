#pragma once

#include "unirat/poly.hpp"

namespace unirat {

namespace detail {

// Pseudo-remainder of u by w, both viewed as univariate in `var` over the
// polynomial ring in the remaining variables: scales u by powers of w's
// leading coefficient until ordinary division steps go through exactly.
template <CoeffField K>
Poly<K> pseudo_rem(const Poly<K>& u, const Poly<K>& w, std::size_t var) {
    const int dw = w.degree_in(var);
    Poly<K> lw = w.coeff_of(var, dw);
    Poly<K> r = u;
    while (!r.is_zero()) {
        int dr = r.degree_in(var);
        if (dr < dw) break;
        Poly<K> lr = r.coeff_of(var, dr);
        Poly<K> shift = Poly<K>::variable(r.vars(), r.vars()->name(var), dr - dw);
        r = r * lw - lr * shift * w;
    }
    return r;
}

template <CoeffField K>
Poly<K> gcd_rec(const Poly<K>& f, const Poly<K>& g, int var);

// gcd of the coefficients of f w.r.t. `var`, computed in the remaining variables.
template <CoeffField K>
Poly<K> content_in(const Poly<K>& f, int var) {
    Poly<K> c(f.vars());
    for (int k = 0; k <= f.degree_in(static_cast<std::size_t>(var)); ++k) {
        Poly<K> part = f.coeff_of(static_cast<std::size_t>(var), k);
        if (part.is_zero()) continue;
        c = gcd_rec(c, part, var - 1);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

// Primitive-remainder-sequence gcd; all exponents of variables with index
// greater than `var` are zero in both inputs.
template <CoeffField K>
Poly<K> gcd_rec(const Poly<K>& f, const Poly<K>& g, int var) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (var < 0) return Poly<K>::one(f.vars());

    const std::size_t v = static_cast<std::size_t>(var);
    if (f.degree_in(v) == 0 && g.degree_in(v) == 0) return gcd_rec(f, g, var - 1);

    Poly<K> cf = content_in(f, var);
    Poly<K> cg = content_in(g, var);
    Poly<K> cont = gcd_rec(cf, cg, var - 1);

    Poly<K> u = f.divide_exact(cf);
    Poly<K> w = g.divide_exact(cg);
    if (u.degree_in(v) < w.degree_in(v)) std::swap(u, w);

    while (true) {
        if (w.is_zero()) break;
        if (w.degree_in(v) == 0) {
            // Nonzero remainder free of `var`: the primitive parts are coprime.
            w = Poly<K>::one(f.vars());
            break;
        }
        Poly<K> r = pseudo_rem(u, w, v);
        if (!r.is_zero()) r = r.divide_exact(content_in(r, var));
        u = std::move(w);
        w = std::move(r);
    }
    if (w.is_zero()) w = std::move(u);
    return cont * w;
}

}  // namespace detail

// Monic-normalized greatest common divisor; gcd(f, 0) is f normalized.
// Recursive content/primitive-part with a primitive remainder sequence in the
// last variable — all inputs here are tiny, so simplicity wins.
template <CoeffField K>
Poly<K> poly_gcd(const Poly<K>& f, const Poly<K>& g) {
    require_same_vars(f.vars(), g.vars(), "poly gcd");
    return detail::gcd_rec(f, g, static_cast<int>(f.vars()->size()) - 1).monic();
}

}  // namespace unirat
