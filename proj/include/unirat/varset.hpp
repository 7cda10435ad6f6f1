#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unirat/errors.hpp"

namespace unirat {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

// Ordered list of variable names, fixed at construction. Every Poly carries a
// pointer to its VarSet; compatibility is checked by name list.
class VarSet {
public:
    static VarSetPtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a variable, or -1 when absent.
    int index_of(std::string_view name) const;

    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || *a == *b;
}

inline void require_same_vars(const VarSetPtr& a, const VarSetPtr& b, const char* where) {
    if (!same_vars(a, b)) throw varset_mismatch(std::string(where) + ": operands use different variable sets");
}

// Dense exponent vector; length equals the VarSet size.
struct Mono {
    std::vector<int> e;

    Mono() = default;
    explicit Mono(std::size_t nvars) : e(nvars, 0) {}
    explicit Mono(std::vector<int> exps) : e(std::move(exps)) {}

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    bool is_constant() const {
        for (int x : e)
            if (x) return false;
        return true;
    }

    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    bool divides(const Mono& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    // Quotient m / *this; only valid when divides(m).
    Mono quotient_of(const Mono& m) const {
        Mono r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = m.e[i] - e[i];
        return r;
    }

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

// Graded lexicographic comparison in the VarSet's declared variable order:
// higher total degree first, ties broken by the earliest differing variable.
inline int grlex_cmp(const Mono& a, const Mono& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) > 0; }
};

}  // namespace unirat
