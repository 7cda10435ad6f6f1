#include "unirat/rat.hpp"

namespace unirat {

std::string rat_to_string(const Rat& q) {
    const Int& n = boost::multiprecision::numerator(q);
    const Int& d = boost::multiprecision::denominator(q);
    std::string s = n.str();
    if (d != 1) {
        s += '/';
        s += d.str();
    }
    return s;
}

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw parse_error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
        Int n(std::string(s.substr(0, slash)));
        Int d(std::string(s.substr(slash + 1)));
        if (d <= 0) throw parse_error("denominator must be positive in '" + std::string(s) + "'");
        return Rat(n, d);
    } catch (const std::exception& e) {
        throw parse_error("bad rational literal '" + std::string(s) + "': " + e.what());
    }
}

GaussRat GaussRat::inverse() const {
    Rat n = norm();
    if (n == 0) throw division_by_zero();
    return GaussRat(re / n, -im / n);
}

std::string GaussRat::to_string() const {
    std::string s = rat_to_string(re);
    if (im != 0) {
        Rat a = im < 0 ? Rat(-im) : im;
        s += (im < 0 ? '-' : '+');
        s += rat_to_string(a);
        s += "*i";
    }
    return s;
}

GaussRat GaussRat::from_string(std::string_view s) {
    if (s.empty()) throw parse_error("empty scalar literal");
    // The imaginary part, when present, ends in "*i" and starts at the last
    // top-level sign. The leading sign of the real part is position 0.
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        std::string_view body = s.substr(0, s.size() - 2);
        auto split = body.find_last_of("+-");
        if (split == std::string_view::npos || split == 0)
            throw parse_error("bad Gaussian rational literal '" + std::string(s) + "'");
        Rat re = rat_from_string(body.substr(0, split));
        Rat ima = rat_from_string(body.substr(split + 1));
        if (ima <= 0) throw parse_error("imaginary magnitude must be positive in '" + std::string(s) + "'");
        return GaussRat(re, body[split] == '-' ? Rat(-ima) : ima);
    }
    return GaussRat(rat_from_string(s));
}

}  // namespace unirat
