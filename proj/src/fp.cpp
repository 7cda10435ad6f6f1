#include "unirat/fp.hpp"

namespace unirat {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t unify(std::uint64_t pa, std::uint64_t pb) {
    if (pa == 0) return pb;
    if (pb == 0 || pa == pb) return pa;
    throw unsupported_field("mixed moduli " + std::to_string(pa) + " and " + std::to_string(pb));
}

}  // namespace

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // Deterministic Miller-Rabin for 64-bit inputs with the first 12 primes.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = fp_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FpElem::FpElem(std::uint64_t value, std::uint64_t modulus) : v(value), p(modulus) {
    if (p == 0) {
        if (v > 1) throw unsupported_field("unbound modular literal must be 0 or 1");
    } else {
        v %= p;
    }
}

FpElem FpElem::one() {
    FpElem e;
    e.v = 1;
    return e;
}

FpElem FpElem::make(std::int64_t value, std::uint64_t modulus) {
    std::int64_t m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return FpElem(static_cast<std::uint64_t>(r), modulus);
}

FpElem operator+(const FpElem& a, const FpElem& b) {
    std::uint64_t p = unify(a.p, b.p);
    if (p == 0) return FpElem(a.v + b.v, 0);
    std::uint64_t s = a.v % p + b.v % p;
    if (s >= p) s -= p;
    return FpElem(s, p);
}

FpElem operator-(const FpElem& a, const FpElem& b) {
    std::uint64_t p = unify(a.p, b.p);
    if (p == 0) {
        if (a.v < b.v) throw unsupported_field("negative unbound modular literal");
        return FpElem(a.v - b.v, 0);
    }
    std::uint64_t av = a.v % p, bv = b.v % p;
    return FpElem(av >= bv ? av - bv : av + p - bv, p);
}

FpElem operator-(const FpElem& a) {
    if (a.p == 0) {
        if (a.v == 0) return a;
        throw unsupported_field("negative unbound modular literal");
    }
    return FpElem(a.v == 0 ? 0 : a.p - a.v, a.p);
}

FpElem operator*(const FpElem& a, const FpElem& b) {
    std::uint64_t p = unify(a.p, b.p);
    if (p == 0) return FpElem(a.v * b.v, 0);
    return FpElem(mulmod(a.v % p, b.v % p, p), p);
}

FpElem FpElem::inverse() const {
    if (v == 0) throw division_by_zero();
    if (p == 0) return *this;  // the only invertible unbound literal is 1
    return FpElem(fp_pow(v, p - 2, p), p);
}

void require_search_prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw unsupported_field("modulus " + std::to_string(p) + " is not prime");
    if (p % 4 != 1)
        throw unsupported_field("prime " + std::to_string(p) +
                                " is not 1 mod 4; the field would lack a square root of -1");
}

FpElem fp_sqrt_minus_one(std::uint64_t p) {
    require_search_prime(p);
    // j = n^((p-1)/4) for any quadratic non-residue n.
    for (std::uint64_t n = 2; n < p; ++n) {
        if (fp_pow(n, (p - 1) / 2, p) == p - 1) {
            std::uint64_t j = fp_pow(n, (p - 1) / 4, p);
            return FpElem(j, p);
        }
    }
    throw unsupported_field("no quadratic non-residue found");  // unreachable for prime p > 2
}

}  // namespace unirat
