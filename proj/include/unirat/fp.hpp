#pragma once

#include <cstdint>
#include <string>

#include "unirat/errors.hpp"

namespace unirat {

bool is_prime_u64(std::uint64_t n);

std::uint64_t fp_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

// Element of the prime field F_p, p == 1 (mod 4) so the field contains a
// square root of -1, mirroring the hypothesis on the base field k.
//
// The identities zero()/one() carry modulus 0 ("unbound literal"); they bind
// to the modulus of the first bound operand they meet. Only the values 0 and
// 1 may stay unbound.
struct FpElem {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    FpElem() = default;
    FpElem(std::uint64_t value, std::uint64_t modulus);

    static FpElem zero() { return FpElem(); }
    static FpElem one();
    static FpElem make(std::int64_t value, std::uint64_t modulus);

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    FpElem inverse() const;
    std::string to_string() const { return std::to_string(v); }

    friend FpElem operator+(const FpElem& a, const FpElem& b);
    friend FpElem operator-(const FpElem& a, const FpElem& b);
    friend FpElem operator-(const FpElem& a);
    friend FpElem operator*(const FpElem& a, const FpElem& b);
    friend FpElem operator/(const FpElem& a, const FpElem& b) { return a * b.inverse(); }

    friend bool operator==(const FpElem& a, const FpElem& b) {
        return a.v == b.v;  // moduli already unified by construction/ops
    }
    friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }
};

// Checks p prime with p == 1 (mod 4), then returns j with j^2 == -1 (mod p).
FpElem fp_sqrt_minus_one(std::uint64_t p);

// Throws unsupported_field unless p is prime and p == 1 (mod 4).
void require_search_prime(std::uint64_t p);

}  // namespace unirat
