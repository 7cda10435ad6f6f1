#pragma once

#include <stdexcept>
#include <string>

namespace unirat {

// Base class for all toolkit errors. Subcommands map these to exit codes:
// usage-class errors exit 2, verification failures exit 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// Operands declared over different variable sets.
struct varset_mismatch : error {
    explicit varset_mismatch(const std::string& what) : error(what) {}
};

struct unsupported_field : error {
    explicit unsupported_field(const std::string& what) : error(what) {}
};

struct undefined_valuation : error {
    undefined_valuation() : error("valuation of the zero polynomial is undefined") {}
};

struct degenerate_pencil : error {
    explicit degenerate_pencil(const std::string& what) : error(what) {}
};

struct not_a_solution : error {
    explicit not_a_solution(const std::string& what) : error(what) {}
};

struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

// A sample point hit a vanishing or ill-conditioned denominator; callers retry.
struct bad_sample : error {
    explicit bad_sample(const std::string& what) : error(what) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace unirat
